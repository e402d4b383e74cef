#ifndef SKEWDET_WEIGHTS_HPP
#define SKEWDET_WEIGHTS_HPP

#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "skewdet/counting.hpp"

namespace skewdet {

// How the minimum-weight codewords arise.
enum class MinWeightRegime {
    Rank2Class,  // exactly the codewords of rank-2 matrices
    AllNonzero,  // the code has a single nonzero weight
};

inline const char* regime_string(MinWeightRegime r) {
    return r == MinWeightRegime::Rank2Class ? "rank-2 class" : "all nonzero codewords";
}

struct WeightReport {
    unsigned q = 0;
    int m = 0, t = 0;
    std::map<int, BigInt> affine;      // k -> weight shared by all rank-2k matrices
    std::map<int, BigInt> projective;  // k -> affine / (q - 1)
    BigInt min_distance;
    BigInt min_weight_count;
    MinWeightRegime regime = MinWeightRegime::Rank2Class;
    int distinct_weight_count = 0;
    // Whether the projective weights happen to increase strictly with the
    // rank class; observed to fail for some parameters, so reported, not
    // asserted.
    bool increasing_by_rank = false;
};

// Weight bookkeeping for one field size q. Everything is exact integer
// arithmetic; the recursion below is memoized, so a table instance is cheap
// to reuse across parameter sets (but not thread-safe).
class WeightTable {
public:
    explicit WeightTable(unsigned q) : q_(q) {
        if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd prime power >= 3");
    }

    unsigned q() const { return q_; }

    // Number of rank-2r skew m x m matrices A with tr(E A) != 0, where E is
    // the rank-2k standard form. Recurrence on (k, m): splitting off the two
    // leading rows/columns of A writes the count in terms of the same
    // quantity in size m-2 plus rank-count corrections:
    //
    //   q^{2r} S(k-1, r, m-2)
    //   + (q-1) q^{2r-1} (n(2r, m-1) - n(2r, m-2))
    //   + (q-1) q^{m-2}  n(2r-2, m-1)
    //   - q^{2r-2} S(k-1, r-1, m-2)
    //   - (q-1) q^{2r-3} (n(2r-2, m-1) - n(2r-2, m-2))
    //
    // with n the exact-rank count. At r = 1 the last two terms vanish
    // identically (there are no rank-0 corrections), so they are skipped
    // rather than evaluated with a negative exponent.
    BigInt support_count(int k, int r, int m) {
        if (k < 0 || m < 0 || 2 * k > m)
            throw std::invalid_argument("support_count needs 0 <= 2k <= m");
        if (k == 0) return 0;  // zero pivot form, the trace vanishes identically
        if (r <= 0 || 2 * r > m) return 0;
        auto key = std::tuple{k, r, m};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const unsigned q = q_;
        BigInt v = big_pow(q, 2 * r) * support_count(k - 1, r, m - 2);
        v += BigInt(q - 1) * big_pow(q, 2 * r - 1) *
             (rank_count(q, 2 * r, m - 1) - rank_count(q, 2 * r, m - 2));
        v += BigInt(q - 1) * big_pow(q, unsigned(m - 2)) * rank_count(q, 2 * r - 2, m - 1);
        if (r >= 2) {
            v -= big_pow(q, 2 * r - 2) * support_count(k - 1, r - 1, m - 2);
            v -= BigInt(q - 1) * big_pow(q, 2 * r - 3) *
                 (rank_count(q, 2 * r - 2, m - 1) - rank_count(q, 2 * r - 2, m - 2));
        } else {
            assert(rank_count(q, 2 * r - 2, m - 1) == rank_count(q, 2 * r - 2, m - 2));
        }
        if (v < 0) throw std::logic_error("negative count from the weight recursion");
        memo_.emplace(key, v);
        return v;
    }

    // The share of the class weight carried by the top rank class:
    // P(k, r, m) = q^{2r} S(k-1, r, m-2) + (q-1) q^{2r-1} (n(2r,m-1) - n(2r,m-2)).
    BigInt partial_weight(int k, int r, int m) {
        if (k < 1 || 2 * k > m || r < 0)
            throw std::invalid_argument("partial_weight needs 1 <= 2k <= m and r >= 0");
        if (r == 0) return 0;
        return big_pow(q_, 2 * r) * support_count(k - 1, r, m - 2) +
               BigInt(q_ - 1) * big_pow(q_, 2 * r - 1) *
                   (rank_count(q_, 2 * r, m - 1) - rank_count(q_, 2 * r, m - 2));
    }

    // Affine weight shared by the codewords of every rank-2k matrix in the
    // rank <= 2t code on m x m skew matrices.
    BigInt class_weight(int k, int t, int m) {
        check_class(k, t, m);
        return partial_weight(k, t, m) +
               BigInt(q_ - 1) * big_pow(q_, unsigned(m - 2)) * bounded_rank_count(q_, t - 1, m - 1);
    }

    // Same quantity summed rank class by rank class; kept as an independent
    // evaluation path for cross-checks.
    BigInt class_weight_by_ranks(int k, int t, int m) {
        check_class(k, t, m);
        BigInt s = 0;
        for (int r = 1; r <= t; ++r) s += support_count(k, r, m);
        return s;
    }

    // Minimum distance of the projective code:
    // d = (q^{m-2t} - 1) q^{m+2t-4} n(2t-2, m-2) + q^{m-2} N(2t-2, m-1).
    BigInt min_distance(int t, int m) {
        if (t < 1 || 2 * t > m) throw std::invalid_argument("min_distance needs 1 <= 2t <= m");
        BigInt d = (big_pow(q_, unsigned(m - 2 * t)) - 1) * big_pow(q_, unsigned(m + 2 * t - 4)) *
                       rank_count(q_, 2 * t - 2, m - 2) +
                   big_pow(q_, unsigned(m - 2)) * bounded_rank_count(q_, t - 1, m - 1);
        // the closed form must agree with the smallest projective class weight
        BigInt lo = -1;
        for (int k = 1; 2 * k <= m; ++k) {
            BigInt w = exact_div(class_weight(k, t, m), BigInt(q_) - 1);
            if (lo < 0 || w < lo) lo = w;
        }
        if (d != lo) throw std::logic_error("minimum distance formula disagrees with class weights");
        return d;
    }

    // Number of minimum-weight codewords. When 2t < 2*floor(m/2) the minimum
    // is attained exactly on the rank-2 class; when the rank bound saturates
    // (2t = m or m-1) every nonzero codeword has the same weight.
    std::pair<BigInt, MinWeightRegime> min_weight_count(int t, int m) {
        if (t < 1 || 2 * t > m) throw std::invalid_argument("min_weight_count needs 1 <= 2t <= m");
        if (t == m / 2) return {skew_space_size(q_, m) - 1, MinWeightRegime::AllNonzero};
        return {rank_count(q_, 2, m), MinWeightRegime::Rank2Class};
    }

    WeightReport report(int t, int m) {
        if (t < 1 || 2 * t > m) throw std::invalid_argument("report needs 1 <= 2t <= m");
        WeightReport rep;
        rep.q = q_;
        rep.m = m;
        rep.t = t;
        const BigInt qm1 = BigInt(q_) - 1;
        std::set<BigInt> distinct;
        for (int k = 1; 2 * k <= m; ++k) {
            BigInt w = class_weight(k, t, m);
            if (w != class_weight_by_ranks(k, t, m))
                throw std::logic_error("class weight paths disagree");
            rep.affine[k] = w;
            rep.projective[k] = exact_div(w, qm1);
            distinct.insert(rep.projective[k]);
        }
        rep.distinct_weight_count = int(distinct.size());
        if (rep.distinct_weight_count > m / 2)
            throw std::logic_error("more distinct weights than rank classes");
        rep.min_distance = min_distance(t, m);
        if (rep.projective.at(1) != rep.min_distance)
            throw std::logic_error("rank-2 class does not attain the minimum distance");
        rep.increasing_by_rank = true;
        for (int k = 2; 2 * k <= m; ++k)
            if (rep.projective.at(k) <= rep.projective.at(k - 1)) rep.increasing_by_rank = false;
        std::tie(rep.min_weight_count, rep.regime) = min_weight_count(t, m);
        return rep;
    }

private:
    void check_class(int k, int t, int m) const {
        if (k < 1 || 2 * k > m || t < 1 || 2 * t > m)
            throw std::invalid_argument("class weight needs 1 <= 2k <= m and 1 <= 2t <= m");
    }

    unsigned q_;
    std::map<std::tuple<int, int, int>, BigInt> memo_;
};

}  // namespace skewdet

#endif
