#ifndef SKEWDET_ORACLE_HPP
#define SKEWDET_ORACLE_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "skewdet/code.hpp"
#include "skewdet/field.hpp"
#include "skewdet/skew_matrix.hpp"

// Brute-force reference implementations. Dumb and slow on purpose: they share
// no elimination or trace code with the main paths, so agreement is evidence
// rather than tautology. Everything here streams the full matrix space, with
// an optional worker count; partial results merge in a fixed order, so output
// is deterministic for a given parameter set.
namespace skewdet::oracle {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                        unsigned workers) {
    if (workers < 1) workers = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
    std::uint64_t chunk = total / workers, rem = total % workers, begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (w < rem ? 1 : 0);
        parts.emplace_back(begin, begin + len);
        begin += len;
    }
    return parts;
}

// Rank by column reduction with full sweeps (the main path reduces rows and
// only below the pivot). Destroys the buffer.
inline int rank_by_columns(const Field& f, std::vector<Elem>& mat, int m) {
    int rank = 0;
    for (int row = 0; row < m; ++row) {
        int piv = -1;
        for (int c = rank; c < m; ++c)
            if (mat[std::size_t(row) * m + c] != 0) {
                piv = c;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int r = 0; r < m; ++r)
                std::swap(mat[std::size_t(r) * m + piv], mat[std::size_t(r) * m + rank]);
        Elem ip = f.inv(mat[std::size_t(row) * m + rank]);
        for (int r = 0; r < m; ++r)
            mat[std::size_t(r) * m + rank] = f.mul(ip, mat[std::size_t(r) * m + rank]);
        for (int c = 0; c < m; ++c) {
            if (c == rank) continue;
            Elem v = mat[std::size_t(row) * m + c];
            if (v == 0) continue;
            for (int r = 0; r < m; ++r)
                mat[std::size_t(r) * m + c] =
                    f.sub(mat[std::size_t(r) * m + c], f.mul(v, mat[std::size_t(r) * m + rank]));
        }
        ++rank;
    }
    return rank;
}

// tr(A B) summed entry by entry over the full dense product.
inline Elem product_trace(const Field& f, const std::vector<Elem>& A, const std::vector<Elem>& B,
                          int m) {
    Elem tr = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            tr = f.add(tr, f.mul(A[std::size_t(i) * m + j], B[std::size_t(j) * m + i]));
    return tr;
}

template <typename Body>
inline void run_partitioned(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& parts,
                            Body body) {
    if (parts.size() == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(parts.size());
    for (std::size_t w = 0; w < parts.size(); ++w) threads.emplace_back(body, w);
    for (auto& th : threads) th.join();
}

// Census of ranks over the whole matrix space.
inline std::map<int, std::uint64_t> rank_histogram(const Field& f, int m,
                                                   std::uint64_t budget = kDefaultEnumerationBudget,
                                                   unsigned workers = 1) {
    std::uint64_t total = checked_space_size(f.q(), m, budget);
    auto parts = split_range(total, workers);
    std::vector<std::vector<std::uint64_t>> local(parts.size(),
                                                  std::vector<std::uint64_t>(std::size_t(m) + 1, 0));
    run_partitioned(parts, [&](std::size_t w) {
        SkewRange range(f, m, parts[w].first, parts[w].second);
        SkewMatrix a;
        std::vector<Elem> buf;
        while (range.next(a)) {
            to_dense_into(f, a, buf);
            ++local[w][std::size_t(rank_by_columns(f, buf, m))];
        }
    });
    std::map<int, std::uint64_t> out;
    for (const auto& h : local)
        for (int r = 0; r <= m; ++r)
            if (h[std::size_t(r)]) out[r] += h[std::size_t(r)];
    return out;
}

// |{A of rank 2r : tr(E A) != 0}| for E the rank-2k standard form.
inline std::uint64_t support_count(const Field& f, int k, int r, int m,
                                   std::uint64_t budget = kDefaultEnumerationBudget) {
    auto pivot = to_dense(f, standard_form(m, k));
    SkewRange range = enumerate_all(f, m, budget);
    SkewMatrix a;
    std::vector<Elem> buf;
    std::uint64_t count = 0;
    while (range.next(a)) {
        to_dense_into(f, a, buf);
        if (product_trace(f, pivot, buf, m) == 0) continue;
        if (rank_by_columns(f, buf, m) == 2 * r) ++count;
    }
    return count;
}

// All support counts for one m in a single pass: table[k][r] for
// k, r in 1..floor(m/2).
inline std::vector<std::vector<std::uint64_t>> support_table(
    const Field& f, int m, std::uint64_t budget = kDefaultEnumerationBudget, unsigned workers = 1) {
    const int half = m / 2;
    std::vector<std::vector<Elem>> pivots;
    for (int k = 1; k <= half; ++k) pivots.push_back(to_dense(f, standard_form(m, k)));

    std::uint64_t total = checked_space_size(f.q(), m, budget);
    auto parts = split_range(total, workers);
    std::vector<std::vector<std::vector<std::uint64_t>>> local(
        parts.size(), std::vector<std::vector<std::uint64_t>>(
                          std::size_t(half) + 1, std::vector<std::uint64_t>(std::size_t(half) + 1, 0)));
    run_partitioned(parts, [&](std::size_t w) {
        SkewRange range(f, m, parts[w].first, parts[w].second);
        SkewMatrix a;
        std::vector<Elem> buf;
        std::vector<char> nonzero(std::size_t(half) + 1, 0);
        while (range.next(a)) {
            to_dense_into(f, a, buf);
            for (int k = 1; k <= half; ++k)
                nonzero[std::size_t(k)] = product_trace(f, pivots[std::size_t(k) - 1], buf, m) != 0;
            int r2 = rank_by_columns(f, buf, m);
            if (r2 == 0) continue;
            for (int k = 1; k <= half; ++k)
                if (nonzero[std::size_t(k)]) ++local[w][std::size_t(k)][std::size_t(r2 / 2)];
        }
    });
    std::vector<std::vector<std::uint64_t>> out(std::size_t(half) + 1,
                                                std::vector<std::uint64_t>(std::size_t(half) + 1, 0));
    for (const auto& tab : local)
        for (int k = 1; k <= half; ++k)
            for (int r = 1; r <= half; ++r)
                out[std::size_t(k)][std::size_t(r)] += tab[std::size_t(k)][std::size_t(r)];
    return out;
}

// Exhaustive weight distribution: every matrix F is evaluated against every
// generator column through the full product trace.
inline std::map<std::uint64_t, std::uint64_t> weight_enumerator(
    const CodeParams& cp, const GeneratorMatrix& g,
    std::uint64_t budget = kDefaultEnumerationBudget, unsigned workers = 1) {
    const Field& f = cp.field;
    const int m = cp.m;
    std::vector<std::vector<Elem>> cols;
    cols.reserve(g.cols);
    for (const auto& col : g.columns) cols.push_back(to_dense(f, SkewMatrix(m, col)));

    std::uint64_t total = checked_space_size(f.q(), m, budget);
    auto parts = split_range(total, workers);
    std::vector<std::map<std::uint64_t, std::uint64_t>> local(parts.size());
    run_partitioned(parts, [&](std::size_t w) {
        SkewRange range(f, m, parts[w].first, parts[w].second);
        SkewMatrix a;
        std::vector<Elem> buf;
        while (range.next(a)) {
            to_dense_into(f, a, buf);
            std::uint64_t weight = 0;
            for (const auto& col : cols)
                if (product_trace(f, buf, col, m) != 0) ++weight;
            ++local[w][weight];
        }
    });
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& h : local)
        for (const auto& [wgt, cnt] : h) out[wgt] += cnt;
    return out;
}

inline Elem det_dense(const Field& f, std::vector<Elem> mat, int n) {
    Elem det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (mat[std::size_t(i) * n + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(mat[std::size_t(piv) * n + j], mat[std::size_t(c) * n + j]);
            det = f.neg(det);
        }
        Elem pv = mat[std::size_t(c) * n + c];
        det = f.mul(det, pv);
        Elem ip = f.inv(pv);
        for (int i = c + 1; i < n; ++i) {
            Elem v = mat[std::size_t(i) * n + c];
            if (v == 0) continue;
            Elem factor = f.mul(v, ip);
            for (int j = c; j < n; ++j)
                mat[std::size_t(i) * n + j] =
                    f.sub(mat[std::size_t(i) * n + j], f.mul(factor, mat[std::size_t(c) * n + j]));
        }
    }
    return det;
}

// rank(A) <= 2t iff every (2t+1) x (2t+1) minor vanishes. Exponential in m;
// capped at m <= 6 where the scan is still cheap.
inline bool rank_at_most_by_minors(const Field& f, const SkewMatrix& a, int t) {
    if (t < 0) throw std::invalid_argument("rank bound must be nonnegative");
    if (a.m > 6) throw std::invalid_argument("minor scan is limited to m <= 6");
    const int m = a.m;
    const int s = 2 * t + 1;
    if (s > m) return true;  // no minors of that size, the bound is vacuous
    auto d = to_dense(f, a);

    auto next_comb = [m](std::vector<int>& c) {
        int i = int(c.size()) - 1;
        while (i >= 0 && c[std::size_t(i)] == m - int(c.size()) + i) --i;
        if (i < 0) return false;
        ++c[std::size_t(i)];
        for (std::size_t j = std::size_t(i) + 1; j < c.size(); ++j)
            c[j] = c[j - 1] + 1;
        return true;
    };

    std::vector<int> rows(static_cast<std::size_t>(s));
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<Elem> sub(std::size_t(s) * s);
    do {
        std::vector<int> colsel(static_cast<std::size_t>(s));
        std::iota(colsel.begin(), colsel.end(), 0);
        do {
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j)
                    sub[std::size_t(i) * s + j] =
                        d[std::size_t(rows[std::size_t(i)]) * m + colsel[std::size_t(j)]];
            if (det_dense(f, sub, s) != 0) return false;
        } while (next_comb(colsel));
    } while (next_comb(rows));
    return true;
}

}  // namespace skewdet::oracle

#endif
