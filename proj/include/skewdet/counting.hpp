#ifndef SKEWDET_COUNTING_HPP
#define SKEWDET_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace skewdet {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(unsigned q, unsigned e) {
    return boost::multiprecision::pow(BigInt(q), e);
}

// Division that is provably exact in every counting formula here; a nonzero
// remainder means a formula or caller is wrong.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt quo, rem;
    boost::multiprecision::divide_qr(num, den, quo, rem);
    if (rem != 0) throw std::logic_error("inexact division in a counting formula");
    return quo;
}

// Number of m x m skew-symmetric matrices over GF(q) of rank exactly r2.
// Skew ranks are even in odd characteristic, so odd r2 counts zero; the zero
// matrix is the unique matrix of rank 0.
inline BigInt rank_count(unsigned q, int r2, int m) {
    if (m < 0) throw std::invalid_argument("matrix size must be nonnegative");
    if (r2 % 2 != 0 || r2 < 0 || r2 > m) return 0;
    if (r2 == 0) return 1;
    int r = r2 / 2;
    BigInt num = big_pow(q, unsigned(r) * (r - 1));
    for (int i = 0; i < 2 * r; ++i) num *= big_pow(q, unsigned(m - i)) - 1;
    BigInt den = 1;
    for (int i = 0; i < r; ++i) den *= big_pow(q, unsigned(2 * (r - i))) - 1;
    return exact_div(num, den);
}

// Matrices of rank at most 2t.
inline BigInt bounded_rank_count(unsigned q, int t, int m) {
    if (t < 0 || 2 * t > m)
        throw std::invalid_argument("rank bound needs 0 <= 2t <= m, got t=" + std::to_string(t) +
                                    " m=" + std::to_string(m));
    BigInt s = 0;
    for (int r = 0; r <= t; ++r) s += rank_count(q, 2 * r, m);
    return s;
}

// Projective points of the rank <= 2t locus; this is the code length.
inline BigInt code_length(unsigned q, int t, int m) {
    if (t < 1 || 2 * t > m)
        throw std::invalid_argument("code parameters need 1 <= 2t <= m, got t=" + std::to_string(t) +
                                    " m=" + std::to_string(m));
    return exact_div(bounded_rank_count(q, t, m) - 1, BigInt(q) - 1);
}

// Gaussian binomial [m choose j]_q; zero outside 0 <= j <= m.
inline BigInt gaussian_binomial(unsigned q, int m, int j) {
    if (j < 0 || j > m) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < j; ++i) {
        num *= big_pow(q, unsigned(m - i)) - 1;
        den *= big_pow(q, unsigned(j - i)) - 1;
    }
    return exact_div(num, den);
}

inline BigInt skew_space_size(unsigned q, int m) {
    return big_pow(q, unsigned(std::size_t(m) * (m - 1) / 2));
}

// Per-rank census for one parameter set, plus the derived totals.
struct CountTable {
    unsigned q = 0;
    int m = 0, t = 0;
    std::map<int, BigInt> by_rank;  // every even rank 0..2*floor(m/2)
    BigInt total;                   // matrices of rank <= 2t
    BigInt length;                  // projective points, (total - 1)/(q - 1)
};

inline CountTable count_table(unsigned q, int t, int m) {
    CountTable tb;
    tb.q = q;
    tb.m = m;
    tb.t = t;
    for (int r2 = 0; r2 <= m; r2 += 2) tb.by_rank[r2] = rank_count(q, r2, m);
    tb.total = bounded_rank_count(q, t, m);
    tb.length = code_length(q, t, m);
    return tb;
}

}  // namespace skewdet

#endif
