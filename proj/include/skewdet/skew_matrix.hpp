#ifndef SKEWDET_SKEW_MATRIX_HPP
#define SKEWDET_SKEW_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdet/field.hpp"

namespace skewdet {

inline std::size_t pair_count(int m) { return std::size_t(m) * (m - 1) / 2; }

// Slot of the pair (i, j), 0-based i < j, in the fixed entry order
// (0,1),(0,2),...,(0,m-1),(1,2),...,(m-2,m-1).
inline std::size_t entry_slot(int m, int i, int j) {
    assert(0 <= i && i < j && j < m);
    return std::size_t(i) * (2 * m - i - 1) / 2 + std::size_t(j - i - 1);
}

// An m x m skew-symmetric matrix, stored as its strictly-upper entries in the
// fixed entry order. The diagonal is zero and the lower triangle is the
// negated mirror; neither is stored.
struct SkewMatrix {
    int m = 0;
    std::vector<Elem> entries;

    SkewMatrix() = default;
    explicit SkewMatrix(int size) : m(size), entries(pair_count(size), 0) {
        if (size < 1) throw std::invalid_argument("matrix size must be positive");
    }
    SkewMatrix(int size, std::vector<Elem> data) : m(size), entries(std::move(data)) {
        if (size < 1) throw std::invalid_argument("matrix size must be positive");
        if (entries.size() != pair_count(size))
            throw std::invalid_argument("entry vector has the wrong length");
    }

    bool operator==(const SkewMatrix&) const = default;
};

// Basis matrix with a single 1 in position (row, col), 1-based, row < col
// (and the mirrored -1 below the diagonal).
inline SkewMatrix elementary(int m, int row, int col) {
    if (!(1 <= row && row < col && col <= m))
        throw std::invalid_argument("elementary entry needs 1 <= row < col <= m");
    SkewMatrix a(m);
    a.entries[entry_slot(m, row - 1, col - 1)] = 1;
    return a;
}

// Block diagonal [[0,1],[-1,0]] repeated half_rank times, zero elsewhere.
inline SkewMatrix standard_form(int m, int half_rank) {
    if (half_rank < 0 || 2 * half_rank > m)
        throw std::invalid_argument("rank " + std::to_string(2 * half_rank) +
                                    " exceeds matrix size " + std::to_string(m));
    SkewMatrix a(m);
    for (int b = 0; b < half_rank; ++b)
        a.entries[entry_slot(m, 2 * b, 2 * b + 1)] = 1;
    return a;
}

// Row-major m x m expansion, reusing the output buffer.
inline void to_dense_into(const Field& f, const SkewMatrix& a, std::vector<Elem>& out) {
    const int m = a.m;
    out.assign(std::size_t(m) * m, 0);
    std::size_t e = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++e) {
            Elem v = a.entries[e];
            out[std::size_t(i) * m + j] = v;
            out[std::size_t(j) * m + i] = f.neg(v);
        }
}

inline std::vector<Elem> to_dense(const Field& f, const SkewMatrix& a) {
    std::vector<Elem> d;
    to_dense_into(f, a, d);
    return d;
}

inline SkewMatrix skew_from_dense(const Field& f, const std::vector<Elem>& d, int m) {
    assert(d.size() == std::size_t(m) * m);
    SkewMatrix a(m);
    std::size_t e = 0;
    for (int i = 0; i < m; ++i) {
        assert(d[std::size_t(i) * m + i] == 0);
        for (int j = i + 1; j < m; ++j, ++e) {
            a.entries[e] = d[std::size_t(i) * m + j];
            assert(d[std::size_t(j) * m + i] == f.neg(a.entries[e]));
        }
    }
    (void)f;
    return a;
}

// Rank of a dense rows x cols matrix by row reduction. Destroys its copy.
inline int dense_row_rank(const Field& f, std::vector<Elem> mat, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (mat[std::size_t(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(mat[std::size_t(piv) * cols + j], mat[std::size_t(r) * cols + j]);
        Elem ip = f.inv(mat[std::size_t(r) * cols + c]);
        for (int i = r + 1; i < rows; ++i) {
            Elem v = mat[std::size_t(i) * cols + c];
            if (v == 0) continue;
            Elem factor = f.mul(v, ip);
            for (int j = c; j < cols; ++j)
                mat[std::size_t(i) * cols + j] =
                    f.sub(mat[std::size_t(i) * cols + j], f.mul(factor, mat[std::size_t(r) * cols + j]));
        }
        ++r;
    }
    return r;
}

// Rank of a skew-symmetric matrix; always even in odd characteristic.
inline int rank(const Field& f, const SkewMatrix& a) {
    int r = dense_row_rank(f, to_dense(f, a), a.m, a.m);
    assert(r % 2 == 0);
    return r;
}

// tr(F A) for skew-symmetric F and A, via the C(m,2)-term identity
// tr(F A) = -2 * sum_{i<j} f_ij a_ij.
inline Elem trace_pair(const Field& f, const SkewMatrix& F, const SkewMatrix& A) {
    if (F.m != A.m) throw std::invalid_argument("trace_pair: matrix sizes differ");
    Elem s = 0;
    for (std::size_t e = 0; e < F.entries.size(); ++e)
        s = f.add(s, f.mul(F.entries[e], A.entries[e]));
    Elem result = f.neg(f.add(s, s));
#ifndef NDEBUG
    if (F.m <= 4) {
        // cross-check against the full matrix product on small inputs
        auto df = to_dense(f, F), da = to_dense(f, A);
        Elem tr = 0;
        for (int i = 0; i < F.m; ++i)
            for (int j = 0; j < F.m; ++j)
                tr = f.add(tr, f.mul(df[std::size_t(i) * F.m + j], da[std::size_t(j) * F.m + i]));
        assert(tr == result);
    }
#endif
    return result;
}

inline std::vector<Elem> dense_mul(const Field& f, const std::vector<Elem>& A,
                                   const std::vector<Elem>& B, int m) {
    std::vector<Elem> C(std::size_t(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l) {
            Elem v = A[std::size_t(i) * m + l];
            if (v == 0) continue;
            for (int j = 0; j < m; ++j)
                C[std::size_t(i) * m + j] =
                    f.add(C[std::size_t(i) * m + j], f.mul(v, B[std::size_t(l) * m + j]));
        }
    return C;
}

inline std::vector<Elem> dense_transpose(const std::vector<Elem>& A, int m) {
    std::vector<Elem> T(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) T[std::size_t(j) * m + i] = A[std::size_t(i) * m + j];
    return T;
}

// Congruence normal form: an invertible L with L A L^T = standard_form(m, half_rank).
struct CongruenceNormalForm {
    std::vector<Elem> transform;  // L, row-major m x m
    int half_rank = 0;
};

inline CongruenceNormalForm congruence_normal_form(const Field& f, const SkewMatrix& a) {
    const int m = a.m;
    auto mat = to_dense(f, a);
    std::vector<Elem> L(std::size_t(m) * m, 0);
    for (int i = 0; i < m; ++i) L[std::size_t(i) * m + i] = 1;

    auto at = [m](std::vector<Elem>& M, int i, int j) -> Elem& { return M[std::size_t(i) * m + j]; };
    // Each helper applies one congruence S . S^T to mat and accumulates S into L.
    auto swap_rc = [&](int i, int j) {
        for (int c = 0; c < m; ++c) std::swap(at(mat, i, c), at(mat, j, c));
        for (int r = 0; r < m; ++r) std::swap(at(mat, r, i), at(mat, r, j));
        for (int c = 0; c < m; ++c) std::swap(at(L, i, c), at(L, j, c));
    };
    auto scale_rc = [&](int i, Elem c) {
        for (int col = 0; col < m; ++col) at(mat, i, col) = f.mul(c, at(mat, i, col));
        for (int row = 0; row < m; ++row) at(mat, row, i) = f.mul(c, at(mat, row, i));
        for (int col = 0; col < m; ++col) at(L, i, col) = f.mul(c, at(L, i, col));
    };
    auto add_rc = [&](int dst, int src, Elem c) {
        for (int col = 0; col < m; ++col)
            at(mat, dst, col) = f.add(at(mat, dst, col), f.mul(c, at(mat, src, col)));
        for (int row = 0; row < m; ++row)
            at(mat, row, dst) = f.add(at(mat, row, dst), f.mul(c, at(mat, row, src)));
        for (int col = 0; col < m; ++col)
            at(L, dst, col) = f.add(at(L, dst, col), f.mul(c, at(L, src, col)));
    };

    int s = 0;
    while (s + 1 < m) {
        // first nonzero entry of the trailing block, in the fixed entry order
        int pi = -1, pj = -1;
        for (int i = s; i < m && pi < 0; ++i)
            for (int j = i + 1; j < m; ++j)
                if (at(mat, i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != s) swap_rc(pi, s);
        if (pj != s + 1) swap_rc(pj, s + 1);
        scale_rc(s, f.inv(at(mat, s, s + 1)));
        for (int j = s + 2; j < m; ++j) {
            Elem va = at(mat, s, j);
            if (va != 0) add_rc(j, s + 1, f.neg(va));
            Elem vb = at(mat, s + 1, j);
            if (vb != 0) add_rc(j, s, vb);
        }
        s += 2;
    }

#ifndef NDEBUG
    {
        auto lhs = dense_mul(f, L, dense_mul(f, to_dense(f, a), dense_transpose(L, m), m), m);
        auto want = to_dense(f, standard_form(m, s / 2));
        assert(lhs == want);
    }
#endif
    return {std::move(L), s / 2};
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 31;

// q^C(m,2), or a budget error if the space is too large to stream.
inline std::uint64_t checked_space_size(unsigned q, int m, std::uint64_t budget) {
    std::uint64_t n = 1;
    for (std::size_t e = 0; e < pair_count(m); ++e) {
        if (n > budget / q)
            throw std::runtime_error("enumeration budget exceeded: q^C(m,2) > " + std::to_string(budget));
        n *= q;
    }
    return n;
}

// Index of a matrix in the enumeration: entry e carries weight q^e, so the
// order is ascending integer index (equivalently, lexicographic with the
// last entry most significant).
inline std::uint64_t skew_index(const Field& f, const SkewMatrix& a) {
    std::uint64_t idx = 0;
    for (auto it = a.entries.rbegin(); it != a.entries.rend(); ++it) idx = idx * f.q() + *it;
    return idx;
}

inline SkewMatrix skew_from_index(const Field& f, int m, std::uint64_t idx) {
    SkewMatrix a(m);
    for (auto& e : a.entries) {
        e = Elem(idx % f.q());
        idx /= f.q();
    }
    if (idx != 0) throw std::invalid_argument("index out of range for this matrix space");
    return a;
}

// Streams matrices with index in [first, last), in index order.
class SkewRange {
public:
    SkewRange(const Field& f, int m, std::uint64_t first, std::uint64_t last)
        : q_(f.q()), remaining_(last >= first ? last - first : 0), current_(m) {
        std::uint64_t x = first;
        for (auto& e : current_.entries) {
            e = Elem(x % q_);
            x /= q_;
        }
    }

    bool next(SkewMatrix& out) {
        if (remaining_ == 0) return false;
        out = current_;
        if (--remaining_) {
            for (auto& e : current_.entries) {
                if (++e < q_) break;
                e = 0;
            }
        }
        return true;
    }

private:
    unsigned q_;
    std::uint64_t remaining_;
    SkewMatrix current_;
};

inline SkewRange enumerate_all(const Field& f, int m,
                               std::uint64_t budget = kDefaultEnumerationBudget) {
    return SkewRange(f, m, 0, checked_space_size(f.q(), m, budget));
}

// Uniform-ish sample of a fixed even rank: L^T standard_form L for a random
// invertible L. Deterministic for a given seed.
inline SkewMatrix random_of_rank(const Field& f, int m, int half_rank, std::uint64_t seed) {
    if (half_rank < 0 || 2 * half_rank > m)
        throw std::invalid_argument("rank " + std::to_string(2 * half_rank) +
                                    " exceeds matrix size " + std::to_string(m));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, f.q() - 1);
    std::vector<Elem> L(std::size_t(m) * m);
    do {
        for (auto& e : L) e = Elem(pick(rng));
    } while (dense_row_rank(f, L, m, m) < m);
    auto prod = dense_mul(f, dense_transpose(L, m),
                          dense_mul(f, to_dense(f, standard_form(m, half_rank)), L, m), m);
    SkewMatrix out = skew_from_dense(f, prod, m);
    assert(rank(f, out) == 2 * half_rank);
    return out;
}

// Dimension of the span of inserted vectors; insertion keeps a reduced basis.
class EchelonBasis {
public:
    EchelonBasis(const Field& f, std::size_t width) : f_(&f), width_(width) {}

    // True when the vector enlarged the span.
    bool insert(std::vector<Elem> v) {
        assert(v.size() == width_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Elem c = v[lead_[r]];
            if (c == 0) continue;
            for (std::size_t j = lead_[r]; j < width_; ++j)
                v[j] = f_->sub(v[j], f_->mul(c, rows_[r][j]));
        }
        std::size_t pos = 0;
        while (pos < width_ && v[pos] == 0) ++pos;
        if (pos == width_) return false;
        Elem ip = f_->inv(v[pos]);
        for (std::size_t j = pos; j < width_; ++j) v[j] = f_->mul(ip, v[j]);
        rows_.push_back(std::move(v));
        lead_.push_back(pos);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    const Field* f_;
    std::size_t width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> lead_;
};

inline std::string format_entries(const SkewMatrix& a) {
    std::string s;
    for (std::size_t e = 0; e < a.entries.size(); ++e) {
        if (e) s += ' ';
        s += std::to_string(a.entries[e]);
    }
    return s;
}

inline std::string format_dense(const Field& f, const SkewMatrix& a) {
    auto d = to_dense(f, a);
    std::string s;
    for (int i = 0; i < a.m; ++i) {
        for (int j = 0; j < a.m; ++j) {
            if (j) s += ' ';
            s += std::to_string(d[std::size_t(i) * a.m + j]);
        }
        s += '\n';
    }
    return s;
}

}  // namespace skewdet

#endif
