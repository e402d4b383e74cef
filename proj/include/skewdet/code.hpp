#ifndef SKEWDET_CODE_HPP
#define SKEWDET_CODE_HPP

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewdet/counting.hpp"
#include "skewdet/field.hpp"
#include "skewdet/skew_matrix.hpp"
#include "skewdet/weights.hpp"

namespace skewdet {

// A code instance: the evaluation code on the rank <= 2t locus of m x m
// skew-symmetric matrices over the field.
struct CodeParams {
    Field field;
    int m = 0;
    int t = 0;

    CodeParams(Field f, int m_, int t_) : field(std::move(f)), m(m_), t(t_) {
        if (m < 2) throw std::invalid_argument("matrix size must be at least 2");
        if (t < 1 || 2 * t > m)
            throw std::invalid_argument("rank bound needs 1 <= 2t <= m, got t=" + std::to_string(t) +
                                        " m=" + std::to_string(m));
    }
};

// Generator matrix of the projective code: one column per rank <= 2t point,
// each column the entry vector of the canonical representative (first
// nonzero entry scaled to 1), columns in enumeration index order. Rows
// follow the fixed entry order, so row r is the coordinate functional of
// entry slot r.
struct GeneratorMatrix {
    unsigned q = 0;
    int m = 0, t = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Elem>> columns;
};

inline GeneratorMatrix generator_matrix(const CodeParams& cp,
                                        std::uint64_t budget = kDefaultEnumerationBudget) {
    const Field& f = cp.field;
    GeneratorMatrix g;
    g.q = f.q();
    g.m = cp.m;
    g.t = cp.t;
    g.rows = pair_count(cp.m);

    SkewRange range = enumerate_all(f, cp.m, budget);
    SkewMatrix a;
    std::vector<Elem> buf;
    while (range.next(a)) {
        auto it = std::find_if(a.entries.begin(), a.entries.end(), [](Elem e) { return e != 0; });
        if (it == a.entries.end() || *it != 1) continue;
        to_dense_into(f, a, buf);
        if (dense_row_rank(f, buf, cp.m, cp.m) > 2 * cp.t) continue;
        g.columns.push_back(a.entries);
    }
    g.cols = g.columns.size();
    if (BigInt(g.cols) != code_length(g.q, cp.t, cp.m))
        throw std::logic_error("generator column count disagrees with the length formula");
    return g;
}

// Codeword of the matrix F: coordinate at column B is -tr(F B), computed as
// the linear form 2 * sum_e F_e B_e over the stored entries.
inline std::vector<Elem> codeword(const CodeParams& cp, const GeneratorMatrix& g,
                                  const SkewMatrix& F) {
    if (F.m != cp.m || g.m != cp.m) throw std::invalid_argument("codeword: matrix size mismatch");
    const Field& f = cp.field;
    std::vector<Elem> cw(g.cols);
    for (std::size_t c = 0; c < g.cols; ++c) {
        const auto& col = g.columns[c];
        Elem s = 0;
        for (std::size_t e = 0; e < col.size(); ++e) s = f.add(s, f.mul(F.entries[e], col[e]));
        cw[c] = f.mul(f.two(), s);
        assert(cw[c] == f.neg(trace_pair(f, F, SkewMatrix(cp.m, col))));
    }
    return cw;
}

// Codeword over the affine point set: one coordinate -tr(F A) per matrix A
// of rank <= 2t, in enumeration index order (the zero matrix included).
inline std::vector<Elem> affine_codeword(const CodeParams& cp, const SkewMatrix& F,
                                         std::uint64_t budget = kDefaultEnumerationBudget) {
    if (F.m != cp.m) throw std::invalid_argument("affine_codeword: matrix size mismatch");
    const Field& f = cp.field;
    std::vector<Elem> cw;
    SkewRange range = enumerate_all(f, cp.m, budget);
    SkewMatrix a;
    std::vector<Elem> buf;
    while (range.next(a)) {
        to_dense_into(f, a, buf);
        if (dense_row_rank(f, buf, cp.m, cp.m) > 2 * cp.t) continue;
        Elem s = 0;
        for (std::size_t e = 0; e < a.entries.size(); ++e)
            s = f.add(s, f.mul(F.entries[e], a.entries[e]));
        cw.push_back(f.mul(f.two(), s));
    }
    return cw;
}

inline std::size_t hamming_weight(const std::vector<Elem>& v) {
    return std::size_t(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

// Full weight distribution of the projective code from the class weights:
// every rank-2k matrix contributes one codeword of the class weight, and
// distinct classes may share a weight.
inline std::map<BigInt, BigInt> weight_enumerator(const CodeParams& cp) {
    const unsigned q = cp.field.q();
    WeightTable wt(q);
    std::map<BigInt, BigInt> dist;
    dist[0] = 1;
    for (int k = 1; 2 * k <= cp.m; ++k) {
        BigInt w = exact_div(wt.class_weight(k, cp.t, cp.m), BigInt(q) - 1);
        dist[w] += rank_count(q, 2 * k, cp.m);
    }
    BigInt mass = 0;
    for (const auto& [w, c] : dist) mass += c;
    if (mass != skew_space_size(q, cp.m))
        throw std::logic_error("weight distribution does not cover the codeword space");
    return dist;
}

enum class ExportFormat { Plain, Json, Csv };

inline ExportFormat parse_export_format(std::string_view s) {
    if (s == "plain") return ExportFormat::Plain;
    if (s == "json") return ExportFormat::Json;
    if (s == "csv") return ExportFormat::Csv;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected plain, json or csv)");
}

// Plain format: a header line "q m t rows cols", then one line per row with
// space-separated element indices. Csv drops the header and separates with
// commas. Json is a single object with the same fields and a row-major
// "matrix" array.
inline void write_generator(const GeneratorMatrix& g, std::ostream& os, ExportFormat fmt) {
    switch (fmt) {
        case ExportFormat::Plain:
            os << g.q << ' ' << g.m << ' ' << g.t << ' ' << g.rows << ' ' << g.cols << '\n';
            for (std::size_t r = 0; r < g.rows; ++r) {
                for (std::size_t c = 0; c < g.cols; ++c) {
                    if (c) os << ' ';
                    os << g.columns[c][r];
                }
                os << '\n';
            }
            break;
        case ExportFormat::Csv:
            for (std::size_t r = 0; r < g.rows; ++r) {
                for (std::size_t c = 0; c < g.cols; ++c) {
                    if (c) os << ',';
                    os << g.columns[c][r];
                }
                os << '\n';
            }
            break;
        case ExportFormat::Json:
            os << "{\"q\": " << g.q << ", \"m\": " << g.m << ", \"t\": " << g.t
               << ", \"rows\": " << g.rows << ", \"cols\": " << g.cols << ", \"matrix\": [";
            for (std::size_t r = 0; r < g.rows; ++r) {
                if (r) os << ", ";
                os << '[';
                for (std::size_t c = 0; c < g.cols; ++c) {
                    if (c) os << ", ";
                    os << g.columns[c][r];
                }
                os << ']';
            }
            os << "]}\n";
            break;
    }
    if (!os) throw std::runtime_error("failed to write generator matrix");
}

inline GeneratorMatrix read_generator_plain(std::istream& is) {
    GeneratorMatrix g;
    long long m = 0, t = 0, rows = 0, cols = 0;
    if (!(is >> g.q >> m >> t >> rows >> cols))
        throw std::runtime_error("malformed generator header");
    if (m < 2 || t < 1 || rows < 0 || cols < 0 || std::size_t(rows) != pair_count(int(m)))
        throw std::runtime_error("generator header is inconsistent");
    g.m = int(m);
    g.t = int(t);
    g.rows = std::size_t(rows);
    g.cols = std::size_t(cols);
    g.columns.assign(g.cols, std::vector<Elem>(g.rows));
    for (std::size_t r = 0; r < g.rows; ++r)
        for (std::size_t c = 0; c < g.cols; ++c) {
            unsigned v = 0;
            if (!(is >> v) || v >= g.q) throw std::runtime_error("malformed generator entry");
            g.columns[c][r] = Elem(v);
        }
    return g;
}

// Dimension of the code: the rank of the generator matrix over the field.
inline std::size_t generator_rank(const Field& f, const GeneratorMatrix& g) {
    EchelonBasis basis(f, g.cols);
    std::vector<Elem> row(g.cols);
    for (std::size_t r = 0; r < g.rows; ++r) {
        for (std::size_t c = 0; c < g.cols; ++c) row[c] = g.columns[c][r];
        basis.insert(row);
        if (basis.rank() == g.rows) break;
    }
    return basis.rank();
}

}  // namespace skewdet

#endif
