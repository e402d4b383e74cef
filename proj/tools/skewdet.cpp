#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewdet/skewdet.hpp"

using json = nlohmann::ordered_json;
using skewdet::BigInt;
using skewdet::ExportFormat;

namespace {

skewdet::Field make_field(const std::string& text) {
    auto parse_num = [&](const std::string& s) -> unsigned {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("--q expects a prime p or a prime power p^k, got '" + text + "'");
        unsigned long v = std::stoul(s);
        if (v == 0 || v > 65536) throw std::invalid_argument("--q value out of range: " + s);
        return unsigned(v);
    };
    auto caret = text.find('^');
    if (caret == std::string::npos) return skewdet::Field(parse_num(text));
    return skewdet::Field(parse_num(text.substr(0, caret)), parse_num(text.substr(caret + 1)));
}

// Output goes to --out when given, stdout otherwise.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& get() { return *os; }
};

struct Options {
    std::string q;
    int m = 0;
    int t = 0;
    std::string format = "plain";
    std::string out;
    bool slow = false;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    bool verbose = false;
};

void print_header(std::ostream& os, const skewdet::Field& f, const Options& o, bool with_t) {
    if (o.verbose) os << "field: " << f.name() << ", modulus " << f.modulus_string() << "\n";
    os << "q = " << f.q() << "  m = " << o.m;
    if (with_t) os << "  t = " << o.t;
    os << "\n";
}

int run_counts(const Options& o) {
    auto f = make_field(o.q);
    auto tb = skewdet::count_table(f.q(), o.t, o.m);
    Sink sink(o.out);
    auto& os = sink.get();
    switch (skewdet::parse_export_format(o.format)) {
        case ExportFormat::Plain:
            print_header(os, f, o, true);
            for (const auto& [r, c] : tb.by_rank) os << "rank " << r << ": " << c.str() << "\n";
            os << "rank <= " << 2 * tb.t << ": " << tb.total.str() << "\n";
            os << "length: " << tb.length.str() << "\n";
            break;
        case ExportFormat::Json: {
            json j;
            j["q"] = tb.q;
            j["m"] = tb.m;
            j["t"] = tb.t;
            json counts = json::object();
            for (const auto& [r, c] : tb.by_rank) counts[std::to_string(r)] = c.str();
            j["n_a"] = counts;
            j["N_a"] = tb.total.str();
            j["length"] = tb.length.str();
            os << j.dump() << "\n";
            break;
        }
        case ExportFormat::Csv:
            os << "rank,count\n";
            for (const auto& [r, c] : tb.by_rank) os << r << ',' << c.str() << "\n";
            os << "total," << tb.total.str() << "\n";
            os << "length," << tb.length.str() << "\n";
            break;
    }
    return 0;
}

int run_weights(const Options& o) {
    auto f = make_field(o.q);
    skewdet::WeightTable wt(f.q());
    auto rep = wt.report(o.t, o.m);
    Sink sink(o.out);
    auto& os = sink.get();
    switch (skewdet::parse_export_format(o.format)) {
        case ExportFormat::Plain:
            print_header(os, f, o, true);
            os << "k  affine  projective\n";
            for (const auto& [k, w] : rep.affine)
                os << k << "  " << w.str() << "  " << rep.projective.at(k).str() << "\n";
            os << "min distance = " << rep.min_distance.str() << "\n";
            os << "min-weight codewords = " << rep.min_weight_count.str() << " ("
               << skewdet::regime_string(rep.regime) << ")\n";
            os << "distinct nonzero weights = " << rep.distinct_weight_count << "\n";
            os << "weights increase with rank class: " << (rep.increasing_by_rank ? "yes" : "no")
               << "\n";
            break;
        case ExportFormat::Json: {
            json j;
            j["q"] = rep.q;
            j["m"] = rep.m;
            j["t"] = rep.t;
            json classes = json::array();
            for (const auto& [k, w] : rep.affine)
                classes.push_back(
                    {{"k", k}, {"affine", w.str()}, {"projective", rep.projective.at(k).str()}});
            j["classes"] = classes;
            j["min_distance"] = rep.min_distance.str();
            j["min_weight_codewords"] = rep.min_weight_count.str();
            j["min_weight_qualifier"] = skewdet::regime_string(rep.regime);
            j["distinct_nonzero_weights"] = rep.distinct_weight_count;
            j["increasing_by_rank"] = rep.increasing_by_rank;
            os << j.dump() << "\n";
            break;
        }
        case ExportFormat::Csv:
            os << "k,affine,projective\n";
            for (const auto& [k, w] : rep.affine)
                os << k << ',' << w.str() << ',' << rep.projective.at(k).str() << "\n";
            break;
    }
    return 0;
}

int run_mindist(const Options& o) {
    auto f = make_field(o.q);
    skewdet::WeightTable wt(f.q());
    BigInt d = wt.min_distance(o.t, o.m);
    auto [count, regime] = wt.min_weight_count(o.t, o.m);
    Sink sink(o.out);
    auto& os = sink.get();
    switch (skewdet::parse_export_format(o.format)) {
        case ExportFormat::Plain:
            if (o.verbose) os << "field: " << f.name() << ", modulus " << f.modulus_string() << "\n";
            os << "d = " << d.str() << ", min-weight codewords = " << count.str() << " ("
               << skewdet::regime_string(regime) << ")\n";
            break;
        case ExportFormat::Json: {
            json j;
            j["q"] = f.q();
            j["m"] = o.m;
            j["t"] = o.t;
            j["min_distance"] = d.str();
            j["min_weight_codewords"] = count.str();
            j["min_weight_qualifier"] = skewdet::regime_string(regime);
            os << j.dump() << "\n";
            break;
        }
        case ExportFormat::Csv:
            os << "min_distance," << d.str() << "\n";
            os << "min_weight_codewords," << count.str() << "\n";
            os << "qualifier," << skewdet::regime_string(regime) << "\n";
            break;
    }
    return 0;
}

int run_spectrum(const Options& o) {
    auto f = make_field(o.q);
    skewdet::CodeParams cp(f, o.m, o.t);
    auto dist = skewdet::weight_enumerator(cp);
    Sink sink(o.out);
    auto& os = sink.get();
    switch (skewdet::parse_export_format(o.format)) {
        case ExportFormat::Plain:
            print_header(os, f, o, true);
            os << "weight  codewords\n";
            for (const auto& [w, c] : dist) os << w.str() << "  " << c.str() << "\n";
            break;
        case ExportFormat::Json: {
            json j;
            j["q"] = f.q();
            j["m"] = o.m;
            j["t"] = o.t;
            json dist_obj = json::object();
            for (const auto& [w, c] : dist) dist_obj[w.str()] = c.str();
            j["spectrum"] = dist_obj;
            os << j.dump() << "\n";
            break;
        }
        case ExportFormat::Csv:
            os << "weight,codewords\n";
            for (const auto& [w, c] : dist) os << w.str() << ',' << c.str() << "\n";
            break;
    }
    return 0;
}

int run_genmat(const Options& o) {
    auto f = make_field(o.q);
    skewdet::CodeParams cp(f, o.m, o.t);
    auto g = skewdet::generator_matrix(cp);
    Sink sink(o.out);
    if (o.verbose && o.format == "plain")
        sink.get() << "# field: " << f.name() << ", modulus " << f.modulus_string() << "\n";
    skewdet::write_generator(g, sink.get(), skewdet::parse_export_format(o.format));
    return 0;
}

int run_table(const Options& o) {
    auto f = make_field(o.q);
    skewdet::WeightTable wt(f.q());
    const int half = o.m / 2;
    if (half < 1) throw std::invalid_argument("table needs m >= 2");
    std::vector<skewdet::WeightReport> reports;
    for (int t = 1; t <= half; ++t) reports.push_back(wt.report(t, o.m));
    Sink sink(o.out);
    auto& os = sink.get();
    switch (skewdet::parse_export_format(o.format)) {
        case ExportFormat::Plain: {
            print_header(os, f, o, false);
            os << "projective class weights by rank bound\n";
            os << "t";
            for (int k = 1; k <= half; ++k) os << "  k=" << k;
            os << "  d\n";
            for (const auto& rep : reports) {
                os << rep.t;
                for (int k = 1; k <= half; ++k) os << "  " << rep.projective.at(k).str();
                os << "  " << rep.min_distance.str() << "\n";
            }
            break;
        }
        case ExportFormat::Json: {
            json j;
            j["q"] = f.q();
            j["m"] = o.m;
            json rows = json::array();
            for (const auto& rep : reports) {
                json row;
                row["t"] = rep.t;
                json ws = json::array();
                for (int k = 1; k <= half; ++k) ws.push_back(rep.projective.at(k).str());
                row["projective"] = ws;
                row["min_distance"] = rep.min_distance.str();
                rows.push_back(row);
            }
            j["rows"] = rows;
            os << j.dump() << "\n";
            break;
        }
        case ExportFormat::Csv: {
            os << "t";
            for (int k = 1; k <= half; ++k) os << ",k=" << k;
            os << ",d\n";
            for (const auto& rep : reports) {
                os << rep.t;
                for (int k = 1; k <= half; ++k) os << ',' << rep.projective.at(k).str();
                os << ',' << rep.min_distance.str() << "\n";
            }
            break;
        }
    }
    return 0;
}

// One verification sweep: formulas against the brute-force oracles.
int run_verify(const Options& o) {
    auto f = make_field(o.q);
    const unsigned q = f.q();
    const int m = o.m, t = o.t;
    const std::uint64_t budget = o.slow ? skewdet::kDefaultEnumerationBudget : 2'000'000;

    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;

    skewdet::WeightTable wt(q);
    const int half = m / 2;

    // Census checks only run when the whole space fits the enumeration budget;
    // the full codeword census is further capped by total work, enumeration
    // size times code length.
    const BigInt space = skewdet::skew_space_size(q, m);
    const bool enumerable = space <= budget;
    const std::string skip_space = "skipped (" + space.str() + " matrices exceed the budget)";

    if (!enumerable) {
        checks.push_back({"rank-census", true, skip_space});
    } else {  // every exact-rank count against the exhaustive census
        auto hist = skewdet::oracle::rank_histogram(f, m, budget, o.workers);
        bool ok = true;
        std::string detail;
        for (int r = 0; r <= m; ++r) {
            BigInt expect = skewdet::rank_count(q, r, m);
            std::uint64_t got = hist.count(r) ? hist.at(r) : 0;
            if (expect != got) {
                ok = false;
                detail = "rank " + std::to_string(r) + ": formula " + expect.str() + ", census " +
                         std::to_string(got);
                break;
            }
        }
        checks.push_back({"rank-census", ok, detail});
    }

    if (!enumerable) {
        checks.push_back({"weight-recursion", true, skip_space});
    } else {  // the weight recursion against per-class trace counts
        auto tab = skewdet::oracle::support_table(f, m, budget, o.workers);
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= half && ok; ++k)
            for (int r = 1; r <= half && ok; ++r) {
                BigInt expect = wt.support_count(k, r, m);
                if (expect != tab[std::size_t(k)][std::size_t(r)]) {
                    ok = false;
                    detail = "k=" + std::to_string(k) + " r=" + std::to_string(r) + ": formula " +
                             expect.str() + ", census " + std::to_string(tab[std::size_t(k)][std::size_t(r)]);
                }
            }
        checks.push_back({"weight-recursion", ok, detail});
    }

    const BigInt census_work = space * skewdet::code_length(q, t, m);
    const BigInt work_cap = o.slow ? BigInt("20000000000") : BigInt(100'000'000);
    if (!enumerable || census_work > work_cap) {
        checks.push_back({"spectrum", true,
                          enumerable ? "skipped (" + census_work.str() + " column evaluations)"
                                     : skip_space});
    } else {  // the full spectrum against the exhaustive codeword census
        skewdet::CodeParams cp(f, m, t);
        auto g = skewdet::generator_matrix(cp, budget);
        auto census = skewdet::oracle::weight_enumerator(cp, g, budget, o.workers);
        auto formula = skewdet::weight_enumerator(cp);
        bool ok = formula.size() == census.size();
        std::string detail;
        if (ok)
            for (const auto& [w, c] : census)
                if (formula.count(BigInt(w)) == 0 || formula.at(BigInt(w)) != c) {
                    ok = false;
                    detail = "weight " + std::to_string(w);
                    break;
                }
        if (!ok && detail.empty()) detail = "distributions have different support";
        checks.push_back({"spectrum", ok, detail});
    }

    {  // rank bound via vanishing minors
        bool ok = true;
        std::string detail;
        if (m <= 4 && enumerable) {
            skewdet::SkewRange range = skewdet::enumerate_all(f, m, budget);
            skewdet::SkewMatrix a;
            while (range.next(a)) {
                bool bound = skewdet::oracle::rank_at_most_by_minors(f, a, t);
                if (bound != (skewdet::rank(f, a) <= 2 * t)) {
                    ok = false;
                    detail = "entries " + skewdet::format_entries(a);
                    break;
                }
            }
        } else if (m <= 6) {
            for (int k = 0; k <= half && ok; ++k)
                for (std::uint64_t s = 0; s < 8 && ok; ++s) {
                    auto a = skewdet::random_of_rank(f, m, k, o.seed + 977 * s + 131 * unsigned(k));
                    if (skewdet::oracle::rank_at_most_by_minors(f, a, t) != (2 * k <= 2 * t)) {
                        ok = false;
                        detail = "rank " + std::to_string(2 * k) + ", seed offset " + std::to_string(s);
                    }
                }
        } else {
            detail = "skipped (m > 6)";
        }
        checks.push_back({"rank-minors", ok, detail});
    }

    {  // the two class-weight evaluation paths and the difference identity
        bool ok = true;
        std::string detail;
        try {
            for (int k = 1; k <= half && ok; ++k) {
                BigInt closed = wt.class_weight(k, t, m);
                if (closed != wt.class_weight_by_ranks(k, t, m)) {
                    ok = false;
                    detail = "paths disagree at k=" + std::to_string(k);
                    break;
                }
                BigInt diff = closed - wt.class_weight(1, t, m);
                if (diff != skewdet::big_pow(q, 2 * t) * wt.support_count(k - 1, t, m - 2)) {
                    ok = false;
                    detail = "difference identity fails at k=" + std::to_string(k);
                }
            }
            wt.min_distance(t, m);  // throws if it disagrees with the class weights
        } catch (const std::logic_error& e) {
            ok = false;
            detail = e.what();
        }
        checks.push_back({"weight-identities", ok, detail});
    }

    if (!enumerable) {
        checks.push_back({"generator-shape", true, skip_space});
    } else {  // generator shape: length formula and full dimension
        bool ok = true;
        std::string detail;
        try {
            skewdet::CodeParams cp(f, m, t);
            auto g = skewdet::generator_matrix(cp, budget);
            if (skewdet::generator_rank(f, g) != g.rows) {
                ok = false;
                detail = "generator rank below row count";
            }
        } catch (const std::logic_error& e) {
            ok = false;
            detail = e.what();
        }
        checks.push_back({"generator-shape", ok, detail});
    }

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    Sink sink(o.out);
    auto& os = sink.get();
    switch (skewdet::parse_export_format(o.format)) {
        case ExportFormat::Plain:
            print_header(os, f, o, true);
            for (const auto& c : checks) {
                os << (c.pass ? "PASS " : "FAIL ") << c.name;
                if (!c.detail.empty()) os << " (" << c.detail << ")";
                os << "\n";
            }
            os << (all ? "all checks passed\n" : "verification FAILED\n");
            break;
        case ExportFormat::Json: {
            json j;
            j["q"] = q;
            j["m"] = m;
            j["t"] = t;
            json arr = json::array();
            for (const auto& c : checks) {
                json e;
                e["name"] = c.name;
                e["status"] = c.pass ? "PASS" : "FAIL";
                if (!c.detail.empty()) e["detail"] = c.detail;
                arr.push_back(e);
            }
            j["checks"] = arr;
            j["all_pass"] = all;
            os << j.dump() << "\n";
            break;
        }
        case ExportFormat::Csv:
            os << "check,status\n";
            for (const auto& c : checks) os << c.name << ',' << (c.pass ? "PASS" : "FAIL") << "\n";
            break;
    }
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes from bounded-rank skew-symmetric matrices over odd finite fields"};
    app.require_subcommand(1);

    Options o;
    int code = 0;

    auto add_common = [&](CLI::App* sub, bool with_t) {
        sub->add_option("--q", o.q, "field order, a prime p or prime power p^k (odd only)")
            ->required();
        sub->add_option("--m", o.m, "matrix size")->required();
        if (with_t) sub->add_option("--t", o.t, "half the rank bound (rank <= 2t)")->required();
        sub->add_option("--format", o.format, "output format: plain, json or csv")
            ->default_val("plain");
        sub->add_option("--out", o.out, "write output to a file instead of stdout");
        sub->add_flag("--verbose", o.verbose, "also print the field modulus");
    };

    auto* counts = app.add_subcommand("counts", "matrix counts by rank and the code length");
    add_common(counts, true);
    counts->callback([&] { code = run_counts(o); });

    auto* weights = app.add_subcommand("weights", "class weights, minimum distance and multiplicities");
    add_common(weights, true);
    weights->callback([&] { code = run_weights(o); });

    auto* mindist = app.add_subcommand("mindist", "minimum distance and its codeword count");
    add_common(mindist, true);
    mindist->callback([&] { code = run_mindist(o); });

    auto* spectrum = app.add_subcommand("spectrum", "full weight distribution of the code");
    add_common(spectrum, true);
    spectrum->callback([&] { code = run_spectrum(o); });

    auto* genmat = app.add_subcommand("genmat", "emit a generator matrix");
    add_common(genmat, true);
    genmat->callback([&] { code = run_genmat(o); });

    auto* table = app.add_subcommand("table", "projective class weights for every rank bound");
    add_common(table, false);
    table->callback([&] { code = run_table(o); });

    auto* verify = app.add_subcommand("verify", "check the formulas against brute-force censuses");
    add_common(verify, true);
    verify->add_flag("--slow", o.slow, "allow large enumerations (full default budget)");
    verify->add_option("--workers", o.workers, "worker threads for censuses")->default_val(1);
    verify->add_option("--seed", o.seed, "seed for sampled checks")->default_val(1);
    verify->callback([&] { code = run_verify(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
