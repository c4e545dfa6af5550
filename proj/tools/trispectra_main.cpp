// Command-line frontend: builds the boards and graphs, emits spectra and
// eigenvector families, verifies the queens decomposition, computes Weyl
// bounds and runs the integer-eigenvalue conjecture monitor.
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "trispectra/eigen_families.hpp"
#include "trispectra/graph.hpp"
#include "trispectra/linalg_exact.hpp"
#include "trispectra/numeric_eigen.hpp"
#include "trispectra/queens_decomp.hpp"
#include "trispectra/spectrum.hpp"
#include "trispectra/tri_board.hpp"
#include "trispectra/weyl.hpp"

namespace ts = trispectra;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(const ordered_json& j, const std::string& path) { emit(j.dump(2), path); }

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TRISPECTRA_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count), optionally across threads. Results are
/// written into caller-indexed slots, so the merge order is deterministic.
void parallel_for(long long count, bool parallel, const std::function<void(long long)>& fn) {
    const int threads = parallel ? thread_cap() : 1;
    if (threads <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// build / spectrum
// ---------------------------------------------------------------------------

ts::LabeledGraph build_named(const std::string& kind, int n, int k, int a, int b) {
    if (kind == "tri") return ts::build_triangular(n);
    if (kind == "queens") return ts::build_queens(n);
    if (kind == "clique") return ts::build_clique(k);
    if (kind == "bipartite") return ts::build_complete_bipartite(a, b);
    throw CLI::ValidationError("--graph", "unknown graph kind " + kind);
}

int run_build(const std::string& kind, int n, int k, int a, int b, const std::string& format,
              const std::string& out) {
    const ts::LabeledGraph g = build_named(kind, n, k, a, b);
    if (format == "dot")
        emit(g.to_dot(kind), out);
    else if (format == "mm")
        emit(g.to_matrix_market(), out);
    else
        throw CLI::ValidationError("--format", "expected dot or mm");
    return kExitOk;
}

int run_spectrum(const std::string& kind, int n, int k, int a, int b, const std::string& format,
                 double tol, const std::string& out) {
    if (kind == "queens") {
        const auto spec =
            ts::symmetric_eigenvalues(ts::DenseMatrix::adjacency(ts::build_queens(n)), tol);
        ordered_json j;
        j["graph"] = "queens";
        j["n"] = n;
        j["numeric"] = true;
        j["values"] = spec.values;
        emit_json(j, out);
        return kExitOk;
    }
    ts::Spectrum s;
    if (kind == "tri")
        s = ts::spectrum_triangular(n);
    else if (kind == "clique")
        s = ts::spectrum_clique(k);
    else if (kind == "bipartite")
        s = ts::spectrum_bipartite(a, b);
    else if (kind == "g12")
        s = ts::spectrum_g12(n);
    else if (kind == "g13")
        s = ts::spectrum_g13(n);
    else if (kind == "g23x")
        s = ts::spectrum_g23x(n);
    else
        throw CLI::ValidationError("--graph", "unknown spectrum kind " + kind);
    if (format == "csv")
        emit(s.to_csv(), out);
    else
        emit_json(s.to_json(), out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// family / basis-least
// ---------------------------------------------------------------------------

ts::FamilyVector make_family(const std::string& family, int n, long long lambda, int x, int y) {
    if (family == "t") return ts::vector_t(n, x, y);
    if (family == "u") return ts::vector_u(n, lambda);
    if (family == "v") return ts::vector_v(n, lambda);
    if (family == "x") return ts::vector_x(n, lambda);
    if (family == "y") return ts::vector_y(n, lambda);
    throw CLI::ValidationError("--family", "unknown family " + family);
}

int run_family(const std::string& family, int n, long long lambda, int x, int y,
               const std::string& format, const std::string& out) {
    const ts::FamilyVector fv = make_family(family, n, lambda, x, y);
    if (format == "ascii") {
        emit(ts::render_triangle(fv.data), out);
        return kExitOk;
    }
    ordered_json j;
    j["family"] = family;
    j["n"] = n;
    if (family == "t") {
        j["x"] = fv.x;
        j["y"] = fv.y;
    } else {
        j["lambda"] = fv.lambda;
    }
    j["eigenvalue"] = fv.eigenvalue();
    j["vector"] = ts::to_json(fv.data);
    emit_json(j, out);
    return kExitOk;
}

int run_basis_least(int n, const std::string& format, const std::string& out) {
    const auto basis = ts::basis_least(n);
    std::vector<ts::TriVector> rows;
    rows.reserve(basis.size());
    for (const auto& fv : basis) rows.push_back(fv.data);
    const int rank = ts::check_independent(rows);
    if (format == "ascii") {
        std::ostringstream text;
        for (const auto& fv : basis)
            text << "t(" << fv.x << "," << fv.y << "):\n" << ts::render_triangle(fv.data) << '\n';
        text << "count " << basis.size() << ", rank " << rank << '\n';
        emit(text.str(), out);
        return rank == static_cast<int>(basis.size()) ? kExitOk : kExitVerificationFailure;
    }
    ordered_json j;
    j["n"] = n;
    j["count"] = basis.size();
    j["rank"] = rank;
    j["expected"] = ts::tri_number(n - 3);
    auto arr = ordered_json::array();
    for (const auto& fv : basis) {
        arr.push_back({{"x", fv.x}, {"y", fv.y}, {"vector", ts::to_json(fv.data)}});
    }
    j["vectors"] = arr;
    emit_json(j, out);
    return rank == static_cast<int>(basis.size()) ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// verify-family
// ---------------------------------------------------------------------------

struct FamilyCheckRow {
    std::string check;
    int n = 0;
    std::string param;
    std::string expected;
    std::string actual;
    bool ok = false;
};

void family_rows_for_n(int n, std::vector<FamilyCheckRow>& rows, const std::string& family) {
    const ts::LabeledGraph g = ts::build_triangular(n);
    auto eigen_row = [&](const char* check, long long lambda, const ts::TriVector& vec,
                         const std::string& param) {
        const auto res = ts::verify_eigenvector(g, vec, ts::make_int(lambda));
        rows.push_back({check, n, param, "A*v = lambda*v", res.ok ? "holds" : "fails", res.ok});
    };
    const bool all = family == "all";

    if (all || family == "t") {
        std::vector<ts::TriVector> basis;
        for (int x = 1; x <= n - 3; ++x) {
            for (int y = 1; y <= x; ++y) {
                const auto fv = ts::vector_t(n, x, y);
                eigen_row("eigen_t", -3, fv.data,
                          "(" + std::to_string(x) + "," + std::to_string(y) + ")");
                basis.push_back(fv.data);
            }
        }
        const int rank = ts::check_independent(basis);
        const long long expect = ts::tri_number(n - 3);
        rows.push_back({"basis_rank", n, "-3", std::to_string(expect), std::to_string(rank),
                        rank == expect});
    }
    const auto first = ts::lambda_range_first_sequence(n);
    const auto second = ts::lambda_range_second_sequence(n);
    for (long long lam = first.lo; (all || family == "u" || family == "v") && lam <= first.hi;
         ++lam) {
        const std::string p = std::to_string(lam);
        ts::FamilyVector u;
        if (all || family == "u") {
            u = ts::vector_u(n, lam);
            eigen_row("eigen_u", lam, u.data, p);
            const bool agree = ts::vector_u_cellwise(n, lam) == ts::vector_u_rcd(n, lam);
            rows.push_back({"dual_u", n, p, "cellwise == rcd", agree ? "equal" : "differ", agree});
        }
        if (all || family == "v") {
            if (ts::vector_v_defined(n, lam)) {
                const auto v = ts::vector_v(n, lam);
                eigen_row("eigen_v", lam, v.data, p);
            } else {
                rows.push_back({"eigen_v", n, p, "undefined", "skipped", true});
            }
        }
        if (all) {
            u = ts::vector_u(n, lam);
            std::vector<ts::TriVector> set{u.data, ts::rotate_neg(u.data)};
            int expect = 2;
            if (ts::vector_v_defined(n, lam)) {
                set.push_back(ts::vector_v(n, lam).data);
                expect = 3;
            }
            const int rank = ts::check_independent(set);
            rows.push_back({"rank_first_seq", n, p, std::to_string(expect), std::to_string(rank),
                            rank == expect});
        }
    }
    for (long long lam = second.lo; (all || family == "x" || family == "y") && lam <= second.hi;
         ++lam) {
        const std::string p = std::to_string(lam);
        if (all || family == "x") {
            const auto x = ts::vector_x(n, lam);
            eigen_row("eigen_x", lam, x.data, p);
            const bool agree = ts::vector_x_cellwise(n, lam) == ts::vector_x_rcd(n, lam);
            rows.push_back({"dual_x", n, p, "cellwise == rcd", agree ? "equal" : "differ", agree});
        }
        if (all || family == "y") {
            if (ts::vector_y_defined(n, lam)) {
                const auto y = ts::vector_y(n, lam);
                eigen_row("eigen_y", lam, y.data, p);
                const bool agree = ts::vector_y3_hex(n, lam) == ts::vector_y3_from_v3(n, lam);
                rows.push_back(
                    {"dual_y3", n, p, "hex == v3-derived", agree ? "equal" : "differ", agree});
            } else {
                rows.push_back({"eigen_y", n, p, "undefined", "skipped", true});
            }
        }
        if (all) {
            const auto x = ts::vector_x(n, lam);
            std::vector<ts::TriVector> set{x.data, ts::rotate_pos(x.data)};
            int expect = 2;
            if (ts::vector_y_defined(n, lam)) {
                set.push_back(ts::vector_y(n, lam).data);
                expect = 3;
            }
            const int rank = ts::check_independent(set);
            rows.push_back({"rank_second_seq", n, p, std::to_string(expect), std::to_string(rank),
                            rank == expect});
        }
    }
}

int run_verify_family(const std::string& family, int n_min, int n_max, bool parallel,
                      const std::string& out) {
    std::vector<std::vector<FamilyCheckRow>> per_n(static_cast<size_t>(n_max - n_min + 1));
    parallel_for(n_max - n_min + 1, parallel, [&](long long idx) {
        family_rows_for_n(n_min + static_cast<int>(idx), per_n[static_cast<size_t>(idx)], family);
    });
    std::ostringstream csv;
    csv << "check,n,param,expected,actual,ok\n";
    bool all_ok = true;
    for (const auto& rows : per_n) {
        for (const auto& r : rows) {
            csv << r.check << ',' << r.n << ',' << '"' << r.param << '"' << ',' << '"' << r.expected
                << '"' << ',' << '"' << r.actual << '"' << ',' << (r.ok ? "true" : "false") << '\n';
            all_ok = all_ok && r.ok;
        }
    }
    if (family == "x" || family == "all") {
        const auto rec = ts::reconcile_x_family(std::min(n_max, 11));
        csv << "reconcile_x," << std::min(n_max, 11) << ",\"deltas\",\"1 passing variant\",\""
            << rec.passing.size() << " passing";
        if (rec.unique()) csv << ": " << rec.passing.front().describe();
        csv << "\"," << (rec.unique() ? "true" : "false") << '\n';
        all_ok = all_ok && rec.unique();
    }
    emit(csv.str(), out);
    return all_ok ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// decompose / verify-decomposition
// ---------------------------------------------------------------------------

int run_decompose(int n, const std::string& format, const std::string& out) {
    const auto d = ts::decompose(n);
    if (format == "dot")
        emit(d.queens.to_dot("queens"), out);
    else
        emit_json(ts::decomposition_to_json(d), out);
    return kExitOk;
}

int run_verify_decomposition(int n, int n_max, const std::string& out) {
    if (n_max < n) n_max = n;
    auto arr = ordered_json::array();
    bool all_ok = true;
    for (int m = n; m <= n_max; ++m) {
        auto rep = ts::verify_decomposition(ts::decompose(m));
        all_ok = all_ok && rep.ok;
        ordered_json j = rep.to_json();
        j["n"] = m;
        arr.push_back(std::move(j));
    }
    emit_json(arr, out);
    return all_ok ? kExitOk : kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// weyl-bounds / check-conjecture / reproduce-examples
// ---------------------------------------------------------------------------

int run_weyl_bounds(int n, long long k, bool csv, const std::string& out) {
    const ts::WeylTables tables(n);
    std::vector<ts::BoundEntry> entries;
    if (k > 0)
        entries.push_back(tables.best_bounds(k));
    else
        for (long long i = 1; i <= static_cast<long long>(n) * n; ++i)
            entries.push_back(tables.best_bounds(i));
    if (csv) {
        std::ostringstream text;
        text << "k,lower,upper,lower_decimal,upper_decimal\n";
        for (const auto& e : entries) {
            text << e.k << ",\"" << e.lower.to_string() << "\",\"" << e.upper.to_string() << "\","
                 << e.lower.to_double() << ',' << e.upper.to_double() << '\n';
        }
        emit(text.str(), out);
    } else {
        auto arr = ordered_json::array();
        for (const auto& e : entries) arr.push_back(e.to_json());
        ordered_json j;
        j["n"] = n;
        j["bounds"] = arr;
        emit_json(j, out);
    }
    return kExitOk;
}

int run_check_conjecture(int n_min, int n_max, double eps, const std::string& out) {
    auto arr = ordered_json::array();
    bool all_ok = true;
    for (int n = n_min; n <= n_max; ++n) {
        const auto rep = ts::check_conjecture(n, eps);
        all_ok = all_ok && rep.verdict == ts::ConjectureVerdict::Confirmed;
        arr.push_back(rep.to_json());
    }
    ordered_json j;
    j["eps"] = eps;
    j["reports"] = arr;
    emit_json(j, out);
    return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_reproduce_examples(const std::string& out) {
    auto results = ordered_json::array();
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
    };
    auto entry = [](long long value, long long mult) {
        return std::make_pair(ts::ExactValue(value), mult);
    };

    {
        const ts::Spectrum want({entry(4, 1), entry(0, 3), entry(-2, 2)});
        const auto got = ts::spectrum_triangular(3);
        check("spectrum_tri_3", got == want, "sigma(T(3)) = {4, 0^3, -2^2}");
    }
    {
        const ts::Spectrum want({entry(6, 1), entry(1, 3), entry(0, 2), entry(-2, 3), entry(-3, 1)});
        check("spectrum_tri_4", ts::spectrum_triangular(4) == want,
              "sigma(T(4)) = {6, 1^3, 0^2, -2^3, -3}");
    }
    {
        const ts::Spectrum want(
            {entry(6, 1), entry(4, 1), entry(1, 3), entry(0, 5), entry(-2, 5), entry(-3, 1)});
        check("spectrum_g12_4", ts::spectrum_g12(4) == want,
              "sigma(G_{1,2}) = {6, 4, 1^3, 0^5, -2^5, -3}");
    }
    {
        const ts::Spectrum want(
            {entry(3, 1), entry(2, 2), entry(1, 2), entry(0, 2), entry(-1, 9)});
        check("spectrum_g13_4", ts::spectrum_g13(4) == want,
              "sigma(G1_3) = {3, 2^2, 1^2, 0^2, -1^9}");
    }
    {
        const ts::Spectrum want({{ts::ExactValue(2), 1},
                                 {ts::ExactValue::surd(ts::Int(1), 3), 2},
                                 {ts::ExactValue(0), 10},
                                 {ts::ExactValue::surd(ts::Int(-1), 3), 2},
                                 {ts::ExactValue(-2), 1}});
        check("spectrum_g23x_4", ts::spectrum_g23x(4) == want,
              "sigma(G2_{3,X}) = {2, sqrt(3)^2, 0^10, -sqrt(3)^2, -2}");
    }
    {
        const auto upper = ts::chained_bound(4, {3, 1, 4, 4}, ts::BoundDirection::Upper);
        const auto lower = ts::chained_bound(4, {15, 16, 13, 13}, ts::BoundDirection::Lower);
        check("example2_upper_chain", upper.k == 9 && upper.value == ts::ExactValue(4),
              "lambda_9(Q(4)) <= 1 + 3 = 4");
        check("example2_lower_chain", lower.k == 9 && lower.value == ts::ExactValue(-3),
              "lambda_9(Q(4)) >= -2 - 1 = -3");
        const auto best = ts::best_bounds(4, 9);
        check("example2_best_bounds",
              best.lower >= ts::ExactValue(-3) && best.upper <= ts::ExactValue(4),
              "-3 <= lambda_9(Q(4)) <= 4, search no worse than the worked chains");
    }
    ordered_json j;
    j["ok"] = all_ok;
    j["results"] = results;
    emit_json(j, out);
    return all_ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for triangular-board graphs and n-Queens spectra"};
    app.require_subcommand(1);

    std::string out;
    app.add_option("-o,--output", out, "write output to a file instead of stdout");

    // build
    auto* build = app.add_subcommand("build", "build a graph and export it");
    std::string build_kind = "tri", build_format = "dot";
    int build_n = 4, build_k = 4, build_a = 1, build_b = 1;
    build->add_option("--graph", build_kind, "tri|queens|clique|bipartite")->capture_default_str();
    build->add_option("--n", build_n, "board side")->capture_default_str();
    build->add_option("--k", build_k, "clique order");
    build->add_option("--a", build_a, "bipartite part size");
    build->add_option("--b", build_b, "bipartite part size");
    build->add_option("--format", build_format, "dot|mm")->capture_default_str();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "closed-form or numeric spectrum");
    std::string spec_kind = "tri", spec_format = "json";
    int spec_n = 4, spec_k = 4, spec_a = 1, spec_b = 1;
    double spec_tol = 1e-11;
    spectrum->add_option("--graph", spec_kind, "tri|clique|bipartite|g12|g13|g23x|queens")
        ->capture_default_str();
    spectrum->add_option("--n", spec_n, "board side")->capture_default_str();
    spectrum->add_option("--k", spec_k, "clique order");
    spectrum->add_option("--a", spec_a, "bipartite part size");
    spectrum->add_option("--b", spec_b, "bipartite part size");
    spectrum->add_option("--format", spec_format, "json|csv")->capture_default_str();
    spectrum->add_option("--tol", spec_tol, "Jacobi tolerance for --graph queens");

    // family
    auto* family = app.add_subcommand("family", "emit one eigenvector family member");
    std::string fam_name = "u", fam_format = "json";
    int fam_n = 10, fam_x = 1, fam_y = 1;
    long long fam_lambda = 0;
    family->add_option("--family", fam_name, "t|u|v|x|y")->capture_default_str();
    family->add_option("--n", fam_n, "board side")->capture_default_str();
    family->add_option("--lambda", fam_lambda, "eigenvalue parameter (u/v/x/y)");
    family->add_option("--x", fam_x, "stencil row placement (t)");
    family->add_option("--y", fam_y, "stencil column placement (t)");
    family->add_option("--format", fam_format, "json|ascii")->capture_default_str();

    // verify-family
    auto* verify_family = app.add_subcommand("verify-family", "exact per-(n,lambda) verification");
    std::string vf_family = "all";
    int vf_n = 0, vf_n_min = 4, vf_n_max = 0;
    bool vf_parallel = false;
    verify_family->add_option("--family", vf_family, "t|u|v|x|y|all")->capture_default_str();
    verify_family->add_option("--n", vf_n, "single board side (sets n-min = n-max)");
    verify_family->add_option("--n-min", vf_n_min, "smallest board side")->capture_default_str();
    verify_family->add_option("--n-max", vf_n_max, "largest board side");
    verify_family->add_flag("--parallel", vf_parallel, "fan out independent (n, lambda) items");

    // basis-least
    auto* basis = app.add_subcommand("basis-least", "the -3 eigenspace basis with its exact rank");
    int basis_n = 6;
    std::string basis_format = "json";
    basis->add_option("--n", basis_n, "board side")->required();
    basis->add_option("--format", basis_format, "json|ascii")->capture_default_str();

    // decompose
    auto* decomp = app.add_subcommand("decompose", "five-part decomposition of the queens graph");
    int dec_n = 4;
    std::string dec_format = "json";
    decomp->add_option("--n", dec_n, "board side")->required();
    decomp->add_option("--format", dec_format, "json|dot")->capture_default_str();

    // verify-decomposition
    auto* vdec = app.add_subcommand("verify-decomposition", "exact decomposition checks");
    int vdec_n = 4, vdec_n_max = 0;
    vdec->add_option("--n", vdec_n, "board side (or range start)")->required();
    vdec->add_option("--n-max", vdec_n_max, "range end");

    // weyl-bounds
    auto* weyl = app.add_subcommand("weyl-bounds", "eigenvalue bounds for the queens graph");
    int weyl_n = 4;
    long long weyl_k = 0;
    bool weyl_json = false, weyl_csv = false;
    weyl->add_option("n", weyl_n, "board side")->required();
    weyl->add_option("--k", weyl_k, "single eigenvalue index (default: all)");
    weyl->add_flag("--json", weyl_json, "JSON output (default)");
    weyl->add_flag("--csv", weyl_csv, "CSV output");

    // check-conjecture
    auto* conj = app.add_subcommand("check-conjecture", "integer eigenvalue conjecture monitor");
    int conj_min = 4, conj_max = 8;
    double conj_eps = 1e-6;
    bool conj_json = false;
    conj->add_option("--n-min", conj_min, "first n")->capture_default_str();
    conj->add_option("--n-max", conj_max, "last n")->required();
    conj->add_option("--eps", conj_eps, "integer snap window")->capture_default_str();
    conj->add_flag("--json", conj_json, "JSON output (default)");

    // reproduce-examples
    auto* repro = app.add_subcommand("reproduce-examples",
                                     "recompute the worked spectra and bound examples and diff "
                                     "them against the embedded expected values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build) return run_build(build_kind, build_n, build_k, build_a, build_b, build_format, out);
        if (*spectrum)
            return run_spectrum(spec_kind, spec_n, spec_k, spec_a, spec_b, spec_format, spec_tol, out);
        if (*family) return run_family(fam_name, fam_n, fam_lambda, fam_x, fam_y, fam_format, out);
        if (*verify_family) {
            int lo = vf_n_min, hi = vf_n_max;
            if (vf_n > 0) lo = hi = vf_n;
            if (hi == 0) hi = lo;
            if (lo < 4 || hi < lo) throw CLI::ValidationError("--n", "need 4 <= n-min <= n-max");
            return run_verify_family(vf_family, lo, hi, vf_parallel, out);
        }
        if (*basis) return run_basis_least(basis_n, basis_format, out);
        if (*decomp) return run_decompose(dec_n, dec_format, out);
        if (*vdec) return run_verify_decomposition(vdec_n, vdec_n_max, out);
        if (*weyl) return run_weyl_bounds(weyl_n, weyl_k, weyl_csv && !weyl_json, out);
        if (*conj) return run_check_conjecture(conj_min, conj_max, conj_eps, out);
        if (*repro) return run_reproduce_examples(out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
