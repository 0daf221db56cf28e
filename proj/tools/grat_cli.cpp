#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "grat/basisops.hpp"
#include "grat/exactseq.hpp"
#include "grat/gseq.hpp"
#include "grat/hilbert.hpp"
#include "grat/measure.hpp"
#include "grat/output.hpp"
#include "grat/parallel.hpp"
#include "grat/rational.hpp"

namespace {

using grat::ExactRational;
using grat::output::Cell;
using grat::output::OutputRecord;
using grat::output::Row;

constexpr double kPi = std::numbers::pi;

struct Config {
    int N = 64;
    double tol = 1e-10;
    std::string format = "csv";
    std::string out;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("cannot parse number '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("cannot parse number '" + s + "'");
    return v;
}

grat::exactseq::EvalMethod parse_method(const std::string& m) {
    using grat::exactseq::EvalMethod;
    if (m == "recurrence") return EvalMethod::recurrence;
    if (m == "closed_form") return EvalMethod::closed_form;
    if (m == "char_roots") return EvalMethod::char_roots;
    if (m == "trig") return EvalMethod::trig;
    throw UsageError("unknown method '" + m + "'");
}

void emit(const Config& cfg, const std::vector<OutputRecord>& records) {
    if (cfg.out.empty()) {
        if (cfg.format == "json")
            grat::output::write_json(std::cout, records);
        else
            grat::output::write_csv(std::cout, records);
        return;
    }
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw UsageError("cannot open output file '" + cfg.out + "'");
    if (cfg.format == "json")
        grat::output::write_json(os, records);
    else
        grat::output::write_csv(os, records);
}

// ---- eval ----------------------------------------------------------------

int run_eval(const Config& cfg, const std::string& seq, int n,
             const std::string& zlist, const std::string& method,
             bool method_given, bool exact) {
    OutputRecord rec;
    rec.schema = "eval_table";
    rec.columns = {"seq", "n", "z", "value"};
    auto zs = split(zlist, ',');
    if (seq == "g" && method_given)
        throw UsageError("--method applies to --seq G only");
    for (const std::string& zstr : zs) {
        Row row;
        row.push_back(seq);
        row.push_back(static_cast<long long>(n));
        if (exact) {
            ExactRational zr = grat::parse_rational(zstr);
            ExactRational v;
            if (seq == "G") {
                v = grat::exactseq::g_poly_eval(n, zr, parse_method(method));
            } else {
                if (n % 2 != 0)
                    throw UsageError("--exact with --seq g requires an even index");
                if (zr < ExactRational(1, 4))
                    throw UsageError("--seq g requires z >= 1/4");
                v = grat::basisops::g_even_exact(n / 2, zr);
            }
            row.push_back(grat::to_string(zr));
            row.push_back(grat::to_string(v));
        } else {
            double z = parse_double(zstr);
            double v = (seq == "G") ? grat::exactseq::g_poly_eval(n, z, parse_method(method))
                                    : grat::gseq::g_fun_eval(n, z);
            row.push_back(z);
            row.push_back(v);
        }
        rec.rows.push_back(std::move(row));
    }
    emit(cfg, {rec});
    return 0;
}

// ---- project -------------------------------------------------------------

std::vector<double> read_tabulated(const std::string& path,
                                   const grat::measure::QuadratureRule& rule) {
    std::ifstream is(path);
    if (!is) throw UsageError("cannot open tabulated input '" + path + "'");
    std::vector<std::pair<double, double>> rows;
    std::string line;
    // Header lines steer collection so a full projection report can be fed
    // back in: only the record whose first column is "z" carries (z, f) rows.
    bool collecting = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() < 2) continue;
        double z, f;
        std::size_t p1 = 0, p2 = 0;
        try {
            z = std::stod(fields[0], &p1);
            f = std::stod(fields[1], &p2);
        } catch (const std::exception&) {
            collecting = fields[0] == "z";
            continue;
        }
        if (p1 != fields[0].size() || p2 != fields[1].size()) {
            collecting = fields[0] == "z";
            continue;
        }
        if (collecting) rows.emplace_back(z, f);
    }
    if (rows.size() != rule.nodes.size())
        throw UsageError("tabulated input '" + path + "' has " +
                         std::to_string(rows.size()) + " rows; rule N = " +
                         std::to_string(rule.nodes.size()) +
                         " (generate the grid with the nodes subcommand)");
    std::vector<double> fv(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        double zn = rule.nodes[k];
        if (std::fabs(rows[k].first - zn) > 1e-9 * std::max(1.0, std::fabs(zn)))
            throw UsageError("tabulated z = " + std::to_string(rows[k].first) +
                             " does not match rule node " + std::to_string(zn));
        fv[k] = rows[k].second;
    }
    return fv;
}

int run_project(const Config& cfg, const std::string& fname, int order,
                std::string grid_spec) {
    grat::measure::QuadratureRule rule = grat::measure::build_quadrature(cfg.N);

    bool tabulated = false;
    std::function<double(double)> f;
    if (fname == "inv_sqrt") {
        f = [](double z) { return 1 / std::sqrt(z); };
    } else if (fname == "g0") {
        f = [](double) { return 1.0; };
    } else if (fname == "inv_z") {
        f = [](double z) { return 1 / z; };
    } else {
        tabulated = true;
    }

    std::vector<double> fv;
    if (tabulated) {
        fv = read_tabulated(fname, rule);
        if (grid_spec != "nodes") {
            std::cerr << "note: tabulated input is known only at the rule nodes; "
                         "using --grid nodes\n";
            grid_spec = "nodes";
        }
    } else {
        fv.resize(rule.nodes.size());
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) fv[k] = f(rule.nodes[k]);
    }

    grat::hilbert::FourierExpansion e;
    e.coeffs = grat::parallel::fourier_batch(fv, order, rule);

    std::vector<double> pv = grat::parallel::expansion_curve(e, rule.nodes);
    double err_sq = 0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double r = fv[k] - pv[k];
        err_sq += rule.weights[k] * r * r;
    }
    double l2 = std::sqrt(err_sq);

    std::vector<double> grid;
    if (grid_spec == "nodes") {
        grid = rule.nodes;
    } else {
        auto parts = split(grid_spec, ':');
        if (parts.size() != 3) throw UsageError("--grid expects a:b:n or nodes");
        double a = parse_double(parts[0]);
        double b = parse_double(parts[1]);
        long count = static_cast<long>(parse_double(parts[2]));
        if (!(a >= 0.25) || b < a || count < 1)
            throw UsageError("--grid requires 0.25 <= a <= b and n >= 1");
        grid.resize(count);
        for (long i = 0; i < count; ++i)
            grid[i] = (count == 1) ? a
                                   : a + (b - a) * static_cast<double>(i) / (count - 1);
    }

    std::vector<double> f_on_grid;
    if (tabulated) {
        f_on_grid = fv;
    } else {
        f_on_grid.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) f_on_grid[i] = f(grid[i]);
    }
    std::vector<double> approx = grat::parallel::expansion_curve(e, grid);

    OutputRecord coeffs;
    coeffs.schema = "coeff_table";
    coeffs.columns = {"k", "coefficient"};
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
        coeffs.rows.push_back({static_cast<long long>(k), e.coeffs[k]});

    OutputRecord errrec;
    errrec.schema = "error_table";
    errrec.columns = {"order", "l2_error"};
    errrec.rows.push_back({static_cast<long long>(order), l2});

    OutputRecord curves;
    curves.schema = "eval_table";
    curves.columns = {"z", "f", "approx", "abs_error"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        curves.rows.push_back({grid[i], f_on_grid[i], approx[i],
                               std::fabs(f_on_grid[i] - approx[i])});

    emit(cfg, {coeffs, errrec, curves});
    return 0;
}

// ---- interpolate ---------------------------------------------------------

int run_interpolate(const Config& cfg, const std::vector<std::string>& pairs) {
    grat::basisops::InterpolationProblem prob;
    for (const std::string& p : pairs) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw UsageError("expected node=value, got '" + p + "'");
        prob.nodes.push_back(grat::parse_rational(p.substr(0, eq)));
        prob.values.push_back(grat::parse_rational(p.substr(eq + 1)));
    }
    std::vector<ExactRational> c = grat::basisops::interpolate(prob);

    ExactRational max_resid = 0;
    for (std::size_t j = 0; j < prob.nodes.size(); ++j) {
        ExactRational s = 0;
        for (std::size_t l = 0; l < c.size(); ++l)
            s += c[l] * grat::basisops::g_even_exact(static_cast<int>(l), prob.nodes[j]);
        ExactRational r = s - prob.values[j];
        if (r < 0) r = -r;
        if (r > max_resid) max_resid = r;
    }

    OutputRecord coeffs;
    coeffs.schema = "coeff_table";
    coeffs.columns = {"k", "coefficient", "decimal"};
    for (std::size_t k = 0; k < c.size(); ++k)
        coeffs.rows.push_back({static_cast<long long>(k), grat::to_string(c[k]),
                               c[k].get_d()});

    OutputRecord report;
    report.schema = "check_report";
    report.columns = {"check", "measured", "threshold", "status"};
    report.rows.push_back({std::string("interpolation residual"), max_resid.get_d(),
                           0.0, std::string(max_resid == 0 ? "pass" : "fail")});

    emit(cfg, {coeffs, report});
    return max_resid == 0 ? 0 : 1;
}

// ---- check ---------------------------------------------------------------

struct CheckAccum {
    OutputRecord rec;
    bool all_pass = true;

    CheckAccum() {
        rec.schema = "check_report";
        rec.columns = {"check", "measured", "threshold", "status"};
    }
    void add(const std::string& label, double measured, double threshold) {
        bool ok = measured <= threshold;
        all_pass = all_pass && ok;
        rec.rows.push_back({label, measured, threshold,
                            std::string(ok ? "pass" : "fail")});
    }
};

void check_identities(CheckAccum& acc) {
    using namespace grat;
    double product_fails = 0;
    for (int n = 1; n <= 16; ++n) {
        auto [A, B] = basisops::transition_matrices(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ExactInteger s = 0;
                for (int k = 0; k < n; ++k) s += A.at(i, k) * B.at(k, j);
                if (s != (i == j ? 1 : 0)) product_fails += 1;
            }
    }
    acc.add("transition product A_n B_n = I_n, n <= 16", product_fails, 0);

    static const long a5[5][5] = {{1, 0, 0, 0, 0},
                                  {-1, 1, 0, 0, 0},
                                  {1, -3, 1, 0, 0},
                                  {-1, 6, -5, 1, 0},
                                  {1, -10, 15, -7, 1}};
    static const long b5[5][5] = {{1, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0},
                                  {2, 3, 1, 0, 0},
                                  {5, 9, 5, 1, 0},
                                  {14, 28, 20, 7, 1}};
    auto [A5, B5] = basisops::transition_matrices(5);
    double ref_fails = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (A5.at(i, j) != a5[i][j]) ref_fails += 1;
            if (B5.at(i, j) != b5[i][j]) ref_fails += 1;
        }
    acc.add("fifth-order transition matrices reference values", ref_fails, 0);

    double expansion_fails = 0;
    for (int n = 1; n <= 12; ++n) {
        auto coeffs = basisops::power_to_g(n);
        for (long zi = 2; zi <= 5; ++zi) {
            ExactRational z(zi);
            ExactRational s = 0;
            for (int l = 0; l <= n; ++l)
                s += ExactRational(coeffs[l]) * basisops::g_even_exact(l, z);
            if (s != rational_pow(z, -n)) expansion_fails += 1;
        }
    }
    acc.add("power expansion z^{-n} in the even basis, exact at z = 2..5, n <= 12",
            expansion_fails, 0);

    double catalan_fails = 0;
    ExactInteger cat = 1;
    for (int n = 1; n <= 16; ++n) {
        cat = cat * 2 * (2 * n - 1);
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), cat.get_mpz_t(), n + 1);
        cat = q;  // C_n = C_{n-1} * 2(2n-1)/(n+1)
        if (basisops::power_to_g(n)[0] != cat) catalan_fails += 1;
    }
    acc.add("Catalan numbers in the g_0 coefficient of z^{-n}, n <= 16",
            catalan_fails, 0);

    double pascal_fails = 0;
    for (int n = 3; n <= 40; ++n)
        for (int m = 3; m <= n; ++m)
            if (!basisops::pascal_identity_check(n, m)) pascal_fails += 1;
    acc.add("binomial shift identity, 3 <= m <= n <= 40", pascal_fails, 0);
}

void check_orthonormality(CheckAccum& acc, const Config& cfg) {
    auto rule = grat::measure::build_quadrature(cfg.N);
    auto G = grat::parallel::gram_matrix(20, rule);
    double dev = 0;
    for (int m = 0; m <= 20; ++m)
        for (int n = 0; n <= 20; ++n) {
            double want = (m == n) ? 1.0 : 0.0;
            dev = std::max(dev, std::fabs(G[m * 21 + n] - want));
        }
    acc.add("orthonormality deviation, m,n <= 20", dev, cfg.tol);
    double mass = grat::measure::integrate([](double) { return 1.0; }, rule);
    acc.add("total mass deviation", std::fabs(mass - 1), 1e-13);
}

void check_sturm_liouville(CheckAccum& acc) {
    double worst = 0;
    for (int n = 0; n <= 12; ++n) {
        for (int i = 0; i < 50; ++i) {
            double z = 0.3 * std::pow(50.0 / 0.3, i / 49.0);
            double g = grat::gseq::g_fun_eval(n, z);
            double scale = 1 + static_cast<double>(n) * (n + 2) * std::fabs(g);
            worst = std::max(worst, std::fabs(grat::gseq::sl_residual(n, z)) / scale);
        }
    }
    acc.add("scaled self-adjoint ODE residual, n <= 12", worst, 1e-8);
}

void check_genfun(CheckAccum& acc) {
    using grat::gseq::GenFunKind;
    const double zs[] = {0.25, 0.5, 1, 2, 10};
    const double ts[] = {-0.5, -0.2, 0, 0.3, 0.5};
    const std::pair<GenFunKind, std::string> kinds[] = {
        {GenFunKind::ordinary, "ordinary"},
        {GenFunKind::exponential, "exponential"},
        {GenFunKind::logarithmic, "logarithmic"},
    };
    for (auto& [kind, name] : kinds) {
        double dev = 0;
        for (double z : zs)
            for (double t : ts) {
                double closed = grat::gseq::generating_function(kind, z, t);
                double partial = grat::gseq::generating_function_partial(kind, z, t, 80);
                dev = std::max(dev, std::fabs(closed - partial));
            }
        acc.add(name + " generating function vs 80-term series", dev, 1e-8);
    }
    double v = grat::gseq::generating_function(GenFunKind::exponential, 0.25, 1.0);
    acc.add("exponential kind at z = 1/4, t = 1 vs 2e",
            std::fabs(v - 2 * std::exp(1.0)), 1e-12);
}

void check_parseval(CheckAccum& acc, int m, int terms) {
    double target = kPi * kPi / 64;
    double partial = grat::hilbert::parseval_partial(m, terms - 1);
    acc.add("partial sum gap to pi^2/64", target - partial, 1e-3);

    double mono_fails = 0, bound_fails = 0;
    double prev = -1;
    for (int Nn = 0; Nn < terms; ++Nn) {
        double s = grat::hilbert::parseval_partial(m, Nn);
        if (s < prev) mono_fails += 1;
        if (s > target + 1e-15) bound_fails += 1;
        prev = s;
    }
    acc.add("partial sums monotone nondecreasing", mono_fails, 0);
    acc.add("partial sums below pi^2/64", bound_fails, 0);
}

int run_check(const Config& cfg, const std::string& suite, int m, int terms) {
    CheckAccum acc;
    if (suite == "identities" || suite == "all") check_identities(acc);
    if (suite == "orthonormality" || suite == "all") check_orthonormality(acc, cfg);
    if (suite == "sturm_liouville" || suite == "all") check_sturm_liouville(acc);
    if (suite == "genfun" || suite == "all") check_genfun(acc);
    if (suite == "parseval" || suite == "all") check_parseval(acc, m, terms);
    emit(cfg, {acc.rec});
    return acc.all_pass ? 0 : 1;
}

// ---- nodes ---------------------------------------------------------------

int run_nodes(const Config& cfg) {
    auto rule = grat::measure::build_quadrature(cfg.N);
    OutputRecord rec;
    rec.schema = "eval_table";
    rec.columns = {"k", "z", "weight"};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        rec.rows.push_back({static_cast<long long>(k), rule.nodes[k], rule.weights[k]});
    emit(cfg, {rec});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g-rational orthonormal function system on [1/4, inf)"};
    app.require_subcommand(1);

    Config cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--N", cfg.N, "quadrature order")->check(CLI::PositiveNumber);
        sub->add_option("--tol", cfg.tol, "float tolerance")
            ->check(CLI::Range(1e-300, 1e300));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "output path (default: stdout)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate G_n or g_n at given points");
    std::string seq, zlist, method = "recurrence";
    int n = 0;
    bool exact = false;
    eval->add_option("--seq", seq, "sequence: G (polynomial) or g (rational)")
        ->required()
        ->check(CLI::IsMember({"G", "g"}));
    eval->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--z", zlist, "comma-separated evaluation points")->required();
    eval->add_option("--method", method, "G evaluation method")
        ->check(CLI::IsMember({"recurrence", "closed_form", "char_roots", "trig"}));
    eval->add_flag("--exact", exact, "exact rational arithmetic");
    add_common(eval);

    auto* project = app.add_subcommand("project", "least-squares projection onto the even basis");
    std::string fname = "inv_sqrt", grid = "0.25:0.4:200";
    int order = 8;
    project->add_option("--f", fname, "inv_sqrt, g0, inv_z, or a two-column CSV path");
    project->add_option("--order", order, "expansion order")->check(CLI::NonNegativeNumber);
    project->add_option("--grid", grid, "curve grid a:b:n, or 'nodes'");
    add_common(project);

    auto* interp = app.add_subcommand("interpolate", "exact interpolation in the even basis");
    std::vector<std::string> pairs;
    interp->add_option("pairs", pairs, "node=value assignments")->required();
    add_common(interp);

    auto* check = app.add_subcommand("check", "run invariant suites");
    std::string suite = "all";
    int pm = 1, terms = 2000;
    check->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"identities", "orthonormality", "sturm_liouville",
                               "genfun", "parseval", "all"}));
    check->add_option("--m", pm, "series parameter for the parseval suite");
    check->add_option("--terms", terms, "term count for the parseval suite")
        ->check(CLI::PositiveNumber);
    add_common(check);

    auto* nodes = app.add_subcommand("nodes", "print quadrature nodes and weights");
    add_common(nodes);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval))
            return run_eval(cfg, seq, n, zlist, method, eval->count("--method") > 0, exact);
        if (app.got_subcommand(project)) return run_project(cfg, fname, order, grid);
        if (app.got_subcommand(interp)) return run_interpolate(cfg, pairs);
        if (app.got_subcommand(check)) {
            if (pm == 0) throw UsageError("--m must be nonzero");
            return run_check(cfg, suite, pm, terms);
        }
        if (app.got_subcommand(nodes)) return run_nodes(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
