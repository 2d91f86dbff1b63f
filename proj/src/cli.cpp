#include "picd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "picd/digraph.hpp"
#include "picd/domination.hpp"
#include "picd/exactdist.hpp"
#include "picd/gof.hpp"
#include "picd/mc.hpp"

namespace picd {

double parse_real(const std::string& s)
{
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (t == "inf" || t == "infinity" || t == "+inf") return kInf;
    const auto slash = t.find('/');
    auto num = [&](const std::string& u) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(u, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse number '" + s + "'");
        }
        if (pos != u.size()) throw std::invalid_argument("cannot parse number '" + s + "'");
        return v;
    };
    if (slash != std::string::npos) {
        const double den = num(t.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return num(t.substr(0, slash)) / den;
    }
    return num(t);
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> read_input(const std::string& path)
{
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return parse_floats(ss.str());
    }
    return read_floats_file(path);
}

double resolve_r(const std::string& s, double c)
{
    if (s == "star" || s == "r*") return r_star(c);
    return parse_real(s);
}

std::uint64_t default_seed()
{
    if (const char* e = std::getenv("PICD_SEED")) return std::stoull(e);
    return 1;
}

// Y from a file, or K+1 equispaced points: j/K when the data sit in (0,1),
// otherwise spread over the data hull padded by half a mean spacing
std::vector<double> build_y(const std::vector<double>& x, const std::string& y_file, std::size_t y_grid)
{
    if (!y_file.empty()) return read_input(y_file);
    if (y_grid == 0) throw UsageError("need --y FILE or --y-grid K");
    const bool unit = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0 && v < 1.0; });
    if (unit || x.empty()) return unit_grid(y_grid);
    const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
    double pad = (*mx - *mn) / (2.0 * static_cast<double>(x.size()));
    if (!(pad > 0.0)) pad = 0.5;
    const double lo = *mn - pad, hi = *mx + pad;
    std::vector<double> y(y_grid + 1);
    for (std::size_t j = 0; j <= y_grid; ++j)
        y[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(y_grid);
    return y;
}

std::string fmt(double v, int prec = 15)
{
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parameterized interval catch digraphs: domination number, distributions and tests", "picd"};
    app.require_subcommand(1);

    // gamma / arcs
    std::string x_file, y_file, r_str = "2", family = "picd";
    std::size_t y_grid = 0;
    double c = 0.5, tau = 1.0;
    bool witness = false, json_out = false, edges = false;

    auto* g = app.add_subcommand("gamma", "domination number of the PICD");
    g->add_option("--x", x_file, "x points file ('-' for stdin)")->required();
    g->add_option("--y", y_file, "y points file");
    g->add_option("--y-grid", y_grid, "use K+1 equispaced y points");
    g->add_option("--r", r_str, "expansion parameter (number, a/b, inf, star)");
    g->add_option("--c", c, "centrality parameter");
    g->add_flag("--witness", witness, "print a minimum dominating set");
    g->add_flag("--json", json_out, "JSON output");

    auto* a = app.add_subcommand("arcs", "arcs and arc density of a PICD or CICD");
    a->add_option("--x", x_file, "x points file ('-' for stdin)")->required();
    a->add_option("--y", y_file, "y points file");
    a->add_option("--y-grid", y_grid, "use K+1 equispaced y points");
    a->add_option("--family", family, "picd or cicd")->check(CLI::IsMember({"picd", "cicd"}));
    a->add_option("--r", r_str, "PICD expansion parameter");
    a->add_option("--tau", tau, "CICD expansion parameter");
    a->add_option("--c", c, "centrality parameter");
    a->add_flag("--edges", edges, "print the edge list (i j, 0-based)");
    a->add_flag("--json", json_out, "JSON output");

    // prob
    long n = 0, m = 0;
    bool asymptotic = false;
    auto* pr = app.add_subcommand("prob", "P(gamma_{n,2}(U,r,c) = 2) or its limit");
    pr->add_option("--n", n, "sample size");
    pr->add_option("--r", r_str, "expansion parameter")->required();
    pr->add_option("--c", c, "centrality parameter")->required();
    pr->add_flag("--asymptotic", asymptotic, "limit as n grows");

    // pmf
    std::string counts_str;
    bool show_mean = false;
    double cap = kCompositionCap;
    auto* pm = app.add_subcommand("pmf", "exact pmf of gamma_{n,m} for uniform data");
    pm->add_option("--n", n, "number of x points");
    pm->add_option("--m", m, "number of y points");
    pm->add_option("--r", r_str, "expansion parameter")->required();
    pm->add_option("--c", c, "centrality parameter")->required();
    pm->add_option("--counts", counts_str, "condition on interval counts n_0,...,n_m");
    pm->add_option("--cap", cap, "composition enumeration cap");
    pm->add_flag("--mean", show_mean, "also print E[gamma]");

    // test
    std::string data_file, method = "dom-bin", k_str = "auto", alt_str = "left", cdf_spec;
    double alpha = 0.05;
    std::size_t reps = 2000;
    std::uint64_t seed = default_seed();
    bool conservative = false;
    unsigned threads = 0;
    auto* t = app.add_subcommand("test", "uniformity / goodness-of-fit test");
    t->add_option("--data", data_file, "data file ('-' for stdin)")->required();
    t->add_option("--method", method, "dom-bin|dom-mc|dom-asy|ks|chisq|arc-picd|arc-cicd");
    t->add_option("--k", k_str, "number of subintervals or auto");
    t->add_option("--r", r_str, "expansion parameter");
    t->add_option("--c", c, "centrality parameter");
    t->add_option("--tau", tau, "CICD expansion parameter");
    t->add_option("--alt", alt_str, "two|left|right");
    t->add_option("--alpha", alpha, "level");
    t->add_option("--reps", reps, "Monte Carlo calibration replicates");
    t->add_option("--seed", seed, "seed");
    t->add_option("--cdf", cdf_spec, "test against F via u=F(x): pow:p, tnorm:mu,sigma, table:FILE");
    t->add_flag("--conservative", conservative, "drop the randomised atom in MC tests");
    t->add_option("--threads", threads, "worker threads (0 = all cores)");
    t->add_flag("--json", json_out, "JSON output");

    // size / power
    std::string plan_file, grid_str, methods_str, dist_str, side_str, out_file, c_str;
    std::size_t study_n = 0, calib_reps = 0;
    auto add_study = [&](CLI::App* s) {
        s->add_option("--plan", plan_file, "key=value plan file; flags override");
        s->add_option("--method", methods_str, "comma-separated methods");
        s->add_option("--grid", grid_str, "r=a:step:b,c=a:step:b (r=star allowed)");
        s->add_option("--r", r_str, "single r (or star)");
        s->add_option("--c", c_str, "single c or list");
        s->add_option("--n", study_n, "sample size");
        s->add_option("--k", k_str, "number of subintervals or auto");
        s->add_option("--reps", reps, "replicates");
        s->add_option("--calib-reps", calib_reps, "MC calibration replicates");
        s->add_option("--seed", seed, "seed");
        s->add_option("--alpha", alpha, "level");
        s->add_flag("--conservative", conservative, "drop the randomised atom in MC tests");
        s->add_option("--threads", threads, "worker threads");
        s->add_option("--out", out_file, "CSV output file");
    };
    auto* sz = app.add_subcommand("size", "empirical size under the uniform null");
    add_study(sz);
    sz->add_option("--alt", side_str, "two|left|right");
    auto* pw = app.add_subcommand("power", "empirical power under alternatives");
    add_study(pw);
    pw->add_option("--alt", dist_str, "distribution(s), ';'-separated, e.g. f4:eps=0.2,k=7");
    pw->add_option("--side", side_str, "two|left|right");

    // estimate
    bool critical = false;
    auto* es = app.add_subcommand("estimate", "Monte Carlo p_n(F,r,c) or critical values");
    es->add_option("--n", n, "sample size")->required();
    es->add_option("--r", r_str, "expansion parameter");
    es->add_option("--c", c, "centrality parameter");
    es->add_option("--dist", dist_str, "sampling distribution (default uniform)");
    es->add_option("--reps", reps, "replicates");
    es->add_option("--seed", seed, "seed");
    es->add_flag("--critical", critical, "estimate MC critical values of gamma - k instead");
    es->add_option("--k", k_str, "subintervals for --critical");
    es->add_option("--alpha", alpha, "level for --critical");
    es->add_option("--threads", threads, "worker threads");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        auto parse_k = [&](std::size_t nn) -> std::size_t {
            if (k_str == "auto") return default_k(nn);
            const double kv = parse_real(k_str);
            if (!(kv >= 1.0) || kv != std::floor(kv)) throw UsageError("k must be a positive integer or auto");
            return static_cast<std::size_t>(kv);
        };

        if (g->parsed() || a->parsed()) {
            const std::vector<double> x = read_input(x_file);
            const std::vector<double> y = build_y(x, y_file, y_grid);
            const TwoClassSample s(x, y);
            if (g->parsed()) {
                const PicdParams p(resolve_r(r_str, c), c);
                const DominationResult res = domination_number(s, p);
                if (json_out) {
                    nlohmann::json j;
                    j["gamma"] = res.gamma;
                    j["per_interval"] = res.per_interval;
                    j["bounded_intervals"] = res.bounded_intervals;
                    j["statistic"] = res.statistic();
                    j["n"] = s.n();
                    j["m"] = s.m();
                    j["r"] = std::isinf(p.r) ? nlohmann::json("inf") : nlohmann::json(p.r);
                    j["c"] = p.c;
                    if (witness) {
                        j["witness_indices"] = res.witness;
                        std::vector<double> wv;
                        for (auto i : res.witness) wv.push_back(s.x()[i]);
                        j["witness"] = wv;
                    }
                    out << j.dump(2) << '\n';
                } else {
                    out << "gamma=" << res.gamma << '\n';
                    out << "per_interval=";
                    for (std::size_t i = 0; i < res.per_interval.size(); ++i)
                        out << (i ? " " : "") << res.per_interval[i];
                    out << '\n';
                    if (witness) {
                        out << "witness=";
                        for (std::size_t i = 0; i < res.witness.size(); ++i)
                            out << (i ? " " : "") << fmt(s.x()[res.witness[i]]);
                        out << '\n';
                    }
                }
            } else {
                const Digraph d = family == "picd" ? build_picd(s, PicdParams(resolve_r(r_str, c), c))
                                                   : build_cicd(s, CicdParams(tau, c));
                if (json_out) {
                    nlohmann::json j;
                    j["family"] = family;
                    j["n"] = d.n;
                    j["arcs"] = d.arc_count();
                    j["density"] = arc_density(d);
                    if (edges) j["edges"] = d.arcs();
                    out << j.dump(2) << '\n';
                } else {
                    out << "n=" << d.n << "\narcs=" << d.arc_count() << "\ndensity=" << fmt(arc_density(d)) << '\n';
                    if (edges) out << edge_list(d);
                }
            }
            return 0;
        }

        if (pr->parsed()) {
            const double r = resolve_r(r_str, c);
            if (asymptotic) {
                out << "p=" << fmt(p_asymptotic(r, c)) << '\n';
            } else {
                if (n < 1) throw UsageError("--n must be >= 1");
                const PuResult res = p_u(r, c, n);
                out << "p_u=" << fmt(res.value) << " branch=" << res.branch.str() << '\n';
            }
            return 0;
        }

        if (pm->parsed()) {
            const double r = resolve_r(r_str, c);
            Pmf p;
            if (!counts_str.empty()) {
                std::vector<long> cnt;
                for (double v : parse_floats(counts_str)) {
                    if (v < 0 || v != std::floor(v)) throw UsageError("counts must be nonnegative integers");
                    cnt.push_back(static_cast<long>(v));
                }
                p = exact_pmf_conditional(cnt, r, c);
            } else {
                if (n < 1 || m < 1) throw UsageError("--n and --m must be >= 1");
                p = exact_pmf_uniform(n, m, r, c, cap);
            }
            bool first = true;
            for (const auto& [q, v] : p.prob) {
                out << (first ? "" : " ") << q << ':' << std::fixed << std::setprecision(6) << v;
                first = false;
            }
            out << std::defaultfloat << '\n';
            if (show_mean) out << "mean=" << fmt(p.mean()) << '\n';
            return 0;
        }

        if (t->parsed()) {
            const std::vector<double> data = read_input(data_file);
            TestConfig cfg;
            cfg.method = parse_method(method);
            cfg.k = k_str == "auto" ? 0 : parse_k(data.size());
            cfg.c = c;
            cfg.r = resolve_r(r_str, c);
            cfg.tau = tau;
            cfg.alt = parse_alt(alt_str);
            cfg.alpha = alpha;
            cfg.calib = {reps, seed, conservative, threads};
            const TestReport rep = cdf_spec.empty() ? run_test(data, cfg)
                                                    : gof_via_transform(data, parse_cdf(cdf_spec), cfg);
            if (json_out) out << rep.to_json().dump(2) << '\n';
            else out << rep.table();
            return 0;
        }

        if (sz->parsed() || pw->parsed()) {
            ExperimentPlan plan = plan_file.empty() ? ExperimentPlan{} : ExperimentPlan::from_file(plan_file);
            if (!methods_str.empty()) {
                plan.methods.clear();
                std::stringstream ss(methods_str);
                std::string mth;
                while (std::getline(ss, mth, ',')) plan.methods.push_back(parse_method(mth));
            }
            if (!grid_str.empty()) plan.grid = parse_grid(grid_str);
            else if (!c_str.empty()) plan.grid = parse_grid("r=" + r_str + ",c=" + c_str);
            if (plan.grid.empty()) plan.grid = parse_grid("r=" + r_str + ",c=0.5");
            if (study_n) plan.n = study_n;
            if (k_str != "auto") plan.k = parse_k(plan.n);
            if (plan_file.empty() || reps != 2000) plan.reps = reps;
            if (calib_reps) plan.calib_reps = calib_reps;
            if (plan_file.empty() || seed != default_seed()) plan.seed = seed;
            if (plan_file.empty() || alpha != 0.05) plan.alpha = alpha;
            if (conservative) plan.conservative = true;
            if (threads) plan.threads = threads;
            if (!side_str.empty()) plan.alt = parse_alt(side_str);
            if (!out_file.empty()) plan.out = out_file;
            if (pw->parsed() && !dist_str.empty()) {
                plan.dists.clear();
                std::stringstream ss(dist_str);
                std::string d;
                while (std::getline(ss, d, ';')) plan.dists.push_back(AlternativeSpec::parse(d));
            }
            if (plan.dists.empty()) plan.dists.push_back(AlternativeSpec{});
            const ResultTable res = sz->parsed() ? run_size_study(plan) : run_power_study(plan);
            write_or_print(plan.out, res.csv(), out);
            return 0;
        }

        if (es->parsed()) {
            if (n < 1) throw UsageError("--n must be >= 1");
            const double r = resolve_r(r_str, c);
            if (critical) {
                const std::size_t k = parse_k(static_cast<std::size_t>(n));
                const CriticalValues cv = estimate_critical_values(static_cast<std::size_t>(n), k, r, c, reps, seed,
                                                                   alpha, threads);
                out << "left_cv=" << cv.left_cv << " P(G<cv)=" << fmt(cv.left_below, 6)
                    << " P(G=cv)=" << fmt(cv.left_atom, 6) << '\n';
                out << "right_cv=" << cv.right_cv << " P(G>cv)=" << fmt(cv.right_above, 6)
                    << " P(G=cv)=" << fmt(cv.right_atom, 6) << '\n';
                out << "pmf=";
                bool first = true;
                for (const auto& [q, v] : cv.pmf) {
                    out << (first ? "" : " ") << q << ':' << fmt(v, 6);
                    first = false;
                }
                out << '\n';
            } else {
                const AlternativeSpec spec = dist_str.empty() ? AlternativeSpec{} : AlternativeSpec::parse(dist_str);
                const Estimate e = estimate_p2(static_cast<std::size_t>(n), spec, r, c, reps, seed, threads);
                out << "estimate=" << fmt(e.estimate, 8) << " se=" << fmt(e.se, 8) << " reps=" << reps << '\n';
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace picd
