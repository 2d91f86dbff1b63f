#include "picd/gof.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "picd/domination.hpp"
#include "picd/exactdist.hpp"
#include "picd/parallel.hpp"

namespace picd {

Alt parse_alt(const std::string& s)
{
    if (s == "two" || s == "two-sided" || s == "two_sided") return Alt::TwoSided;
    if (s == "left" || s == "less") return Alt::Left;
    if (s == "right" || s == "greater") return Alt::Right;
    throw std::invalid_argument("alternative must be two, left or right");
}

std::string to_string(Alt a)
{
    switch (a) {
    case Alt::TwoSided: return "two";
    case Alt::Left: return "left";
    case Alt::Right: return "right";
    }
    return "?";
}

nlohmann::json TestReport::to_json() const
{
    nlohmann::json j;
    j["method"] = method;
    j["stat"] = stat;
    j["p_value"] = p_value ? nlohmann::json(*p_value) : nlohmann::json(nullptr);
    j["critical"] = critical ? nlohmann::json(*critical) : nlohmann::json(nullptr);
    j["reject"] = reject;
    nlohmann::json p = params;
    p["alt"] = to_string(alt);
    p["alpha"] = alpha;
    p["n"] = n;
    if (reps) p["reps"] = reps;
    j["params"] = p;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return j;
}

std::string TestReport::table() const
{
    std::ostringstream os;
    auto row = [&](const std::string& k, const std::string& v) {
        os << std::left << std::setw(12) << k << v << '\n';
    };
    auto num = [](double v) {
        std::ostringstream s;
        s << std::setprecision(6) << v;
        return s.str();
    };
    row("method", method);
    row("statistic", num(stat));
    row("p-value", p_value ? num(*p_value) : "-");
    row("critical", critical ? num(*critical) : "-");
    row("alternative", to_string(alt));
    row("alpha", num(alpha));
    row("n", std::to_string(n));
    for (auto it = params.begin(); it != params.end(); ++it)
        row(it.key(), it->is_string() ? it->get<std::string>() : it->dump());
    if (seed) row("seed", std::to_string(*seed));
    row("reject", reject ? "yes" : "no");
    return os.str();
}

std::size_t default_k(std::size_t n)
{
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n)))));
}

namespace {

void check_unit_data(const std::vector<double>& data)
{
    if (data.empty()) throw std::invalid_argument("no data");
    for (double v : data)
        if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("data must lie in (0,1)");
}

void check_k(std::size_t n, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    if (n < k) throw std::invalid_argument("need n >= k");
}

std::vector<double> sorted_copy(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TestReport dom_test_binomial(const std::vector<double>& data, std::size_t k, double r, double c, Alt alt,
                             double alpha, bool use_asymptotic_p)
{
    check_unit_data(data);
    check_k(data.size(), k);
    const PicdParams prm(r, c);
    if (use_asymptotic_p && !(c > 0.0 && c < 1.0 && is_r_star(r, c)))
        throw std::invalid_argument("asymptotic approach requires r = r* = 1/max(c,1-c)");

    const TwoClassSample s(data, unit_grid(k));
    const DominationResult dr = domination_number(s, prm);
    const long g = dr.statistic();
    const long n_per = static_cast<long>(data.size() / k);
    const double p = use_asymptotic_p ? p_asymptotic(r, c) : p_u(r, c, n_per).value;

    double pv;
    if (g < 0) {
        pv = 0.0;
    } else {
        const boost::math::binomial_distribution<double> bin(static_cast<double>(k), p);
        const double gg = static_cast<double>(g);
        const double left = boost::math::cdf(bin, gg);
        const double right = g == 0 ? 1.0 : boost::math::cdf(boost::math::complement(bin, gg - 1.0));
        switch (alt) {
        case Alt::Left: pv = left; break;
        case Alt::Right: pv = right; break;
        default: pv = std::min(1.0, 2.0 * std::min(left, right)); break;
        }
    }

    TestReport t;
    t.method = use_asymptotic_p ? "dom-asy" : "dom-bin";
    t.stat = static_cast<double>(g);
    t.p_value = pv;
    t.reject = pv <= alpha;
    t.alt = alt;
    t.alpha = alpha;
    t.n = data.size();
    t.params = {{"k", k}, {"r", r}, {"c", c}, {"p", p}, {"gamma", dr.gamma}};
    return t;
}

double NullCalibration::frac_below(double v) const
{
    return static_cast<double>(std::lower_bound(values.begin(), values.end(), v) - values.begin())
         / static_cast<double>(values.size());
}

double NullCalibration::frac_equal(double v) const
{
    auto [lo, hi] = std::equal_range(values.begin(), values.end(), v);
    return static_cast<double>(hi - lo) / static_cast<double>(values.size());
}

double NullCalibration::left_critical(double alpha) const
{
    const double rr = static_cast<double>(values.size());
    long idx = static_cast<long>(std::ceil(alpha * rr - 1e-9)) - 1;
    idx = std::clamp<long>(idx, 0, static_cast<long>(values.size()) - 1);
    return values[static_cast<std::size_t>(idx)];
}

double NullCalibration::right_critical(double alpha) const
{
    const double rr = static_cast<double>(values.size());
    long idx = static_cast<long>(values.size()) - static_cast<long>(std::ceil(alpha * rr - 1e-9));
    idx = std::clamp<long>(idx, 0, static_cast<long>(values.size()) - 1);
    return values[static_cast<std::size_t>(idx)];
}

NullCalibration calibrate_null(std::size_t n, std::size_t reps, std::uint64_t seed,
                               const std::function<double(const std::vector<double>&)>& stat,
                               unsigned threads)
{
    if (reps == 0) throw std::invalid_argument("reps must be >= 1");
    NullCalibration cal;
    cal.seed = seed;
    cal.values.resize(reps);
    parallel_for(reps, [&](std::size_t i) {
        RngStream rng(seed, i);
        cal.values[i] = stat(sorted_copy(sample_uniform(n, rng)));
    }, threads);
    std::sort(cal.values.begin(), cal.values.end());
    return cal;
}

McDecision mc_decision(const NullCalibration& cal, double stat, Alt alt, double alpha, bool conservative)
{
    McDecision d{0.0, std::nullopt, std::nullopt};
    if (cal.values.empty()) throw std::invalid_argument("empty calibration");
    if (!(alpha > 0.0)) {
        return d;
    }
    const double a = alt == Alt::TwoSided ? alpha / 2.0 : alpha;
    if (alt != Alt::Right) {
        const double cv = cal.left_critical(a);
        d.left_cv = cv;
        if (stat < cv) d.reject_prob = 1.0;
        else if (stat == cv && !conservative)
            d.reject_prob = std::clamp((a - cal.frac_below(cv)) / cal.frac_equal(cv), 0.0, 1.0);
    }
    if (alt != Alt::Left) {
        const double cv = cal.right_critical(a);
        d.right_cv = cv;
        const double above = 1.0 - cal.frac_below(cv) - cal.frac_equal(cv);
        double pr = 0.0;
        if (stat > cv) pr = 1.0;
        else if (stat == cv && !conservative)
            pr = std::clamp((a - above) / cal.frac_equal(cv), 0.0, 1.0);
        d.reject_prob = std::min(1.0, d.reject_prob + pr);
    }
    return d;
}

namespace {

double tie_draw(std::uint64_t seed)
{
    RngStream rng(seed, ~std::uint64_t{0});
    return rng.uniform();
}

double mc_p_value(const NullCalibration& cal, double stat, Alt alt)
{
    const double below = cal.frac_below(stat), eq = cal.frac_equal(stat);
    const double left = below + eq, right = 1.0 - below;
    switch (alt) {
    case Alt::Left: return left;
    case Alt::Right: return right;
    default: return std::min(1.0, 2.0 * std::min(left, right));
    }
}

void fill_mc(TestReport& t, const NullCalibration& cal, Alt alt, double alpha, bool conservative, double tie_u)
{
    const McDecision d = mc_decision(cal, t.stat, alt, alpha, conservative);
    t.reject = tie_u < d.reject_prob;
    t.critical = alt == Alt::Right ? d.right_cv : d.left_cv;
    if (d.left_cv) t.params["left_cv"] = *d.left_cv;
    if (d.right_cv) t.params["right_cv"] = *d.right_cv;
    t.params["reject_prob"] = d.reject_prob;
    t.params["mc_p_value"] = mc_p_value(cal, t.stat, alt);
    t.params["rule"] = conservative ? "conservative" : "randomized";
    t.alt = alt;
    t.alpha = alpha;
    t.seed = cal.seed;
    t.reps = cal.reps();
    if (cal.reps() < 1000) t.params["warning"] = "fewer than 1000 calibration replicates";
}

}  // namespace

NullCalibration calibrate_dom(std::size_t n, std::size_t k, double r, double c, std::size_t reps,
                              std::uint64_t seed, unsigned threads)
{
    const PicdParams prm(r, c);
    return calibrate_null(n, reps, seed, [&](const std::vector<double>& u) {
        return static_cast<double>(gamma_unit_grid(u, k, prm)) - static_cast<double>(k);
    }, threads);
}

TestReport dom_test_mc(const std::vector<double>& data, std::size_t k, double r, double c, Alt alt,
                       double alpha, const NullCalibration& cal, bool conservative, double tie_u)
{
    check_unit_data(data);
    check_k(data.size(), k);
    const PicdParams prm(r, c);
    const TwoClassSample s(data, unit_grid(k));
    const DominationResult dr = domination_number(s, prm);

    TestReport t;
    t.method = "dom-mc";
    t.stat = static_cast<double>(dr.statistic());
    t.n = data.size();
    t.params = {{"k", k}, {"r", r}, {"c", c}, {"gamma", dr.gamma}};
    fill_mc(t, cal, alt, alpha, conservative, tie_u);
    return t;
}

TestReport dom_test_mc(const std::vector<double>& data, std::size_t k, double r, double c, Alt alt,
                       double alpha, const McCalib& calib)
{
    check_unit_data(data);
    const NullCalibration cal = calibrate_dom(data.size(), k, r, c, calib.reps, calib.seed, calib.threads);
    return dom_test_mc(data, k, r, c, alt, alpha, cal, calib.conservative, tie_draw(calib.seed));
}

double kolmogorov_q(double lambda)
{
    if (!(lambda > 0.0)) return 1.0;
    if (lambda < 1.0) {
        // small-lambda form of the same distribution converges much faster
        const double pi2 = M_PI * M_PI;
        double s = 0.0;
        for (int k = 1; k < 100; ++k) {
            const double t = std::exp(-(2.0 * k - 1) * (2.0 * k - 1) * pi2 / (8.0 * lambda * lambda));
            s += t;
            if (t < 1e-16) break;
        }
        return std::clamp(1.0 - std::sqrt(2.0 * M_PI) / lambda * s, 0.0, 1.0);
    }
    double s = 0.0;
    for (int k = 1; k < 1000; ++k) {
        const double t = std::exp(-2.0 * k * k * lambda * lambda);
        s += (k % 2 ? t : -t);
        if (t < 1e-12) break;
    }
    return std::clamp(2.0 * s, 0.0, 1.0);
}

TestReport ks_test(const std::vector<double>& data, Alt alt, double alpha)
{
    if (data.empty()) throw std::invalid_argument("KS test needs n >= 1");
    const std::vector<double> x = sorted_copy(data);
    const double n = static_cast<double>(x.size());
    double dplus = 0.0, dminus = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = std::clamp(x[i], 0.0, 1.0);
        dplus = std::max(dplus, static_cast<double>(i + 1) / n - f);
        dminus = std::max(dminus, f - static_cast<double>(i) / n);
    }
    TestReport t;
    t.method = "ks";
    t.alt = alt;
    t.alpha = alpha;
    t.n = x.size();
    double pv;
    // left: data stochastically smaller than uniform, so the EDF sits above x
    switch (alt) {
    case Alt::Left:
        t.stat = dplus;
        pv = std::exp(-2.0 * n * dplus * dplus);
        break;
    case Alt::Right:
        t.stat = dminus;
        pv = std::exp(-2.0 * n * dminus * dminus);
        break;
    default:
        t.stat = std::max(dplus, dminus);
        pv = kolmogorov_q(std::sqrt(n) * t.stat);
        break;
    }
    t.p_value = std::min(1.0, pv);
    t.reject = *t.p_value <= alpha;
    return t;
}

TestReport chisq_test(const std::vector<double>& data, std::size_t k_bins, double alpha)
{
    check_unit_data(data);
    check_k(data.size(), k_bins);
    std::vector<double> obs(k_bins, 0.0);
    const double kk = static_cast<double>(k_bins);
    for (double v : data) obs[std::min(k_bins - 1, static_cast<std::size_t>(v * kk))] += 1.0;
    const double e = static_cast<double>(data.size()) / kk;
    double x2 = 0.0;
    for (double o : obs) x2 += (o - e) * (o - e) / e;

    TestReport t;
    t.method = "chisq";
    t.stat = x2;
    t.p_value = k_bins > 1 ? boost::math::gamma_q((kk - 1.0) / 2.0, x2 / 2.0) : 1.0;
    t.reject = *t.p_value <= alpha;
    t.alt = Alt::Right;
    t.alpha = alpha;
    t.n = data.size();
    t.params = {{"bins", k_bins}, {"df", k_bins - 1}};
    return t;
}

double arc_statistic(const std::vector<double>& sorted_u, std::size_t k, const ArcParams& ap)
{
    const TwoClassSample s(sorted_u, unit_grid(k));
    const Digraph d = ap.family == Family::Picd ? build_picd(s, PicdParams(ap.r_or_tau, ap.c))
                                                 : build_cicd(s, CicdParams(ap.r_or_tau, ap.c));
    return arc_density(d);
}

NullCalibration calibrate_arc(std::size_t n, std::size_t k, const ArcParams& ap, std::size_t reps,
                              std::uint64_t seed, unsigned threads)
{
    return calibrate_null(n, reps, seed, [&](const std::vector<double>& u) { return arc_statistic(u, k, ap); },
                          threads);
}

TestReport arc_density_test(const std::vector<double>& data, std::size_t k, const ArcParams& ap, Alt alt,
                            double alpha, const NullCalibration& cal, bool conservative, double tie_u)
{
    check_unit_data(data);
    check_k(data.size(), k);
    TestReport t;
    t.method = ap.family == Family::Picd ? "arc-picd" : "arc-cicd";
    t.stat = arc_statistic(sorted_copy(data), k, ap);
    t.n = data.size();
    t.params = {{"k", k}, {ap.family == Family::Picd ? "r" : "tau", ap.r_or_tau}, {"c", ap.c}};
    fill_mc(t, cal, alt, alpha, conservative, tie_u);
    return t;
}

TestReport arc_density_test(const std::vector<double>& data, std::size_t k, const ArcParams& ap, Alt alt,
                            double alpha, const McCalib& calib)
{
    check_unit_data(data);
    const NullCalibration cal = calibrate_arc(data.size(), k, ap, calib.reps, calib.seed, calib.threads);
    return arc_density_test(data, k, ap, alt, alpha, cal, calib.conservative, tie_draw(calib.seed));
}

Method parse_method(const std::string& s)
{
    if (s == "dom-bin") return Method::DomBin;
    if (s == "dom-mc") return Method::DomMc;
    if (s == "dom-asy") return Method::DomAsy;
    if (s == "ks") return Method::Ks;
    if (s == "chisq") return Method::ChiSq;
    if (s == "arc-picd") return Method::ArcPicd;
    if (s == "arc-cicd") return Method::ArcCicd;
    throw std::invalid_argument("unknown method '" + s + "'");
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::DomBin: return "dom-bin";
    case Method::DomMc: return "dom-mc";
    case Method::DomAsy: return "dom-asy";
    case Method::Ks: return "ks";
    case Method::ChiSq: return "chisq";
    case Method::ArcPicd: return "arc-picd";
    case Method::ArcCicd: return "arc-cicd";
    }
    return "?";
}

TestReport run_test(const std::vector<double>& data, const TestConfig& cfg)
{
    const std::size_t k = cfg.k ? cfg.k : default_k(data.size());
    switch (cfg.method) {
    case Method::DomBin: return dom_test_binomial(data, k, cfg.r, cfg.c, cfg.alt, cfg.alpha, false);
    case Method::DomAsy: return dom_test_binomial(data, k, cfg.r, cfg.c, cfg.alt, cfg.alpha, true);
    case Method::DomMc: return dom_test_mc(data, k, cfg.r, cfg.c, cfg.alt, cfg.alpha, cfg.calib);
    case Method::Ks: return ks_test(data, cfg.alt, cfg.alpha);
    case Method::ChiSq: return chisq_test(data, k, cfg.alpha);
    case Method::ArcPicd:
        return arc_density_test(data, k, {Family::Picd, cfg.r, cfg.c}, cfg.alt, cfg.alpha, cfg.calib);
    case Method::ArcCicd:
        return arc_density_test(data, k, {Family::Cicd, cfg.tau, cfg.c}, cfg.alt, cfg.alpha, cfg.calib);
    }
    throw std::logic_error("unhandled method");
}

namespace {

double phi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::vector<double> split_nums(const std::string& s)
{
    std::vector<double> v = parse_floats(s);
    return v;
}

}  // namespace

Cdf parse_cdf(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string fam = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (fam == "identity" || fam == "uniform") return {"identity", [](double x) { return x; }};
    if (fam == "pow") {
        const auto v = split_nums(rest);
        if (v.size() != 1 || !(v[0] > 0.0)) throw std::invalid_argument("pow needs one exponent > 0");
        const double p = v[0];
        return {spec, [p](double x) { return std::pow(x, p); }};
    }
    if (fam == "tnorm") {
        const auto v = split_nums(rest);
        if (v.size() != 2 || !(v[1] > 0.0)) throw std::invalid_argument("tnorm needs mu,sigma with sigma > 0");
        const double mu = v[0], sd = v[1];
        const double lo = phi(-mu / sd), hi = phi((1.0 - mu) / sd);
        return {spec, [=](double x) { return (phi((x - mu) / sd) - lo) / (hi - lo); }};
    }
    if (fam == "table") {
        const auto v = read_floats_file(rest);
        if (v.size() < 4 || v.size() % 2) throw std::invalid_argument("table needs 'x F' pairs");
        std::vector<double> xs, fs;
        for (std::size_t i = 0; i < v.size(); i += 2) {
            xs.push_back(v[i]);
            fs.push_back(v[i + 1]);
        }
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i] > xs[i - 1]) || !(fs[i] > fs[i - 1]))
                throw std::invalid_argument("table CDF must be strictly increasing");
        return {spec, [xs, fs](double x) {
                    if (x <= xs.front()) return fs.front();
                    if (x >= xs.back()) return fs.back();
                    const std::size_t j =
                        static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
                    const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
                    return fs[j - 1] + w * (fs[j] - fs[j - 1]);
                }};
    }
    throw std::invalid_argument("unknown cdf '" + spec + "'");
}

TestReport gof_via_transform(const std::vector<double>& data, const Cdf& cdf, const TestConfig& cfg)
{
    std::vector<double> u(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        u[i] = cdf.f(data[i]);
        if (!(u[i] > 0.0 && u[i] < 1.0)) throw std::invalid_argument("F(x) outside (0,1)");
    }
    TestReport t = run_test(u, cfg);
    if (cdf.name != "identity") t.params["cdf"] = cdf.name;
    return t;
}

}  // namespace picd
