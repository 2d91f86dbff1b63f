#include "picd/mc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "picd/domination.hpp"
#include "picd/exactdist.hpp"
#include "picd/parallel.hpp"

namespace picd {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_num(const std::string& s)
{
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

std::vector<double> expand_values(const std::string& s)
{
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        std::stringstream ss(s);
        std::string a, st, b;
        std::getline(ss, a, ':');
        std::getline(ss, st, ':');
        std::getline(ss, b, ':');
        const double lo = to_num(a), step = to_num(st), hi = to_num(b);
        if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad range '" + s + "'");
        const long cnt = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
        for (long i = 0; i <= cnt; ++i) out.push_back(lo + static_cast<double>(i) * step);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(to_num(trim(item)));
    return out;
}

std::uint64_t calib_seed(std::uint64_t seed) { return mix64(seed ^ 0x5eed5eed0ca1b000ULL); }
std::uint64_t tie_seed(std::uint64_t seed) { return mix64(seed ^ 0x7e57ab1e7e57ab1eULL); }

bool is_mc_method(Method m) { return m == Method::DomMc || m == Method::ArcPicd || m == Method::ArcCicd; }

}  // namespace

std::vector<GridPoint> parse_grid(const std::string& spec)
{
    std::vector<double> rs, cs;
    bool star = false;
    // split at commas that start a new "key=" token
    std::vector<std::string> parts;
    std::string cur;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const std::string t = trim(tok);
        if (t.find('=') != std::string::npos || cur.empty()) {
            if (!cur.empty()) parts.push_back(cur);
            cur = t;
        } else {
            cur += ";" + t;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    for (const auto& p : parts) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad grid item '" + p + "'");
        const std::string key = trim(p.substr(0, eq)), val = trim(p.substr(eq + 1));
        if (key == "r" || key == "tau") {
            if (val == "star" || val == "r*") star = true;
            else rs = expand_values(val);
        } else if (key == "c") {
            cs = expand_values(val);
        } else {
            throw std::invalid_argument("unknown grid key '" + key + "'");
        }
    }
    if (cs.empty() || (rs.empty() && !star)) throw std::invalid_argument("grid needs r (or r=star) and c");
    std::vector<GridPoint> g;
    for (double c : cs) {
        if (star) g.push_back({r_star(c), c});
        for (double r : rs) g.push_back({r, c});
    }
    return g;
}

void ExperimentPlan::validate() const
{
    if (methods.empty()) throw std::invalid_argument("plan needs at least one method");
    if (grid.empty()) throw std::invalid_argument("plan grid is empty");
    if (dists.empty()) throw std::invalid_argument("plan needs at least one distribution");
    if (reps < 100) throw std::invalid_argument("reps must be >= 100");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in [0,1)");
    if (k_eff() > n) throw std::invalid_argument("need n >= k");
}

ExperimentPlan ExperimentPlan::from_kv(const std::map<std::string, std::string>& kv)
{
    ExperimentPlan p;
    std::string rv, cv;
    for (const auto& [key, val] : kv) {
        if (key == "methods" || key == "method") {
            p.methods.clear();
            std::stringstream ss(val);
            std::string m;
            while (std::getline(ss, m, ',')) p.methods.push_back(parse_method(trim(m)));
        } else if (key == "grid") {
            p.grid = parse_grid(val);
        } else if (key == "r") {
            rv = val;
        } else if (key == "c") {
            cv = val;
        } else if (key == "n") {
            p.n = static_cast<std::size_t>(to_num(val));
        } else if (key == "k") {
            p.k = val == "auto" ? 0 : static_cast<std::size_t>(to_num(val));
        } else if (key == "alt" || key == "side") {
            p.alt = parse_alt(val);
        } else if (key == "dist") {
            p.dists.clear();
            std::stringstream ss(val);
            std::string d;
            while (std::getline(ss, d, ';')) p.dists.push_back(AlternativeSpec::parse(trim(d)));
        } else if (key == "reps") {
            p.reps = static_cast<std::size_t>(to_num(val));
        } else if (key == "alpha") {
            p.alpha = to_num(val);
        } else if (key == "seed") {
            p.seed = static_cast<std::uint64_t>(std::stoull(val));
        } else if (key == "calib_reps") {
            p.calib_reps = static_cast<std::size_t>(to_num(val));
        } else if (key == "conservative") {
            p.conservative = (val == "1" || val == "true" || val == "yes");
        } else if (key == "threads") {
            p.threads = static_cast<unsigned>(to_num(val));
        } else if (key == "out") {
            p.out = val;
        } else {
            throw std::invalid_argument("unknown plan key '" + key + "'");
        }
    }
    if (p.grid.empty() && !cv.empty()) p.grid = parse_grid("r=" + (rv.empty() ? "star" : rv) + ",c=" + cv);
    if (p.dists.empty()) p.dists.push_back(AlternativeSpec{});
    return p;
}

ExperimentPlan ExperimentPlan::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open plan " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find_first_of("#");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("plan line without '=': " + line);
        std::string val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
        kv[trim(line.substr(0, eq))] = val;
    }
    return from_kv(kv);
}

namespace {

std::string csv_field(const std::string& f)
{
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char ch : f) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

std::string ResultTable::csv() const
{
    std::ostringstream os;
    os << kCsvHeader << (size_study ? ",flag" : "") << '\n';
    for (const auto& r : rows) {
        os << r.method << ',' << r.r << ',' << r.c << ',' << r.n << ',' << r.k << ',' << r.alt << ','
           << csv_field(r.param) << ',' << std::setprecision(6) << r.estimate << ',' << r.se << ',' << r.reps << ','
           << r.seed;
        if (size_study) os << ',' << r.flag;
        os << '\n';
    }
    return os.str();
}

const ResultRow* ResultTable::find(const std::string& method, const std::string& param) const
{
    for (const auto& r : rows)
        if (r.method == method && r.param == param) return &r;
    return nullptr;
}

std::string size_flag(double estimate, double alpha, std::size_t reps)
{
    const double band = 1.645 * std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(reps));
    if (estimate > alpha + band) return "liberal";
    if (estimate < alpha - band) return "conservative";
    return "";
}

ResultTable run_power_study(const ExperimentPlan& plan)
{
    plan.validate();
    const std::size_t n = plan.n, k = plan.k_eff();
    ResultTable table;
    for (const GridPoint& gp : plan.grid) {
        // calibrations are shared by every distribution at this grid point
        std::vector<NullCalibration> cal(plan.methods.size());
        for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
            const Method m = plan.methods[mi];
            if (m == Method::DomMc)
                cal[mi] = calibrate_dom(n, k, gp.r, gp.c, plan.calib_reps, calib_seed(plan.seed), plan.threads);
            else if (m == Method::ArcPicd)
                cal[mi] = calibrate_arc(n, k, {Family::Picd, gp.r, gp.c}, plan.calib_reps, calib_seed(plan.seed),
                                        plan.threads);
            else if (m == Method::ArcCicd)
                cal[mi] = calibrate_arc(n, k, {Family::Cicd, gp.r, gp.c}, plan.calib_reps, calib_seed(plan.seed),
                                        plan.threads);
        }
        for (const AlternativeSpec& dist : plan.dists) {
            const std::size_t nm = plan.methods.size();
            std::vector<unsigned char> hits(plan.reps * nm, 0);
            parallel_for(plan.reps, [&](std::size_t rep) {
                RngStream rng(plan.seed, rep);
                const std::vector<double> x = dist.draw(n, k, rng);
                const double tie_u = RngStream(tie_seed(plan.seed), rep).uniform();
                for (std::size_t mi = 0; mi < nm; ++mi) {
                    const Method m = plan.methods[mi];
                    TestReport t;
                    switch (m) {
                    case Method::DomBin:
                    case Method::DomAsy:
                        t = dom_test_binomial(x, k, gp.r, gp.c, plan.alt, plan.alpha, m == Method::DomAsy);
                        break;
                    case Method::DomMc:
                        t = dom_test_mc(x, k, gp.r, gp.c, plan.alt, plan.alpha, cal[mi], plan.conservative, tie_u);
                        break;
                    case Method::Ks: t = ks_test(x, Alt::TwoSided, plan.alpha); break;
                    case Method::ChiSq: t = chisq_test(x, k, plan.alpha); break;
                    case Method::ArcPicd:
                    case Method::ArcCicd:
                        t = arc_density_test(x, k, {m == Method::ArcPicd ? Family::Picd : Family::Cicd, gp.r, gp.c},
                                             plan.alt, plan.alpha, cal[mi], plan.conservative, tie_u);
                        break;
                    }
                    hits[rep * nm + mi] = t.reject ? 1 : 0;
                }
            }, plan.threads);
            for (std::size_t mi = 0; mi < nm; ++mi) {
                std::size_t cnt = 0;
                for (std::size_t rep = 0; rep < plan.reps; ++rep) cnt += hits[rep * nm + mi];
                ResultRow row;
                row.method = to_string(plan.methods[mi]);
                row.r = gp.r;
                row.c = gp.c;
                row.n = n;
                row.k = k;
                const Method m = plan.methods[mi];
                row.alt = (m == Method::Ks || m == Method::ChiSq) ? (m == Method::Ks ? "two" : "right")
                                                                   : to_string(plan.alt);
                row.param = dist.str();
                row.reps = plan.reps;
                row.estimate = static_cast<double>(cnt) / static_cast<double>(plan.reps);
                row.se = std::sqrt(row.estimate * (1.0 - row.estimate) / static_cast<double>(plan.reps));
                row.seed = plan.seed;
                if (is_mc_method(m) && plan.calib_reps < 1000) row.flag = "few-calib";
                table.rows.push_back(row);
            }
        }
    }
    return table;
}

ResultTable run_size_study(const ExperimentPlan& plan)
{
    ExperimentPlan p = plan;
    p.dists = {AlternativeSpec{}};
    ResultTable t = run_power_study(p);
    t.size_study = true;
    for (auto& row : t.rows) row.flag = size_flag(row.estimate, p.alpha, p.reps);
    return t;
}

Estimate estimate_p2(std::size_t n, const AlternativeSpec& sampler, double r, double c, std::size_t reps,
                     std::uint64_t seed, unsigned threads)
{
    const PicdParams prm(r, c);
    if (reps == 0) throw std::invalid_argument("reps must be >= 1");
    if (n <= 1) return {0.0, 0.0};
    std::vector<unsigned char> two(reps, 0);
    parallel_for(reps, [&](std::size_t i) {
        RngStream rng(seed, i);
        std::vector<double> x = sampler.draw(n, 1, rng);
        std::sort(x.begin(), x.end());
        two[i] = gamma_unit_grid(x, 1, prm) == 2 ? 1 : 0;
    }, threads);
    std::size_t cnt = 0;
    for (auto v : two) cnt += v;
    const double p = static_cast<double>(cnt) / static_cast<double>(reps);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(reps))};
}

CriticalValues estimate_critical_values(std::size_t n, std::size_t k, double r, double c, std::size_t reps,
                                        std::uint64_t seed, double alpha, unsigned threads)
{
    const NullCalibration cal = calibrate_dom(n, k, r, c, reps, seed, threads);
    CriticalValues cv;
    cv.left_cv = cal.left_critical(alpha);
    cv.right_cv = cal.right_critical(alpha);
    cv.left_below = cal.frac_below(cv.left_cv);
    cv.left_atom = cal.frac_equal(cv.left_cv);
    cv.right_atom = cal.frac_equal(cv.right_cv);
    cv.right_above = 1.0 - cal.frac_below(cv.right_cv) - cv.right_atom;
    for (double v : cal.values) cv.pmf[std::lround(v)] += 1.0 / static_cast<double>(reps);
    return cv;
}

}  // namespace picd
