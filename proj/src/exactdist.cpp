#include "picd/exactdist.hpp"

#include <cmath>
#include <stdexcept>

#include "picd/core.hpp"

namespace picd {

double Pmf::at(long q) const
{
    auto it = prob.find(q);
    return it == prob.end() ? 0.0 : it->second;
}

double Pmf::total() const
{
    double s = 0.0;
    for (const auto& [q, p] : prob) s += p;
    return s;
}

double Pmf::mean() const
{
    double s = 0.0;
    for (const auto& [q, p] : prob) s += static_cast<double>(q) * p;
    return s;
}

long Pmf::min() const { return prob.empty() ? 0 : prob.begin()->first; }
long Pmf::max() const { return prob.empty() ? 0 : prob.rbegin()->first; }

std::string BranchId::str() const
{
    if (regime == 'z') return "degenerate";
    std::string s{regime};
    s += std::to_string(piece);
    if (reflected) s += "'";
    return s;
}

namespace {

double pw(double base, long k) { return std::pow(base, static_cast<double>(k)); }

// (r-1)^(n-1) x^n
double xm1(double r, double x, long n) { return pw((r - 1.0) * x, n - 1) * x; }

// All forms are written as coefficient * base^n with every base in [-1,1]
// on the branch where they are used.

double pi_a1(double r, double, long n)
{
    const double q = (r + 1.0) * (r + 1.0);
    return r * r / q * pw(2.0 / r, n) - 2.0 * r / q * pw((r - 1.0) / (r * r), n - 1);
}

double pi_a2(double r, double c, long n)
{
    const double q = (r + 1.0) * (r + 1.0);
    return r / (r + 1.0) * (pw((c * r + 1.0) / r, n) - pw((1.0 - c) / r, n))
         - r / q * (pw((c * r * r + c * r - r + 1.0) / r, n) + pw((r - 1.0) / (r * r), n - 1)
                    + xm1(r, (c * r + c - 1.0) / r, n));
}

double common_a34(double r, double c, long n)
{
    const double q = (r + 1.0) * (r + 1.0);
    return 1.0 - r / (r + 1.0) * (pw((1.0 - c) / r, n) + pw(c / r, n))
         - (pw((1.0 - c) * r, n) + pw(c * r, n)) / (r + 1.0) + pw(r - 1.0, n) / q;
}

double p_a3(double r, double c, long n)
{
    const double q = (r + 1.0) * (r + 1.0);
    return common_a34(r, c, n)
         - r / q * (xm1(r, (r - c * r - c) / r, n) + xm1(r, (c * r + c - 1.0) / r, n));
}

double pi_a4(double r, double c, long n)
{
    const double q = (r + 1.0) * (r + 1.0);
    return common_a34(r, c, n) - r / q * xm1(r, (r - c * r - c) / r, n)
         + xm1(r, 1.0 - c * r - c, n) / q;
}

double pi_b3(double r, double c, long n)
{
    const double q = (r + 1.0) * (r + 1.0);
    return r / (r + 1.0) * (pw((c * r + 1.0) / r, n) - pw((1.0 - c) / r, n))
         - r / q * (pw((r - 1.0) / (r * r), n - 1) + pw((c * r * r + c * r - r + 1.0) / r, n))
         + xm1(r, 1.0 - c * r - c, n) / q;
}

double p_c4(double r, double c, long n)
{
    return r / (r + 1.0) * (pw((c * r + 1.0) / r, n) - pw((1.0 - c) / r, n)) - pw(c, n);
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

PuResult p_u(double r, double c, long n)
{
    if (std::isnan(r) || r < 1.0) throw std::invalid_argument("r must be >= 1");
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must be in [0,1]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    BranchId b;
    if (n == 1 || c == 0.0 || c == 1.0 || r == kInf) return {0.0, b};
    if (c > 0.5) {
        c = 1.0 - c;
        b.reflected = true;
    }
    auto done = [&](char regime, int piece, double v) {
        b.regime = regime;
        b.piece = piece;
        return PuResult{clamp01(v), b};
    };

    const double cstar = (3.0 - std::sqrt(5.0)) / 2.0;
    if (c >= cstar) {
        if (r >= 1.0 / c) return done('a', 1, pi_a1(r, c, n));
        if (r >= 1.0 / (1.0 - c)) return done('a', 2, pi_a2(r, c, n));
        if (r >= (1.0 - c) / c) return done('a', 3, p_a3(r, c, n));
        return done('a', 4, pi_a4(r, c, n));
    }
    if (c >= 0.25) {
        if (r >= 1.0 / c) return done('b', 1, pi_a1(r, c, n));
        if (r >= (1.0 - c) / c) return done('b', 2, pi_a2(r, c, n));
        if (r >= 1.0 / (1.0 - c)) return done('b', 3, pi_b3(r, c, n));
        return done('b', 4, pi_a4(r, c, n));
    }
    const double s = std::sqrt(1.0 - 4.0 * c);
    if (r >= 1.0 / c) return done('c', 1, pi_a1(r, c, n));
    if (r >= (1.0 - c) / c) return done('c', 2, pi_a2(r, c, n));
    if (r >= (1.0 + s) / (2.0 * c)) return done('c', 3, pi_b3(r, c, n));
    if (r >= (1.0 - s) / (2.0 * c)) return done('c', 4, p_c4(r, c, n));
    if (r >= 1.0 / (1.0 - c)) return done('c', 5, pi_b3(r, c, n));
    return done('c', 6, pi_a4(r, c, n));
}

bool is_r_star(double r, double c)
{
    const double rs = r_star(c);
    return std::fabs(r - rs) <= 1e-9 * rs;
}

double p_asymptotic(double r, double c)
{
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must be in (0,1)");
    if (std::isnan(r) || r < 1.0) throw std::invalid_argument("r must be >= 1");
    if (is_r_star(r, c)) {
        if (c == 0.5) return 4.0 / 9.0;
        const double rs = r_star(c);
        return rs / (rs + 1.0);
    }
    return r > r_star(c) ? 0.0 : 1.0;
}

double p_limit_general_f(Side side, int k, double fk_endpoint, double fk_center, double c)
{
    if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must be in (0,1)");
    const double w = side == Side::Left ? pw(1.0 - c, k + 1) : pw(c, k + 1);
    const double den = fk_endpoint + w * fk_center;
    if (den == 0.0) throw std::domain_error("zero denominator");
    return fk_endpoint / den;
}

double p_limit_cccd(int k, double fk_y1, double fk_mid_right, int l, double fl_y2, double fl_mid_left)
{
    return p_limit_general_f(Side::Left, k, fk_y1, fk_mid_right, 0.5)
         * p_limit_general_f(Side::Right, l, fl_y2, fl_mid_left, 0.5);
}

double composition_count(long n, long m)
{
    const double v = std::exp(std::lgamma(static_cast<double>(n + m + 1)) - std::lgamma(static_cast<double>(n + 1))
                              - std::lgamma(static_cast<double>(m + 1)));
    return v < 9.0e15 ? std::round(v) : v;
}

namespace {

// law of gamma on one interval holding j points
void interval_law(bool end, long j, double pu, double out[3])
{
    out[0] = out[1] = out[2] = 0.0;
    if (j == 0) out[0] = 1.0;
    else if (end) out[1] = 1.0;
    else {
        out[1] = 1.0 - pu;
        out[2] = pu;
    }
}

Pmf to_pmf(const std::vector<double>& v, double scale)
{
    Pmf p;
    for (std::size_t q = 0; q < v.size(); ++q)
        if (v[q] != 0.0) p.prob[static_cast<long>(q)] = v[q] * scale;
    return p;
}

}  // namespace

Pmf exact_pmf_uniform(long n, long m, double r, double c, double cap)
{
    if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
    PicdParams chk(r, c);
    (void)chk;
    const double total = composition_count(n, m);
    if (total > cap) throw std::length_error("composition count exceeds cap; use Monte Carlo");

    std::vector<double> pu(static_cast<std::size_t>(n + 1));
    for (long j = 1; j <= n; ++j) pu[j] = p_u(r, c, j).value;

    const std::size_t qmax = static_cast<std::size_t>(2 * m + 2);
    // a[j][q]: summed over compositions of j points into the intervals seen so far
    std::vector<std::vector<double>> a(static_cast<std::size_t>(n + 1), std::vector<double>(qmax + 1, 0.0));
    for (long j = 0; j <= n; ++j) {
        double law[3];
        interval_law(true, j, 0.0, law);
        for (int g = 0; g < 3; ++g) a[j][g] = law[g];
    }
    for (long i = 1; i <= m; ++i) {
        const bool end = (i == m);
        std::vector<std::vector<double>> b(a.size(), std::vector<double>(qmax + 1, 0.0));
        for (long j = 0; j <= n; ++j) {
            for (long t = 0; t <= j; ++t) {
                double law[3];
                interval_law(end, t, t >= 1 ? pu[t] : 0.0, law);
                const auto& src = a[j - t];
                auto& dst = b[j];
                for (std::size_t q = 0; q <= qmax; ++q) {
                    if (src[q] == 0.0) continue;
                    for (std::size_t g = 0; g < 3 && q + g <= qmax; ++g)
                        if (law[g] != 0.0) dst[q + g] += src[q] * law[g];
                }
            }
        }
        a.swap(b);
    }
    return to_pmf(a[n], 1.0 / total);
}

Pmf exact_pmf_conditional(const std::vector<long>& counts, double r, double c)
{
    if (counts.size() < 2) throw std::invalid_argument("need at least the two end intervals");
    PicdParams chk(r, c);
    (void)chk;
    std::vector<double> acc{1.0};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw std::invalid_argument("negative count");
        const bool end = (i == 0 || i + 1 == counts.size());
        double law[3];
        interval_law(end, counts[i], counts[i] >= 1 ? p_u(r, c, counts[i]).value : 0.0, law);
        std::vector<double> next(acc.size() + 2, 0.0);
        for (std::size_t q = 0; q < acc.size(); ++q)
            for (std::size_t g = 0; g < 3; ++g) next[q + g] += acc[q] * law[g];
        acc.swap(next);
    }
    return to_pmf(acc, 1.0);
}

double expected_gamma_uniform(long n, long m, double r, double c, double cap)
{
    return exact_pmf_uniform(n, m, r, c, cap).mean();
}

Pmf asymptotic_pmf_multi(long m_bounded, double r, double c,
                         const std::vector<double>& per_interval_p, long baseline)
{
    if (m_bounded < 0) throw std::invalid_argument("m_bounded must be >= 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must be in (0,1)");
    Pmf out;
    if (!is_r_star(r, c)) {
        out.prob[r > r_star(c) ? baseline : baseline + m_bounded] = 1.0;
        return out;
    }
    std::vector<double> ps = per_interval_p;
    if (ps.empty()) ps.assign(static_cast<std::size_t>(m_bounded), p_asymptotic(r, c));
    if (ps.size() != static_cast<std::size_t>(m_bounded))
        throw std::invalid_argument("need one probability per bounded interval");
    std::vector<double> acc{1.0};
    for (double p : ps) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probabilities must be in [0,1]");
        std::vector<double> next(acc.size() + 1, 0.0);
        for (std::size_t q = 0; q < acc.size(); ++q) {
            next[q] += acc[q] * (1.0 - p);
            next[q + 1] += acc[q] * p;
        }
        acc.swap(next);
    }
    for (std::size_t q = 0; q < acc.size(); ++q)
        if (acc[q] != 0.0) out.prob[baseline + static_cast<long>(q)] = acc[q];
    return out;
}

}  // namespace picd
