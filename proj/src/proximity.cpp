#include "picd/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace picd {

namespace {

bool on_endpoint(double x, const Interval& iv)
{
    return x == iv.lo || x == iv.hi;
}

void require_inside(double x, const Interval& iv)
{
    if (!(iv.lo < x && x < iv.hi)) throw std::invalid_argument("x outside the interval");
}

}  // namespace

Region picd_region(double x, const Interval& iv, const PicdParams& p)
{
    if (on_endpoint(x, iv) && std::isfinite(x)) return {x, x, true};
    require_inside(x, iv);
    if (p.r_infinite()) return {iv.lo, iv.hi};

    const double r = p.r;
    switch (iv.kind) {
    case IntervalKind::LeftEnd:
        return {iv.hi - r * (iv.hi - x), iv.hi};
    case IntervalKind::RightEnd:
        return {iv.lo, iv.lo + r * (x - iv.lo)};
    case IntervalKind::Middle:
        break;
    }
    if (x < iv.center(p.c))
        return {iv.lo, std::min(iv.hi, iv.lo + r * (x - iv.lo))};
    return {std::max(iv.lo, iv.hi - r * (iv.hi - x)), iv.hi};
}

Region cicd_region(double x, const Interval& iv, const CicdParams& p)
{
    if (!iv.bounded()) throw std::invalid_argument("CS region needs a bounded interval");
    require_inside(x, iv);
    const double t = p.tau, c = p.c;
    double lo, hi;
    if (x < iv.center(c)) {
        lo = x - t * (x - iv.lo);
        hi = x + t * (1.0 - c) / c * (x - iv.lo);
    } else {
        lo = x - c * t / (1.0 - c) * (iv.hi - x);
        hi = x + t * (iv.hi - x);
    }
    return {std::max(lo, iv.lo), std::min(hi, iv.hi)};
}

Region transformed_region(double x,
                          const std::function<double(double)>& cdf,
                          const std::function<double(double)>& inv_cdf,
                          const PicdParams& p)
{
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("x must lie in (0,1)");
    const double u = cdf(x);
    if (!(u > 0.0 && u < 1.0) || !std::isfinite(u))
        throw std::domain_error("F(x) must lie in (0,1)");
    const Region g = picd_region(u, {0.0, 1.0, IntervalKind::Middle}, p);
    const double lo = inv_cdf(g.lo), hi = inv_cdf(g.hi);
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::domain_error("F^{-1} failed");
    return {lo, hi};
}

}  // namespace picd
