#include "picd/domination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "picd/digraph.hpp"

namespace picd {

GammaOneRegion gamma_one_region(std::span<const double> xs, const Interval& iv, const PicdParams& p)
{
    if (xs.empty()) throw std::invalid_argument("Gamma_1 region needs a nonempty interval");
    if (!iv.bounded()) throw std::invalid_argument("Gamma_1 region needs a bounded interval");
    const double m = iv.center(p.c);
    if (p.r_infinite()) return {iv.lo, m, iv.hi};
    const double r = p.r;
    const double a = (xs.back() + iv.lo * (r - 1.0)) / r;
    const double b = (xs.front() + iv.hi * (r - 1.0)) / r;
    return {a, m, b};
}

IntervalGamma interval_gamma(std::span<const double> xs, const Interval& iv, const PicdParams& p)
{
    const std::size_t n = xs.size();
    if (n == 0) return {0, {}};
    switch (iv.kind) {
    case IntervalKind::LeftEnd:
        return {1, {0}};
    case IntervalKind::RightEnd:
        return {1, {n - 1}};
    case IntervalKind::Middle:
        break;
    }
    if (n == 1) return {1, {0}};

    const double m = iv.center(p.c);
    // members closest to M from the left (strictly below) and the right
    const std::size_t split =
        static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), m) - xs.begin());
    const bool has_lo = split > 0, has_hi = split < n;
    const std::size_t lo = split - 1, hi = split;

    if (p.r == 1.0) {
        IntervalGamma g;
        if (has_lo) g.witness.push_back(lo);
        if (has_hi) g.witness.push_back(hi);
        g.gamma = static_cast<int>(g.witness.size());
        return g;
    }

    const GammaOneRegion g1 = gamma_one_region(xs, iv, p);
    const bool lo_in = has_lo && g1.contains(xs[lo]);
    const bool hi_in = has_hi && g1.contains(xs[hi]);
    if (lo_in && hi_in) return {1, {(m - xs[lo] <= xs[hi] - m) ? lo : hi}};
    if (lo_in) return {1, {lo}};
    if (hi_in) return {1, {hi}};
    return {2, {lo, hi}};
}

DominationResult domination_number(const TwoClassSample& s, const PicdParams& p, bool verify)
{
    const Intervalization iz = intervalize(s);
    DominationResult res;
    res.bounded_intervals = iz.bounded_count();
    res.per_interval.resize(iz.size());
    const auto& x = s.x();
    for (std::size_t i = 0; i < iz.size(); ++i) {
        const auto& mem = iz.members[i];
        if (mem.empty()) continue;
        // members of an interval are a contiguous run of the sorted x
        std::span<const double> xs(x.data() + mem.front(), mem.size());
        const IntervalGamma g = interval_gamma(xs, iz.intervals[i], p);
        res.per_interval[i] = g.gamma;
        res.gamma += static_cast<std::size_t>(g.gamma);
        for (std::size_t w : g.witness) res.witness.push_back(mem.front() + w);
    }
    std::sort(res.witness.begin(), res.witness.end());

    if (verify && s.n() <= kBruteForceCap) {
        const Digraph d = build_picd(s, p);
        if (brute_force_domination(d).gamma != res.gamma || !dominates(d, res.witness))
            throw std::logic_error("domination number disagrees with brute force");
    }
    return res;
}

std::size_t gamma_unit_grid(std::span<const double> u, std::size_t k, const PicdParams& p)
{
    std::size_t gamma = 0;
    std::size_t start = 0;
    const double kk = static_cast<double>(k);
    for (std::size_t i = 0; i < k && start < u.size(); ++i) {
        const double hi = static_cast<double>(i + 1) / kk;
        std::size_t end = start;
        while (end < u.size() && u[end] < hi) ++end;
        if (end > start) {
            const Interval iv{static_cast<double>(i) / kk, hi, IntervalKind::Middle};
            gamma += static_cast<std::size_t>(interval_gamma(u.subspan(start, end - start), iv, p).gamma);
        }
        start = end;
    }
    return gamma;
}

}  // namespace picd
