#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "picd/core.hpp"

namespace picd {

// Left piece (a, M] and right piece [M, b) of the Gamma_1 region.
struct GammaOneRegion {
    double a;
    double m;
    double b;

    bool left_empty() const { return !(a < m); }
    bool right_empty() const { return !(m < b); }
    // membership consistent with N(M) taking the right branch
    bool contains(double x) const { return (a < x && x < m) || (m <= x && x < b); }
};

// xs: the (sorted) members of a bounded interval, nonempty
GammaOneRegion gamma_one_region(std::span<const double> xs, const Interval& iv, const PicdParams& p);

struct IntervalGamma {
    int gamma = 0;
    std::vector<std::size_t> witness;  // positions within xs
};

IntervalGamma interval_gamma(std::span<const double> xs, const Interval& iv, const PicdParams& p);

struct DominationResult {
    std::size_t gamma = 0;
    std::vector<int> per_interval;
    std::vector<std::size_t> witness;  // sorted x indices
    std::size_t bounded_intervals = 0;

    long statistic() const { return static_cast<long>(gamma) - static_cast<long>(bounded_intervals); }
};

// verify=true cross-checks against brute force when n is within the oracle cap
DominationResult domination_number(const TwoClassSample& s, const PicdParams& p, bool verify = false);

// gamma over the k subintervals of (0,1) for sorted data strictly inside (0,1)
// that avoids the grid points; the fast path used by the tests and simulations
std::size_t gamma_unit_grid(std::span<const double> sorted_u, std::size_t k, const PicdParams& p);

}  // namespace picd
