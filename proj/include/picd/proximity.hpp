#pragma once

#include <functional>

#include "picd/core.hpp"

namespace picd {

// Open interval (lo,hi), or the singleton {lo} when singleton is set.
struct Region {
    double lo;
    double hi;
    bool singleton = false;

    bool contains(double v) const { return singleton ? v == lo : (lo < v && v < hi); }
    bool operator==(const Region&) const = default;
};

// N(x,r,c). x must lie in iv or be one of its finite endpoints.
// A point equal to M_{c,i} takes the right branch.
Region picd_region(double x, const Interval& iv, const PicdParams& p);

// N_CS(x,tau,c), bounded intervals only.
Region cicd_region(double x, const Interval& iv, const CicdParams& p);

// N_F(x,r,c) = F^{-1}(N(F(x),r,c)) on (0,1)
Region transformed_region(double x,
                          const std::function<double(double)>& cdf,
                          const std::function<double(double)>& inv_cdf,
                          const PicdParams& p);

}  // namespace picd
