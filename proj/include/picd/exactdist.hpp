#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace picd {

struct Pmf {
    std::map<long, double> prob;  // support point -> mass

    double at(long q) const;
    double total() const;
    double mean() const;
    long min() const;
    long max() const;
};

struct BranchId {
    char regime = 'z';  // 'a','b','c'; 'z' for the degenerate cases
    int piece = 0;      // r-subinterval index within the regime
    bool reflected = false;

    std::string str() const;
};

struct PuResult {
    double value;
    BranchId branch;
};

// P(gamma_{n,2}(U,r,c) = 2); r may be kInf
PuResult p_u(double r, double c, long n);

// limit of p_u(r,c,n) as n -> infinity
double p_asymptotic(double r, double c);

// true when r equals r*(c) up to rounding
bool is_r_star(double r, double c);

enum class Side { Left, Right };

// Limit of p_n(F, r*, c) for c != 1/2: left uses (1-c)^{k+1}, right uses c^{k+1}.
double p_limit_general_f(Side side, int k, double fk_endpoint, double fk_center, double c);

// (r,c) = (2,1/2): product of the left and right factors
double p_limit_cccd(int k, double fk_y1, double fk_mid_right, int l, double fl_y2, double fl_mid_left);

inline constexpr double kCompositionCap = 2.0e6;

// gamma_{n,m}(U,r,c) with X and Y both iid uniform; m = number of Y points
Pmf exact_pmf_uniform(long n, long m, double r, double c, double cap = kCompositionCap);

// counts: n_0..n_m for the m+1 intervals (first and last are the end intervals)
Pmf exact_pmf_conditional(const std::vector<long>& counts, double r, double c);

double expected_gamma_uniform(long n, long m, double r, double c, double cap = kCompositionCap);

// Limiting law over m_bounded intervals; per_interval_p empty means p_asymptotic for all.
Pmf asymptotic_pmf_multi(long m_bounded, double r, double c,
                         const std::vector<double>& per_interval_p, long baseline);

// number of compositions of n into m+1 nonnegative parts, C(n+m, m), as a double
double composition_count(long n, long m);

}  // namespace picd
