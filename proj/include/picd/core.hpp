#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace picd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class IntervalKind { LeftEnd, Middle, RightEnd };

struct Interval {
    double lo;
    double hi;
    IntervalKind kind;

    bool bounded() const { return kind == IntervalKind::Middle; }
    // M_{c,i}; only meaningful for bounded intervals
    double center(double c) const { return lo + c * (hi - lo); }
};

// Two-class data. x is stored sorted; all vertex indices refer to that order.
class TwoClassSample {
public:
    TwoClassSample(std::vector<double> x, std::vector<double> y);

    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }
    std::size_t n() const { return x_.size(); }
    std::size_t m() const { return y_.size(); }

private:
    std::vector<double> x_;
    std::vector<double> y_;
};

struct Intervalization {
    std::vector<Interval> intervals;                 // m+1 entries, I_0 .. I_m
    std::vector<std::vector<std::size_t>> members;   // sorted x indices per interval
    std::vector<std::size_t> counts;

    std::size_t size() const { return intervals.size(); }
    std::size_t bounded_count() const { return intervals.size() - 2; }
};

Intervalization intervalize(const TwoClassSample& s);

// index of the interval holding x; x must not equal a y point
std::size_t locate(const std::vector<double>& y, double x);

struct PicdParams {
    double r;
    double c;

    PicdParams(double r_, double c_);
    bool r_infinite() const { return r == kInf; }
};

struct CicdParams {
    double tau;
    double c;

    CicdParams(double tau_, double c_);
};

// r* = 1/max(c,1-c)
double r_star(double c);

// k+1 equispaced endpoints 0, 1/k, ..., 1
std::vector<double> unit_grid(std::size_t k);

// newline / comma / whitespace separated decimal floats
std::vector<double> parse_floats(const std::string& text);
std::vector<double> read_floats_file(const std::string& path);

}  // namespace picd
