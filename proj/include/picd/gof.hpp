#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "picd/digraph.hpp"
#include "picd/sampling.hpp"

namespace picd {

enum class Alt { TwoSided, Left, Right };

Alt parse_alt(const std::string& s);
std::string to_string(Alt a);

struct TestReport {
    std::string method;
    double stat = 0.0;
    std::optional<double> p_value;
    std::optional<double> critical;
    bool reject = false;
    Alt alt = Alt::TwoSided;
    double alpha = 0.05;
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;
    std::size_t reps = 0;
    nlohmann::json params = nlohmann::json::object();

    nlohmann::json to_json() const;
    std::string table() const;
};

std::size_t default_k(std::size_t n);

// Approach (i) (p from p_u at floor(n/k)) or (iii) (p from the limit, r must be r*)
TestReport dom_test_binomial(const std::vector<double>& data, std::size_t k, double r, double c,
                             Alt alt, double alpha, bool use_asymptotic_p = false);

// Empirical null of a statistic, kept sorted.
struct NullCalibration {
    std::vector<double> values;
    std::uint64_t seed = 0;

    std::size_t reps() const { return values.size(); }
    double frac_below(double v) const;  // P(S < v)
    double frac_equal(double v) const;  // P(S = v)
    double left_critical(double alpha) const;
    double right_critical(double alpha) const;
};

// stat receives sorted uniform data of size n from replicate stream i
NullCalibration calibrate_null(std::size_t n, std::size_t reps, std::uint64_t seed,
                               const std::function<double(const std::vector<double>&)>& stat,
                               unsigned threads = 0);

struct McDecision {
    double reject_prob;  // 1, 0, or the randomisation weight at the critical atom
    std::optional<double> left_cv, right_cv;
};

// Percentile critical values with a randomised rule at the critical atom
// (conservative=true drops the atom instead).
McDecision mc_decision(const NullCalibration& cal, double stat, Alt alt, double alpha, bool conservative);

struct McCalib {
    std::size_t reps = 2000;
    std::uint64_t seed = 1;
    bool conservative = false;
    unsigned threads = 0;
};

NullCalibration calibrate_dom(std::size_t n, std::size_t k, double r, double c, std::size_t reps,
                              std::uint64_t seed, unsigned threads = 0);

// Approach (ii). tie_u in (0,1) drives the randomised rule; default is drawn from the seed.
TestReport dom_test_mc(const std::vector<double>& data, std::size_t k, double r, double c, Alt alt,
                       double alpha, const McCalib& calib);
TestReport dom_test_mc(const std::vector<double>& data, std::size_t k, double r, double c, Alt alt,
                       double alpha, const NullCalibration& cal, bool conservative, double tie_u);

TestReport ks_test(const std::vector<double>& data, Alt alt = Alt::TwoSided, double alpha = 0.05);
double kolmogorov_q(double lambda);  // P(K > lambda)

TestReport chisq_test(const std::vector<double>& data, std::size_t k_bins, double alpha = 0.05);

struct ArcParams {
    Family family = Family::Picd;
    double r_or_tau = 2.0;
    double c = 0.5;
};

double arc_statistic(const std::vector<double>& sorted_u, std::size_t k, const ArcParams& ap);

NullCalibration calibrate_arc(std::size_t n, std::size_t k, const ArcParams& ap, std::size_t reps,
                              std::uint64_t seed, unsigned threads = 0);

TestReport arc_density_test(const std::vector<double>& data, std::size_t k, const ArcParams& ap, Alt alt,
                            double alpha, const McCalib& calib);
TestReport arc_density_test(const std::vector<double>& data, std::size_t k, const ArcParams& ap, Alt alt,
                            double alpha, const NullCalibration& cal, bool conservative, double tie_u);

enum class Method { DomBin, DomMc, DomAsy, Ks, ChiSq, ArcPicd, ArcCicd };

Method parse_method(const std::string& s);
std::string to_string(Method m);

struct TestConfig {
    Method method = Method::DomBin;
    std::size_t k = 0;  // 0: round(sqrt(n))
    double r = 2.0;
    double c = 0.5;
    double tau = 1.0;
    Alt alt = Alt::Left;
    double alpha = 0.05;
    McCalib calib;
};

TestReport run_test(const std::vector<double>& data, const TestConfig& cfg);

struct Cdf {
    std::string name;
    std::function<double(double)> f;
};

// "pow:p" (x^p on (0,1)), "tnorm:mu,sigma" (normal truncated to (0,1)),
// "table:FILE" (piecewise-linear through "x F" pairs)
Cdf parse_cdf(const std::string& spec);

TestReport gof_via_transform(const std::vector<double>& data, const Cdf& cdf, const TestConfig& cfg);

}  // namespace picd
