#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace picd {

// Counter-based stream: output i is a hash of (key(seed, stream), i), so a
// replicate's draws never depend on which worker produced them.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    // uniform on the open interval (0,1)
    double uniform();
    double normal(double mu, double sigma);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_, stream_, key_, counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

std::vector<double> sample_uniform(std::size_t n, RngStream& rng);
std::vector<double> sample_f1(std::size_t n, double delta, RngStream& rng);
std::vector<double> sample_f2(std::size_t n, double sigma, RngStream& rng);
std::vector<double> sample_f3(std::size_t n, double delta, RngStream& rng);
// half_width is the absolute half-width around each j/k; requires half_width < 1/(2k)
std::vector<double> sample_f4(std::size_t n, double half_width, std::size_t k, RngStream& rng);
std::vector<double> sample_f5(std::size_t n, double half_width, std::size_t k, RngStream& rng);

double cdf_f1(double x, double delta);
double cdf_f3(double x, double delta);
double inv_cdf_f1(double u, double delta);
double inv_cdf_f3(double u, double delta);

enum class Dist { Uniform, F1, F2, F3, F4, F5 };

// Parsed from strings such as "uniform", "f1:delta=0.4", "f2:sigma=0.1",
// "f3:delta=4", "f4:eps=0.2,k=7", "f5:hw=0.01,k=32".
// For f4/f5, eps is the table parametrisation in units of subinterval length
// (half-width eps/k, eps in (0,1/2)); hw is an absolute half-width.
// k=0 means "use the test's subinterval count".
struct AlternativeSpec {
    Dist dist = Dist::Uniform;
    double param = 0.0;
    bool absolute = false;
    std::size_t k = 0;

    static AlternativeSpec parse(const std::string& s);
    std::string str() const;
    double half_width(std::size_t k_eff) const;
    std::vector<double> draw(std::size_t n, std::size_t k_test, RngStream& rng) const;
};

}  // namespace picd
