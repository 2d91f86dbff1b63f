#include "picd/sampling.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace picd {

std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL)))
{
}

RngStream::result_type RngStream::operator()()
{
    const std::uint64_t c = counter_++;
    return mix64(key_ ^ mix64(c * 0xd1342543de82ef95ULL + 1));
}

double RngStream::uniform()
{
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal(double mu, double sigma)
{
    // Box-Muller, one value per call
    const double u1 = uniform(), u2 = uniform();
    return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> sample_uniform(std::size_t n, RngStream& rng)
{
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform();
    return v;
}

double cdf_f1(double x, double delta) { return delta * x * x + (1.0 - delta) * x; }

double inv_cdf_f1(double u, double delta)
{
    const double b = 1.0 - delta;
    return 2.0 * u / (b + std::sqrt(b * b + 4.0 * delta * u));
}

std::vector<double> sample_f1(std::size_t n, double delta, RngStream& rng)
{
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("f1 needs delta in [0,1)");
    std::vector<double> v(n);
    for (auto& x : v) x = inv_cdf_f1(rng.uniform(), delta);
    return v;
}

std::vector<double> sample_f2(std::size_t n, double sigma, RngStream& rng)
{
    if (!(sigma > 0.0)) throw std::invalid_argument("f2 needs sigma > 0");
    std::vector<double> v(n);
    for (auto& x : v) {
        do x = rng.normal(0.5, sigma);
        while (!(x > 0.0 && x < 1.0));
    }
    return v;
}

double cdf_f3(double x, double delta)
{
    return delta * x * x * x / 3.0 - delta * x * x / 2.0 + x + delta * x / 6.0;
}

double inv_cdf_f3(double u, double delta)
{
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (cdf_f3(mid, delta) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> sample_f3(std::size_t n, double delta, RngStream& rng)
{
    if (!(delta >= 0.0 && delta <= 12.0)) throw std::invalid_argument("f3 needs delta in [0,12]");
    std::vector<double> v(n);
    for (auto& x : v) x = inv_cdf_f3(rng.uniform(), delta);
    return v;
}

namespace {

void check_band(double h, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    if (!(h > 0.0 && 2.0 * static_cast<double>(k) * h < 1.0))
        throw std::invalid_argument("half-width must be in (0, 1/(2k))");
}

}  // namespace

std::vector<double> sample_f4(std::size_t n, double h, std::size_t k, RngStream& rng)
{
    check_band(h, k);
    const double kk = static_cast<double>(k), len = 1.0 / kk - 2.0 * h;
    std::vector<double> v(n);
    for (auto& x : v) {
        const double t = rng.uniform() * kk;  // piece index + offset
        double j = std::floor(t);
        if (j >= kk) j = kk - 1.0;
        x = j / kk + h + (t - j) * len;
    }
    return v;
}

std::vector<double> sample_f5(std::size_t n, double h, std::size_t k, RngStream& rng)
{
    check_band(h, k);
    const double kk = static_cast<double>(k);
    std::vector<double> v(n);
    for (auto& x : v) {
        // the support has total length 2kh: (0,h), (j/k-h, j/k+h), (1-h,1)
        const double t = rng.uniform() * 2.0 * kk * h;
        if (t < h) {
            x = t;
        } else {
            const double s = t - h;
            double j = std::floor(s / (2.0 * h)) + 1.0;
            if (j > kk - 1.0) x = 1.0 - h + (s - (kk - 1.0) * 2.0 * h);
            else x = j / kk - h + (s - (j - 1.0) * 2.0 * h);
        }
        if (!(x > 0.0)) x = std::nextafter(0.0, 1.0);
        if (!(x < 1.0)) x = std::nextafter(1.0, 0.0);
    }
    return v;
}

AlternativeSpec AlternativeSpec::parse(const std::string& s)
{
    AlternativeSpec a;
    const auto colon = s.find(':');
    const std::string fam = s.substr(0, colon);
    std::map<std::string, double> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(s.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad alternative parameter '" + item + "'");
            try {
                kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad alternative parameter '" + item + "'");
            }
        }
    }
    auto take = [&](const char* key, bool required) -> std::optional<double> {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (required) throw std::invalid_argument(fam + " needs " + key);
            return std::nullopt;
        }
        double v = it->second;
        kv.erase(it);
        return v;
    };

    if (fam == "uniform" || fam == "u") {
        a.dist = Dist::Uniform;
    } else if (fam == "f1") {
        a.dist = Dist::F1;
        a.param = *take("delta", true);
        if (!(a.param >= 0.0 && a.param < 1.0)) throw std::invalid_argument("f1 needs delta in [0,1)");
    } else if (fam == "f2") {
        a.dist = Dist::F2;
        a.param = *take("sigma", true);
        if (!(a.param > 0.0)) throw std::invalid_argument("f2 needs sigma > 0");
    } else if (fam == "f3") {
        a.dist = Dist::F3;
        a.param = *take("delta", true);
        if (!(a.param >= 0.0 && a.param <= 12.0)) throw std::invalid_argument("f3 needs delta in [0,12]");
    } else if (fam == "f4" || fam == "f5") {
        a.dist = fam == "f4" ? Dist::F4 : Dist::F5;
        auto eps = take("eps", false);
        auto hw = take("hw", false);
        if (eps.has_value() == hw.has_value()) throw std::invalid_argument(fam + " needs exactly one of eps, hw");
        a.absolute = hw.has_value();
        a.param = eps ? *eps : *hw;
        if (auto k = take("k", false)) {
            if (!(*k >= 1.0) || *k != std::floor(*k)) throw std::invalid_argument("k must be a positive integer");
            a.k = static_cast<std::size_t>(*k);
        }
        if (!a.absolute && !(a.param > 0.0 && a.param < 0.5)) throw std::invalid_argument("eps must be in (0,1/2)");
        if (a.absolute && a.k != 0) check_band(a.param, a.k);
    } else {
        throw std::invalid_argument("unknown distribution '" + fam + "'");
    }
    if (!kv.empty()) throw std::invalid_argument("unknown parameter '" + kv.begin()->first + "' for " + fam);
    return a;
}

std::string AlternativeSpec::str() const
{
    std::ostringstream os;
    switch (dist) {
    case Dist::Uniform: return "uniform";
    case Dist::F1: os << "f1:delta=" << param; break;
    case Dist::F2: os << "f2:sigma=" << param; break;
    case Dist::F3: os << "f3:delta=" << param; break;
    case Dist::F4:
    case Dist::F5:
        os << (dist == Dist::F4 ? "f4:" : "f5:") << (absolute ? "hw=" : "eps=") << param;
        if (k) os << ",k=" << k;
        break;
    }
    return os.str();
}

double AlternativeSpec::half_width(std::size_t k_eff) const
{
    return absolute ? param : param / static_cast<double>(k_eff);
}

std::vector<double> AlternativeSpec::draw(std::size_t n, std::size_t k_test, RngStream& rng) const
{
    const std::size_t k_eff = k ? k : k_test;
    switch (dist) {
    case Dist::Uniform: return sample_uniform(n, rng);
    case Dist::F1: return sample_f1(n, param, rng);
    case Dist::F2: return sample_f2(n, param, rng);
    case Dist::F3: return sample_f3(n, param, rng);
    case Dist::F4: return sample_f4(n, half_width(k_eff), k_eff, rng);
    case Dist::F5: return sample_f5(n, half_width(k_eff), k_eff, rng);
    }
    return {};
}

}  // namespace picd
