#include "picd/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace picd {

TwoClassSample::TwoClassSample(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    for (double v : x_)
        if (!std::isfinite(v)) throw std::invalid_argument("x points must be finite");
    for (double v : y_)
        if (!std::isfinite(v)) throw std::invalid_argument("y points must be finite");
    if (y_.empty()) throw std::invalid_argument("at least one y point is required");

    std::sort(x_.begin(), x_.end());
    std::sort(y_.begin(), y_.end());
    if (std::adjacent_find(y_.begin(), y_.end()) != y_.end())
        throw std::invalid_argument("y points must be distinct");

    for (double v : x_) {
        if (std::binary_search(y_.begin(), y_.end(), v)) {
            std::ostringstream os;
            os << "x point " << v << " coincides with a y point; jitter the data";
            throw std::invalid_argument(os.str());
        }
    }
}

std::size_t locate(const std::vector<double>& y, double x)
{
    return static_cast<std::size_t>(std::upper_bound(y.begin(), y.end(), x) - y.begin());
}

Intervalization intervalize(const TwoClassSample& s)
{
    const auto& y = s.y();
    const std::size_t m = y.size();
    Intervalization iz;
    iz.intervals.reserve(m + 1);
    iz.intervals.push_back({-kInf, y.front(), IntervalKind::LeftEnd});
    for (std::size_t i = 0; i + 1 < m; ++i)
        iz.intervals.push_back({y[i], y[i + 1], IntervalKind::Middle});
    iz.intervals.push_back({y.back(), kInf, IntervalKind::RightEnd});

    iz.members.assign(m + 1, {});
    for (std::size_t j = 0; j < s.n(); ++j)
        iz.members[locate(y, s.x()[j])].push_back(j);
    iz.counts.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i) iz.counts[i] = iz.members[i].size();
    return iz;
}

PicdParams::PicdParams(double r_, double c_) : r(r_), c(c_)
{
    if (std::isnan(r) || r < 1.0) throw std::invalid_argument("r must be >= 1");
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must be in [0,1]");
}

CicdParams::CicdParams(double tau_, double c_) : tau(tau_), c(c_)
{
    if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be > 0");
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must be in (0,1)");
}

double r_star(double c)
{
    return 1.0 / std::max(c, 1.0 - c);
}

std::vector<double> unit_grid(std::size_t k)
{
    if (k == 0) throw std::invalid_argument("number of subintervals must be >= 1");
    std::vector<double> y(k + 1);
    for (std::size_t j = 0; j <= k; ++j) y[j] = static_cast<double>(j) / static_cast<double>(k);
    return y;
}

std::vector<double> parse_floats(const std::string& text)
{
    std::vector<double> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse number '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("cannot parse number '" + tok + "'");
        out.push_back(v);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            tok.push_back(ch);
    }
    flush();
    return out;
}

std::vector<double> read_floats_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_floats(ss.str());
}

}  // namespace picd
