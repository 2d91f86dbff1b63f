#include "picd/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "picd/proximity.hpp"

namespace picd {

std::size_t Digraph::arc_count() const
{
    std::size_t a = 0;
    for (const auto& o : out) a += o.size();
    return a;
}

bool Digraph::has_arc(std::size_t i, std::size_t j) const
{
    return std::binary_search(out[i].begin(), out[i].end(), j);
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::arcs() const
{
    std::vector<std::pair<std::size_t, std::size_t>> a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : out[i]) a.emplace_back(i, j);
    return a;
}

namespace {

template <class RegionFn>
Digraph build(const TwoClassSample& s, RegionFn region)
{
    const Intervalization iz = intervalize(s);
    Digraph d;
    d.n = s.n();
    d.out.assign(d.n, {});
    const auto& x = s.x();
    for (std::size_t i = 0; i < iz.size(); ++i) {
        const auto& mem = iz.members[i];
        if (mem.empty()) continue;
        d.components.push_back(mem);
        for (std::size_t a : mem) {
            const auto reg = region(x[a], iz.intervals[i]);
            if (!reg) continue;
            for (std::size_t b : mem)
                if (b != a && reg->contains(x[b])) d.out[a].push_back(b);
        }
    }
    return d;
}

}  // namespace

Digraph build_picd(const TwoClassSample& s, const PicdParams& p)
{
    Digraph d = build(s, [&](double x, const Interval& iv) -> std::optional<Region> {
        return picd_region(x, iv, p);
    });
    d.family = Family::Picd;
    d.param = p.r;
    d.c = p.c;
    return d;
}

Digraph build_cicd(const TwoClassSample& s, const CicdParams& p)
{
    Digraph d = build(s, [&](double x, const Interval& iv) -> std::optional<Region> {
        if (!iv.bounded()) return std::nullopt;
        return cicd_region(x, iv, p);
    });
    d.family = Family::Cicd;
    d.param = p.tau;
    d.c = p.c;
    return d;
}

double arc_density(const Digraph& d)
{
    if (d.n <= 1) return 0.0;
    const double nn = static_cast<double>(d.n);
    return static_cast<double>(d.arc_count()) / (nn * (nn - 1.0));
}

std::string edge_list(const Digraph& d)
{
    std::ostringstream os;
    for (const auto& [i, j] : d.arcs()) os << i << ' ' << j << '\n';
    return os.str();
}

bool dominates(const Digraph& d, const std::vector<std::size_t>& set)
{
    std::vector<char> hit(d.n, 0);
    for (std::size_t u : set) {
        hit[u] = 1;
        for (std::size_t v : d.out[u]) hit[v] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

BruteForceResult brute_force_domination(const Digraph& d, std::size_t cap)
{
    if (d.n > cap || d.n > 31)
        throw std::invalid_argument("brute-force domination refused: n exceeds cap");
    const std::size_t n = d.n;
    if (n == 0) return {0, {}};

    std::vector<std::uint32_t> closed(n);
    for (std::size_t u = 0; u < n; ++u) {
        closed[u] = std::uint32_t{1} << u;
        for (std::size_t v : d.out[u]) closed[u] |= std::uint32_t{1} << v;
    }
    const std::uint32_t all = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);

    // subsets of size k in lexicographic order of index tuples
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t t = 0; t < k; ++t) idx[t] = t;
        while (true) {
            std::uint32_t cov = 0;
            for (std::size_t t : idx) cov |= closed[t];
            if (cov == all) return {k, idx};
            std::size_t t = k;
            while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
            if (t == 0) break;
            ++idx[t - 1];
            for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return {n, {}};  // unreachable
}

}  // namespace picd
