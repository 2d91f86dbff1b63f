#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "picd/core.hpp"

namespace picd {

enum class Family { Picd, Cicd };

struct Digraph {
    std::size_t n = 0;
    Family family = Family::Picd;
    double param = 0.0;   // r for PICD, tau for CICD
    double c = 0.0;
    std::vector<std::vector<std::size_t>> out;         // sorted out-neighbours
    std::vector<std::vector<std::size_t>> components;  // vertex groups per nonempty interval

    std::size_t arc_count() const;
    bool has_arc(std::size_t i, std::size_t j) const;
    std::vector<std::pair<std::size_t, std::size_t>> arcs() const;
};

Digraph build_picd(const TwoClassSample& s, const PicdParams& p);
Digraph build_cicd(const TwoClassSample& s, const CicdParams& p);

double arc_density(const Digraph& d);

// "i j" per line, 0-based
std::string edge_list(const Digraph& d);

struct BruteForceResult {
    std::size_t gamma;
    std::vector<std::size_t> witness;
};

inline constexpr std::size_t kBruteForceCap = 16;

// Exhaustive minimum dominating set; witness is the lexicographically smallest.
BruteForceResult brute_force_domination(const Digraph& d, std::size_t cap = kBruteForceCap);

// true if every vertex is in the set or has an in-arc from it
bool dominates(const Digraph& d, const std::vector<std::size_t>& set);

}  // namespace picd
