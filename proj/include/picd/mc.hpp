#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "picd/gof.hpp"
#include "picd/sampling.hpp"

namespace picd {

struct GridPoint {
    double r;  // r for PICD methods, tau for arc-cicd
    double c;
};

struct ExperimentPlan {
    std::vector<Method> methods{Method::DomBin};
    std::vector<GridPoint> grid;
    std::size_t n = 50;
    std::size_t k = 0;  // 0: round(sqrt(n))
    Alt alt = Alt::Left;
    std::vector<AlternativeSpec> dists;
    std::size_t reps = 2000;
    double alpha = 0.05;
    std::uint64_t seed = 1;
    std::size_t calib_reps = 2000;
    bool conservative = false;
    unsigned threads = 0;
    std::string out;

    std::size_t k_eff() const { return k ? k : default_k(n); }
    void validate() const;

    // keys: methods, grid, r, c, n, k, alt, dist, reps, alpha, seed, calib_reps,
    // conservative, threads, out
    static ExperimentPlan from_kv(const std::map<std::string, std::string>& kv);
    static ExperimentPlan from_file(const std::string& path);
};

// "r=1.0:0.1:2.1,c=0.05:0.05:0.95"; values are a:step:b ranges, ';' lists,
// single numbers, or r=star for r*(c)
std::vector<GridPoint> parse_grid(const std::string& spec);

struct ResultRow {
    std::string method;
    double r = 0.0, c = 0.0;
    std::size_t n = 0, k = 0;
    std::string alt;
    std::string param;
    double estimate = 0.0, se = 0.0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::string flag;  // size studies: liberal / conservative / empty
};

struct ResultTable {
    std::vector<ResultRow> rows;
    bool size_study = false;

    std::string csv() const;
    const ResultRow* find(const std::string& method, const std::string& param) const;
};

inline const char* kCsvHeader = "method,r,c,n,k,alt,param,estimate,se,reps,seed";

ResultTable run_power_study(const ExperimentPlan& plan);
ResultTable run_size_study(const ExperimentPlan& plan);

// liberal/conservative band: alpha +- 1.645 binomial SE (.0464/.0536 at 10^4 reps)
std::string size_flag(double estimate, double alpha, std::size_t reps);

struct Estimate {
    double estimate;
    double se;
};

// fraction of replicates with gamma_{n,2}(F,r,c) = 2, Y = {0,1}
Estimate estimate_p2(std::size_t n, const AlternativeSpec& sampler, double r, double c, std::size_t reps,
                     std::uint64_t seed, unsigned threads = 0);

struct CriticalValues {
    double left_cv, right_cv;
    double left_below, left_atom;   // P(G < left_cv), P(G = left_cv)
    double right_above, right_atom; // P(G > right_cv), P(G = right_cv)
    std::map<long, double> pmf;     // empirical law of G = gamma - k
};

CriticalValues estimate_critical_values(std::size_t n, std::size_t k, double r, double c, std::size_t reps,
                                        std::uint64_t seed, double alpha = 0.05, unsigned threads = 0);

}  // namespace picd
