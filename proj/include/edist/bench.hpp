// bench.hpp -- the timing harness: runs selected algorithms over a family
// sweep, one warm-up plus one measured run per cell, sequentially.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edist/distance.hpp"
#include "edist/nfa.hpp"

namespace edist {

struct BenchRecord {
    std::string family;  // "a", "b", or "file"
    unsigned n = 0;
    unsigned nfa_states = 0;
    std::string algorithm;  // detect | correct | first | next | best
    std::optional<DistanceResult> result;  // absent on timeout
    double wall_time_s = 0.0;
    bool timed_out = false;
};

struct BenchConfig {
    char family = 'a';  // 'a' or 'b'
    std::vector<unsigned> ns;
    std::vector<std::string> algorithms;
    double timeout_s = 0.0;  // <= 0: unlimited
    bool prune_diagonals = false;
};

/// Runs an algorithm by its CLI name with a fresh deadline.
DistanceResult run_algorithm(const std::string& name, const Nfa& a,
                             const DistanceOptions& options);

std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Header: family,n,states,algorithm,result,wall_time_s,timed_out.
/// Pair results are written as "lo hi"; absent results as an empty field.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace edist
