#include "edist/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "edist/errors.hpp"
#include "edist/families.hpp"

namespace edist {

DistanceResult run_algorithm(const std::string& name, const Nfa& a,
                             const DistanceOptions& options) {
    if (name == "detect") return DistanceResult::exact(dist_err_detect(a, options));
    if (name == "correct") return dist_err_correct(a, options);
    if (name == "first") return DistanceResult::exact(dist_first_inp_alter(a, options));
    if (name == "next") return DistanceResult::exact(dist_next_inp_alter(a, options));
    if (name == "best") return DistanceResult::exact(dist_best_inp_alter(a, options));
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    std::vector<BenchRecord> records;
    for (unsigned n : config.ns) {
        Nfa aut = config.family == 'b' ? gen_family_b(n) : gen_family_a(n);
        for (const std::string& algo : config.algorithms) {
            BenchRecord rec;
            rec.family = std::string(1, config.family);
            rec.n = n;
            rec.nfa_states = aut.num_states();
            rec.algorithm = algo;

            auto run_once = [&]() -> std::optional<DistanceResult> {
                DistanceOptions options;
                options.prune_diagonals = config.prune_diagonals;
                if (config.timeout_s > 0) options.deadline = Deadline::after_seconds(config.timeout_s);
                return run_algorithm(algo, aut, options);
            };

            using clock = std::chrono::steady_clock;
            try {
                run_once();  // warm-up
                auto begin = clock::now();
                rec.result = run_once();
                rec.wall_time_s = std::chrono::duration<double>(clock::now() - begin).count();
            } catch (const TimeoutError&) {
                rec.timed_out = true;
                rec.result.reset();
                rec.wall_time_s = config.timeout_s;
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "family,n,states,algorithm,result,wall_time_s,timed_out\n";
    for (const BenchRecord& r : records) {
        out << r.family << ',' << r.n << ',' << r.nfa_states << ',' << r.algorithm << ',';
        if (r.result) out << r.result->to_string();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", r.wall_time_s);
        out << ',' << buf << ',' << (r.timed_out ? "true" : "false") << "\n";
    }
    return out.str();
}

}  // namespace edist
