#include "edist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "edist/bench.hpp"
#include "edist/errors.hpp"
#include "edist/families.hpp"
#include "edist/grail.hpp"
#include "edist/oracle.hpp"

namespace edist {

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitTooFewWords = 3;
constexpr int kExitTimeout = 4;

const std::set<std::string> kAlgorithms{"detect", "correct", "first", "next", "best"};

Nfa load_nfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_nfa(buf.str());
}

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

std::vector<unsigned> parse_n_list(const std::string& list) {
    std::vector<unsigned> ns;
    for (const std::string& item : split_list(list)) {
        std::size_t used = 0;
        unsigned long v = std::stoul(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number in n-list: " + item);
        ns.push_back(static_cast<unsigned>(v));
    }
    if (ns.empty()) throw std::invalid_argument("empty n-list");
    return ns;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"inner edit distance of regular languages"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute the distance of an automaton file");
    std::string algo, file;
    bool prune = false;
    double timeout = 0.0;
    compute->add_option("--algo", algo, "detect|correct|first|next|best")->required();
    compute->add_flag("--prune-diagonals", prune, "thin the input-altering transducer");
    compute->add_option("--timeout", timeout, "seconds before giving up");
    compute->add_option("file", file, "automaton in Grail-style text format")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force distance over enumerated words");
    unsigned max_len = 0;
    std::string oracle_file;
    oracle->add_option("--max-len", max_len, "enumeration length bound")->required();
    oracle->add_option("file", oracle_file, "automaton file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "print a benchmark family automaton");
    std::string family;
    unsigned gen_n = 0;
    gen->add_option("--family", family, "a|b")->required();
    gen->add_option("--n", gen_n, "family index")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time algorithms over a family sweep");
    std::string bench_family, n_list, algos, csv_path;
    double bench_timeout = 0.0;
    bool bench_prune = false;
    bench->add_option("--family", bench_family, "a|b")->required();
    bench->add_option("--n-list", n_list, "comma-separated family indices")->required();
    bench->add_option("--algos", algos, "comma-separated algorithm names")->required();
    bench->add_option("--timeout", bench_timeout, "per-run timeout in seconds");
    bench->add_flag("--prune-diagonals", bench_prune, "thin the input-altering transducer");
    bench->add_option("--csv", csv_path, "output CSV path")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*compute) {
            if (!kAlgorithms.count(algo)) {
                err << "unknown algorithm: " << algo << "\n";
                return kExitUsage;
            }
            Nfa aut = load_nfa(file);
            DistanceOptions options;
            options.prune_diagonals = prune;
            if (timeout > 0) options.deadline = Deadline::after_seconds(timeout);
            out << run_algorithm(algo, aut, options).to_string() << "\n";
        } else if (*oracle) {
            Nfa aut = load_nfa(oracle_file);
            out << brute_inner_distance(aut, max_len) << "\n";
        } else if (*gen) {
            if (family == "a")
                out << serialize_nfa(gen_family_a(gen_n));
            else if (family == "b")
                out << serialize_nfa(gen_family_b(gen_n));
            else {
                err << "unknown family: " << family << "\n";
                return kExitUsage;
            }
        } else if (*bench) {
            if (bench_family != "a" && bench_family != "b") {
                err << "unknown family: " << bench_family << "\n";
                return kExitUsage;
            }
            BenchConfig config;
            config.family = bench_family[0];
            config.ns = parse_n_list(n_list);
            config.algorithms = split_list(algos);
            for (const std::string& a : config.algorithms)
                if (!kAlgorithms.count(a)) {
                    err << "unknown algorithm: " << a << "\n";
                    return kExitUsage;
                }
            config.timeout_s = bench_timeout;
            config.prune_diagonals = bench_prune;
            std::ofstream csv(csv_path);
            if (!csv) {
                err << "cannot write file: " << csv_path << "\n";
                return kExitUsage;
            }
            csv << bench_csv(run_bench(config));
        }
    } catch (const TwoWordsRequiredError& e) {
        err << e.what() << "\n";
        return kExitTooFewWords;
    } catch (const TimeoutError& e) {
        err << e.what() << "\n";
        return kExitTimeout;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}

}  // namespace edist
