// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line. Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edist/bench.hpp"
#include "edist/distance.hpp"
#include "edist/edit.hpp"
#include "edist/families.hpp"
#include "edist/oracle.hpp"
#include "edist/product.hpp"
#include "edist/transducer.hpp"
#include "helpers.hpp"

using namespace edist;
using namespace edist::testing;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %d. %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(clock_type::time_point begin) {
    return std::chrono::duration<double>(clock_type::now() - begin).count();
}

/// Minimum wall time of three runs; the first run doubles as warm-up.
double time_algorithm(const std::string& name, const Nfa& a) {
    double best_time = 1e100;
    for (int i = 0; i < 3; ++i) {
        auto begin = clock_type::now();
        run_algorithm(name, a, {});
        best_time = std::min(best_time, seconds_since(begin));
    }
    return best_time;
}

std::optional<Word> brute_witness(const Transducer& t, unsigned max_in_len) {
    const unsigned out_bound = max_in_len + t.num_states();
    for (const Word& x : all_words(static_cast<unsigned>(t.input_alphabet().size()), max_in_len))
        if (brute_outputs(t, x, out_bound).size() > 1) return x;
    return std::nullopt;
}

bool family_a_ground_truth(bool prune, std::string& detail) {
    DistanceOptions options;
    options.prune_diagonals = prune;
    bool ok = true;
    auto best_begin = clock_type::now();
    for (unsigned n = 2; n <= 12; ++n)
        if (dist_best_inp_alter(gen_family_a(n), options) != n) ok = false;
    double best_sweep = seconds_since(best_begin);
    for (unsigned n = 2; n <= 12; ++n) {
        Nfa a = gen_family_a(n);
        if (dist_err_detect(a, options) != n) ok = false;
        if (dist_first_inp_alter(a, options) != n) ok = false;
        if (dist_next_inp_alter(a, options) != n) ok = false;
        if (!dist_err_correct(a, options).contains(n)) ok = false;
    }
    if (best_sweep >= 5.0) ok = false;
    std::ostringstream d;
    d << "best sweep " << best_sweep << "s";
    detail = d.str();
    return ok;
}

bool family_b_ground_truth(bool prune) {
    DistanceOptions options;
    options.prune_diagonals = prune;
    bool ok = true;
    for (unsigned n = 3; n <= 8; ++n) {
        Nfa b = gen_family_b(n);
        if (dist_err_detect(b, options) != 2) ok = false;
        if (dist_first_inp_alter(b, options) != 2) ok = false;
        if (dist_next_inp_alter(b, options) != 2) ok = false;
        if (dist_best_inp_alter(b, options) != 2) ok = false;
        if (!dist_err_correct(b, options).contains(2)) ok = false;
    }
    return ok;
}

bool oracle_equivalence(bool prune, std::string& detail) {
    DistanceOptions options;
    options.prune_diagonals = prune;
    auto begin = clock_type::now();
    std::size_t mismatches = 0;
    std::vector<Nfa> corpus = random_acyclic_corpus(200, 0xED157);
    for (const Nfa& a : corpus) {
        unsigned expected = brute_inner_distance(a, 8);
        if (dist_err_detect(a, options) != expected) ++mismatches;
        if (dist_first_inp_alter(a, options) != expected) ++mismatches;
        if (dist_next_inp_alter(a, options) != expected) ++mismatches;
        if (dist_best_inp_alter(a, options) != expected) ++mismatches;
        if (!dist_err_correct(a, options).contains(expected)) ++mismatches;
    }
    double elapsed = seconds_since(begin);
    std::ostringstream d;
    d << corpus.size() << " automata, " << mismatches << " mismatches, " << elapsed << "s";
    detail = d.str();
    return mismatches == 0 && elapsed < 120.0;
}

bool transducer_semantics(std::string& detail) {
    const Alphabet sigma = Alphabet::from_chars("ab");
    auto begin = clock_type::now();
    std::size_t violations = 0;
    std::vector<Word> words = all_words(2, 5);
    for (unsigned k = 1; k <= 3; ++k) {
        Transducer alterer = input_altering_transducer(k, sigma);
        Transducer channel = channel_transducer(k, sigma);
        std::map<Word, WordSet> alter_outs, channel_outs;
        for (const Word& u : words) {
            alter_outs[u] = brute_outputs(alterer, u, 5);
            channel_outs[u] = brute_outputs(channel, u, 5);
        }
        for (const Word& u : words) {
            if (alter_outs[u].contains(u)) ++violations;  // input-altering
            for (const Word& v : words) {
                unsigned d = edit_distance_words(u, v);
                bool altered = alter_outs[u].contains(v);
                if (altered && !(1 <= d && d <= k)) ++violations;           // soundness
                if (1 <= d && d <= k && !(altered || alter_outs[v].contains(u)))
                    ++violations;                                           // coverage
                if (channel_outs[u].contains(v) != (d <= k)) ++violations;  // channel semantics
            }
        }
    }
    double elapsed = seconds_since(begin);
    std::ostringstream d;
    d << violations << " violations, " << elapsed << "s";
    detail = d.str();
    return violations == 0 && elapsed < 60.0;
}

bool characterizations(std::string& detail) {
    std::size_t violations = 0;
    std::vector<std::pair<Nfa, unsigned>> instances;
    for (unsigned n = 2; n <= 6; ++n) instances.emplace_back(gen_family_a(n), n);
    for (unsigned n = 3; n <= 4; ++n) instances.emplace_back(gen_family_b(n), 2);
    for (const auto& [a, d] : instances) {
        for (unsigned k = 1; k <= std::min(d + 1, 4u); ++k) {
            Transducer ch = channel_transducer(k, a.alphabet());
            if (is_functional(detect_product(ch, a)) != (k < d)) ++violations;
            if (is_functional(correct_product(ch, a)) != (2 * k < d)) ++violations;
        }
    }
    std::ostringstream out;
    out << violations << " violations";
    detail = out.str();
    return violations == 0;
}

bool performance_ordering(std::string& detail) {
    std::map<unsigned, std::map<std::string, double>> times;
    for (unsigned n : {13u, 21u}) {
        Nfa a = gen_family_a(n);
        for (const std::string algo : {"best", "first", "correct"})
            times[n][algo] = time_algorithm(algo, a);
    }
    bool ok = true;
    for (unsigned n : {13u, 21u}) {
        if (!(times[n]["best"] < times[n]["first"])) ok = false;
        if (!(times[n]["first"] < times[n]["correct"])) ok = false;
    }
    double ratio = times[21]["first"] / times[21]["best"];
    if (!(ratio >= 10.0)) ok = false;
    std::ostringstream d;
    d.precision(3);
    d << "n=13 best/first/correct " << times[13]["best"] << "/" << times[13]["first"] << "/"
      << times[13]["correct"] << "s; n=21 " << times[21]["best"] << "/" << times[21]["first"]
      << "/" << times[21]["correct"] << "s; first/best ratio at 21: " << ratio << "x";
    detail = d.str();
    return ok;
}

bool functionality_soundness(std::string& detail) {
    const Alphabet sigma = Alphabet::from_chars("ab");
    std::vector<Transducer> suite;
    std::vector<TransducerTransition> id_trans{{0, Label(0), Label(0), 0},
                                               {0, Label(1), Label(1), 0}};
    suite.emplace_back(sigma, sigma, 1, 0, std::vector<StateId>{0}, id_trans);
    for (unsigned k = 1; k <= 3; ++k) {
        suite.push_back(channel_transducer(k, sigma));
        suite.push_back(input_altering_transducer(k, sigma));
        suite.push_back(invert(input_altering_transducer(k, sigma)));
    }
    for (const auto& wordset :
         std::vector<std::vector<std::string>>{{"ab"}, {"a", "b"}, {"aa", "ab"}, {"ab", "ba"}}) {
        Nfa lang = nfa_for_words(sigma, wordset);
        suite.push_back(detect_product(channel_transducer(1, sigma), lang));
        suite.push_back(correct_product(channel_transducer(1, sigma), lang));
    }
    for (Transducer& t : random_transducers(100, 0xF00D)) suite.push_back(std::move(t));

    std::size_t disagreements = 0, missing_witnesses = 0;
    for (const Transducer& t : suite) {
        bool exact = is_functional(t);
        bool brute = brute_is_functional(t, 6);
        if (exact != brute) ++disagreements;
        if (!exact && !brute_witness(t, 6).has_value()) ++missing_witnesses;
    }
    std::ostringstream d;
    d << suite.size() << " transducers, " << disagreements << " disagreements, "
      << missing_witnesses << " false verdicts without witness";
    detail = d.str();
    return suite.size() >= 100 && disagreements == 0 && missing_witnesses == 0;
}

}  // namespace

int main() {
    std::string detail;

    report(1, "family a: every algorithm yields n (n = 2..12)",
           family_a_ground_truth(false, detail), detail);
    report(2, "family b: every algorithm yields 2 (n = 3..8)", family_b_ground_truth(false));
    report(3, "oracle equivalence on 200 random acyclic automata",
           oracle_equivalence(false, detail), detail);
    report(4, "transducer semantics, exhaustive to length 5", transducer_semantics(detail),
           detail);
    report(5, "detection/correction functionality thresholds", characterizations(detail), detail);
    report(6, "performance ordering best < first < correct", performance_ordering(detail), detail);
    report(7, "functionality test agrees with the brute oracle", functionality_soundness(detail),
           detail);

    {
        std::string d1, d3;
        bool ok = family_a_ground_truth(true, d1) && family_b_ground_truth(true) &&
                  oracle_equivalence(true, d3);
        report(8, "pruned diagonals reproduce criteria 1-3", ok);
    }

    if (failures == 0) std::printf("all criteria passed\n");
    return failures;
}
