#include "edist/distance.hpp"

#include <optional>
#include <stdexcept>

#include "edist/edit.hpp"
#include "edist/errors.hpp"
#include "edist/product.hpp"
#include "edist/transducer.hpp"

namespace edist {

DistanceResult::DistanceResult(unsigned lo, unsigned hi) : lo_(lo), hi_(hi) {
    if (lo_ < 1 || (hi_ != lo_ && hi_ != lo_ + 1))
        throw std::invalid_argument("distance result must be d or {d, d+1} with d >= 1");
}

unsigned DistanceResult::value() const {
    if (!is_exact()) throw std::logic_error("distance result is a pair, not an exact value");
    return lo_;
}

std::string DistanceResult::to_string() const {
    if (is_exact()) return std::to_string(lo_);
    return std::to_string(lo_) + " " + std::to_string(hi_);
}

namespace {

/// Trimmed, epsilon-free automaton with the language unchanged; rejects
/// languages with fewer than two words.
Nfa prepare(const Nfa& a) {
    Nfa t = trim(a);
    if (!t.epsilon_free()) t = trim(remove_epsilon(t));
    if (!detail::accepts_at_least_two_words_trimmed(t)) throw TwoWordsRequiredError();
    return t;
}

unsigned upper_bound_of(const Nfa& prepared) {
    auto [u, v] = shortest_two_words(prepared);
    return edit_distance_words(u, v);
}

}  // namespace

unsigned distance_upper_bound(const Nfa& a) { return upper_bound_of(prepare(a)); }

unsigned dist_err_detect(const Nfa& a, const DistanceOptions& options) {
    Nfa aut = prepare(a);
    int lo = 1, hi = static_cast<int>(upper_bound_of(aut)) - 1;
    // Invariant: the language is error-detecting for up to lo-1 errors.
    while (lo <= hi) {
        options.deadline.check();
        unsigned k = static_cast<unsigned>((lo + hi) / 2);
        Transducer channel = channel_transducer(k, aut.alphabet());
        Transducer product = detect_product(channel, aut, options.deadline);
        if (is_functional(product, options.deadline))
            lo = static_cast<int>(k) + 1;
        else
            hi = static_cast<int>(k) - 1;
    }
    return static_cast<unsigned>(lo);
}

DistanceResult dist_err_correct(const Nfa& a, const DistanceOptions& options) {
    Nfa aut = prepare(a);
    int lo = 1, hi = (static_cast<int>(upper_bound_of(aut)) - 1) / 2;
    // Invariant: the language is error-correcting for up to lo-1 errors.
    while (lo <= hi) {
        options.deadline.check();
        unsigned k = static_cast<unsigned>((lo + hi) / 2);
        Transducer channel = channel_transducer(k, aut.alphabet());
        Transducer product = correct_product(channel, aut, options.deadline);
        if (is_functional(product, options.deadline))
            lo = static_cast<int>(k) + 1;
        else
            hi = static_cast<int>(k) - 1;
    }
    unsigned m = static_cast<unsigned>(lo);
    return DistanceResult::between(2 * m - 1, 2 * m);
}

unsigned dist_first_inp_alter(const Nfa& a, const DistanceOptions& options) {
    Nfa aut = prepare(a);
    int lo = 1, hi = static_cast<int>(upper_bound_of(aut)) - 1;
    while (lo <= hi) {
        options.deadline.check();
        unsigned k = static_cast<unsigned>((lo + hi) / 2);
        Transducer alterer =
            input_altering_transducer(k, aut.alphabet(), {options.prune_diagonals});
        ProductNfa product = ProductNfa::intersect_range(alterer, aut, options.deadline);
        if (!product.has_accepting_path())
            lo = static_cast<int>(k) + 1;  // no pair within k errors
        else
            hi = static_cast<int>(k) - 1;
    }
    return static_cast<unsigned>(lo);
}

unsigned dist_next_inp_alter(const Nfa& a, const DistanceOptions& options) {
    Nfa aut = prepare(a);
    unsigned bound = upper_bound_of(aut);
    if (bound == 1) return 1;  // two words at distance 1

    Transducer alterer =
        input_altering_transducer(bound - 1, aut.alphabet(), {options.prune_diagonals});
    ProductNfa product = ProductNfa::intersect_range(alterer, aut, options.deadline);
    // No reachable final triple means no pair within bound-1 errors, and the
    // distance never exceeds the bound.
    return product.min_final_counter().value_or(bound);
}

unsigned dist_best_inp_alter(const Nfa& a, const DistanceOptions& options) {
    Nfa aut = prepare(a);
    ProductNfa product = ProductNfa::incremental(aut, options.prune_diagonals, options.deadline);
    unsigned k = 1;
    std::optional<unsigned> bound;  // fetched lazily, only as a safety net
    while (!product.has_accepting_path()) {
        options.deadline.check();
        if (!bound && k > aut.num_states()) bound = upper_bound_of(aut);
        if (bound && k > *bound)
            throw std::logic_error("no accepting path within the distance upper bound");
        product.extend(options.deadline);
        ++k;
    }
    return k;
}

}  // namespace edist
