// distance.hpp -- the four algorithms computing the inner edit distance of
// the language accepted by an NFA: two via functionality of channel products
// (exact / bracketing pair) and two via emptiness of input-altering products,
// the last growing one product incrementally until it accepts.

#pragma once

#include <string>
#include <utility>

#include "edist/deadline.hpp"
#include "edist/nfa.hpp"

namespace edist {

/// Either an exact distance or the pair {2m-1, 2m} bracketing it.
class DistanceResult {
public:
    static DistanceResult exact(unsigned d) { return DistanceResult(d, d); }
    static DistanceResult between(unsigned lo, unsigned hi) { return DistanceResult(lo, hi); }

    bool is_exact() const noexcept { return lo_ == hi_; }
    unsigned value() const;
    std::pair<unsigned, unsigned> bounds() const noexcept { return {lo_, hi_}; }
    bool contains(unsigned d) const noexcept { return lo_ <= d && d <= hi_; }

    /// "5" for exact values, "5 6" for pairs.
    std::string to_string() const;

    friend bool operator==(const DistanceResult&, const DistanceResult&) = default;

private:
    DistanceResult(unsigned lo, unsigned hi);
    unsigned lo_;
    unsigned hi_;
};

struct DistanceOptions {
    /// Thin out the input-altering construction (see IatOptions); results are
    /// identical, only the machines shrink. Ignored by the channel-based
    /// algorithms.
    bool prune_diagonals = false;
    Deadline deadline;
};

/// Edit distance of the two shortest accepted words: a cheap upper bound on
/// the distance of the language. Requires at least two words.
unsigned distance_upper_bound(const Nfa& a);

/// Binary search for the largest k such that no accepted word maps to a
/// different accepted word under at most k errors, deciding each k through
/// functionality of the detect product. Exact.
unsigned dist_err_detect(const Nfa& a, const DistanceOptions& options = {});

/// As above through the correct product; decides error correction instead,
/// which only brackets the distance: returns {2m-1, 2m} with one member
/// exact.
DistanceResult dist_err_correct(const Nfa& a, const DistanceOptions& options = {});

/// Binary search over k deciding emptiness of the input-altering product.
/// Exact.
unsigned dist_first_inp_alter(const Nfa& a, const DistanceOptions& options = {});

/// Single product at the upper bound; the distance is the smallest error
/// counter among reachable final triples (the bound itself when none is
/// reachable). Exact.
unsigned dist_next_inp_alter(const Nfa& a, const DistanceOptions& options = {});

/// Grows the input-altering product one error level at a time and returns
/// the first level with an accepting path. Needs no upper bound. Exact;
/// O(|a|^2 r^2 d) overall.
unsigned dist_best_inp_alter(const Nfa& a, const DistanceOptions& options = {});

}  // namespace edist
