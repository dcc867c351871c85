// oracle.hpp -- brute-force ground truth, independent of the production
// algorithms: bounded language enumeration, exact inner distance of finite
// languages, transducer output sets by path search, and functionality by
// exhausting inputs. Exponential on purpose; desk scale only.

#pragma once

#include <vector>

#include "edist/core.hpp"
#include "edist/nfa.hpp"
#include "edist/transducer.hpp"

namespace edist {

/// Language slice in length-lexicographic order, complete up to the bound.
struct WordSet {
    std::vector<Word> words;
    unsigned truncation_bound = 0;

    bool contains(const Word& w) const;
    std::size_t size() const noexcept { return words.size(); }
};

/// All accepted words of length <= max_len, by breadth-first expansion of
/// epsilon-closed state sets.
WordSet enumerate_language(const Nfa& a, unsigned max_len);

/// Minimum pairwise edit distance over the enumerated words. Exact whenever
/// the language is finite and max_len covers its longest word; an upper
/// bound otherwise. Requires two enumerated words.
unsigned brute_inner_distance(const Nfa& a, unsigned max_len);

/// All outputs of t on input x with length <= max_out_len, by exhaustive
/// search over (state, input position, emitted output) configurations;
/// deduplicating configurations keeps empty-input cycles finite while losing
/// no output within the bound.
WordSet brute_outputs(const Transducer& t, const Word& x, unsigned max_out_len);

/// Checks |t(x)| <= 1 for every input up to max_in_len, with outputs explored
/// up to max_in_len + |states|. A false answer is definitive; a true answer
/// means no counterexample within the bound.
bool brute_is_functional(const Transducer& t, unsigned max_in_len);

}  // namespace edist
