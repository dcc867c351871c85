// nfa.hpp -- nondeterministic finite automata, possibly with empty-labeled
// transitions, plus the graph operations everything else builds on.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "edist/core.hpp"

namespace edist {

struct NfaTransition {
    StateId from;
    Label label;
    StateId to;

    friend bool operator==(const NfaTransition&, const NfaTransition&) = default;
};

/// An automaton over dense integer states with a single start state.
/// Immutable after construction; transitions are stored sorted by
/// (source, label, target) with duplicates removed, and an index by source
/// state is built once so traversals never hash.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::uint32_t num_states, StateId start,
        std::vector<StateId> finals, std::vector<NfaTransition> transitions);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t num_states() const noexcept { return num_states_; }
    std::size_t num_transitions() const noexcept { return transitions_.size(); }

    /// Number of states plus number of transitions.
    std::size_t size() const noexcept { return num_states_ + transitions_.size(); }

    StateId start() const noexcept { return start_; }
    const std::vector<StateId>& finals() const noexcept { return finals_; }
    bool is_final(StateId q) const { return final_mask_[q]; }

    std::span<const NfaTransition> transitions() const noexcept { return transitions_; }

    /// Outgoing transitions of q, sorted by (label, target).
    std::span<const NfaTransition> transitions_from(StateId q) const {
        return std::span<const NfaTransition>(transitions_.data() + offsets_[q],
                                              offsets_[q + 1] - offsets_[q]);
    }

    /// True when no transition carries the empty label.
    bool epsilon_free() const noexcept { return epsilon_free_; }

private:
    Alphabet alphabet_;
    std::uint32_t num_states_;
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<bool> final_mask_;
    std::vector<NfaTransition> transitions_;
    std::vector<std::uint32_t> offsets_;  // CSR index: transitions_from(q)
    bool epsilon_free_;
};

/// Restricts to states that lie on some accepting path and reindexes them
/// densely (ascending old id). An empty language yields the one-state
/// automaton with no finals and no transitions.
Nfa trim(const Nfa& a);

/// True iff some final state is reachable from the start state.
bool has_accepting_path(const Nfa& a);

/// True iff the automaton accepts at least two distinct words. Linear in the
/// size of the automaton: after trimming, any cycle through a symbol-labeled
/// transition pumps infinitely many words; otherwise the language is a
/// singleton exactly when every state is reached after a unique number of
/// consumed symbols, each such position fixes one symbol, and all final
/// states sit at one position.
bool accepts_at_least_two_words(const Nfa& a);

/// The first two words of L(a) in length-lexicographic order. Requires a
/// language with at least two words; enumeration is capped at length
/// 2*|states|+1, which suffices for a trim automaton (the input is trimmed
/// internally).
std::pair<Word, Word> shortest_two_words(const Nfa& a);

/// Adds one empty-labeled self-loop per state; the language is unchanged.
Nfa augment_with_identity_loops(const Nfa& a);

/// Equivalent automaton without empty-labeled transitions.
Nfa remove_epsilon(const Nfa& a);

namespace detail {
/// accepts_at_least_two_words without the internal trim; callers guarantee a
/// trim input.
bool accepts_at_least_two_words_trimmed(const Nfa& trimmed);
}  // namespace detail

}  // namespace edist
