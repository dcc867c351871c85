// transducer.hpp -- standard-form finite transducers: the channel and
// input-altering constructions, inversion, trimming, and the functionality
// decision procedure.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edist/core.hpp"
#include "edist/deadline.hpp"

namespace edist {

struct TransducerTransition {
    StateId from;
    Label input;
    Label output;
    StateId to;

    friend bool operator==(const TransducerTransition&, const TransducerTransition&) = default;
};

/// Error-counter annotation of a transducer state: `counter` is the number of
/// errors on every path from the start to the state; `pending` (when not
/// empty) is the symbol deleted first in the current run of deletions.
struct CounterState {
    std::uint32_t counter = 0;
    Label pending = Label::epsilon();

    friend bool operator==(const CounterState&, const CounterState&) = default;
};

/// A finite transducer in standard form: each transition reads a symbol or
/// nothing and writes a symbol or nothing. Immutable after construction.
class Transducer {
public:
    Transducer(Alphabet input_alphabet, Alphabet output_alphabet, std::uint32_t num_states,
               StateId start, std::vector<StateId> finals,
               std::vector<TransducerTransition> transitions,
               std::vector<CounterState> state_info = {});

    const Alphabet& input_alphabet() const noexcept { return input_alphabet_; }
    const Alphabet& output_alphabet() const noexcept { return output_alphabet_; }
    std::uint32_t num_states() const noexcept { return num_states_; }
    std::size_t num_transitions() const noexcept { return transitions_.size(); }
    std::size_t size() const noexcept { return num_states_ + transitions_.size(); }

    StateId start() const noexcept { return start_; }
    const std::vector<StateId>& finals() const noexcept { return finals_; }
    bool is_final(StateId q) const { return final_mask_[q]; }

    std::span<const TransducerTransition> transitions() const noexcept { return transitions_; }
    std::span<const TransducerTransition> transitions_from(StateId q) const {
        return std::span<const TransducerTransition>(transitions_.data() + offsets_[q],
                                                     offsets_[q + 1] - offsets_[q]);
    }

    /// Counter annotations are present on the channel and input-altering
    /// constructions; products and inversions drop them.
    bool has_state_info() const noexcept { return !state_info_.empty(); }
    const CounterState& state_info(StateId q) const { return state_info_.at(q); }

private:
    Alphabet input_alphabet_;
    Alphabet output_alphabet_;
    std::uint32_t num_states_;
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<bool> final_mask_;
    std::vector<TransducerTransition> transitions_;
    std::vector<std::uint32_t> offsets_;
    std::vector<CounterState> state_info_;
};

/// The input-preserving transducer relating u to every v obtainable from u
/// with at most k substitutions, insertions, or deletions. States 0..k (all
/// final) count the errors spent; size O(r^2 k). Requires k >= 1.
Transducer channel_transducer(unsigned k, const Alphabet& sigma);

struct IatOptions {
    /// Drop the substitution and insertion edges that leave a pending-symbol
    /// state for the next plain counter state. Every such path has an
    /// equal-weight replacement through the remaining edges, so computed
    /// distances are unchanged.
    bool prune_diagonals = false;
};

/// The input-altering transducer whose outputs on u are exactly words v with
/// 1 <= dist(u, v) <= k reachable through reduced alignments: plain states
/// [i] and pending states [i,a] remembering the first deleted symbol of a
/// deletion run. 1 + k + k*r states; w is never an output on input w.
/// Requires k >= 1.
Transducer input_altering_transducer(unsigned k, const Alphabet& sigma, IatOptions options = {});

/// Swap input and output on every transition (and the two alphabets).
Transducer invert(const Transducer& t);

/// Restrict to states on accepting paths, reindexed densely.
Transducer trim(const Transducer& t);

/// Decides whether every input has at most one output. Square construction:
/// pairs of states reached over a common input carry the residual by which
/// one branch's output leads the other; the relation is functional iff every
/// useful pair admits a single residual and final pairs have none. Quadratic
/// in the size of the transducer.
bool is_functional(const Transducer& t, const Deadline& deadline = {});

}  // namespace edist
