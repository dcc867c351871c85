// product.hpp -- the three transducer/automaton products: the relation
// restricted to language pairs (error detection), the inverse-channel
// restriction (error correction), and the counter-annotated range
// intersection that the distance search walks level by level.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edist/deadline.hpp"
#include "edist/nfa.hpp"
#include "edist/transducer.hpp"

namespace edist {

/// Transducer realizing R(t) restricted to pairs whose both sides lie in
/// L(a): states are (t-state, a-state, a-state) triples synchronized on the
/// input and output label respectively. Built from the start triple only and
/// trimmed. The automaton side is made epsilon-free internally.
Transducer detect_product(const Transducer& t, const Nfa& a, const Deadline& deadline = {});

/// Transducer realizing R(t) inverted and restricted to outputs in L(a):
/// states are (inverted-t-state, a-state) pairs synchronized on the output
/// label. Built reachably and trimmed.
Transducer correct_product(const Transducer& t, const Nfa& a, const Deadline& deadline = {});

/// One state of the range-intersection product: the counter annotation of
/// the transducer state plus the two automaton copies.
struct ProductState {
    CounterState cs;
    StateId q;
    StateId q2;
};

struct ProductEdge {
    Label label;  // output label; empty for deletion steps
    StateId to;
};

/// NFA accepting t(L(a)) `intersect` L(a) for a counter-annotated transducer
/// t, with per-state counters retained. States are created only when reached
/// from the start triple, so emptiness is the absence of final states.
///
/// Two builders: `intersect_range` walks an explicitly built transducer;
/// `incremental` grows the same product level by level without ever
/// materializing the transducer, instantiating the counter-(k+1) edges
/// directly from the frontier. In the incremental form the final states are
/// only the triples at the current level whose automaton pair is accepting.
class ProductNfa {
public:
    static ProductNfa intersect_range(const Transducer& t, const Nfa& a,
                                      const Deadline& deadline = {});

    /// Level-1 product for the incremental search.
    static ProductNfa incremental(const Nfa& a, bool prune_diagonals = false,
                                  const Deadline& deadline = {});

    /// Grow from the current level k to k+1: error edges out of the frontier,
    /// then non-error closure of the new level. Finals of the old level are
    /// demoted; the new finals are the counter-(k+1) accepting triples.
    void extend(const Deadline& deadline = {});

    unsigned level() const noexcept { return level_; }
    std::size_t num_states() const noexcept { return states_.size(); }
    std::size_t num_transitions() const noexcept { return edges_.size(); }

    const ProductState& state(StateId id) const { return states_.at(id); }
    std::span<const ProductEdge> edges_from(StateId id) const;
    const std::vector<StateId>& finals() const noexcept { return finals_; }

    /// Every state is reachable from the start triple by construction, so a
    /// final state exists iff an accepting path does.
    bool has_accepting_path() const noexcept { return !finals_.empty(); }

    /// Smallest counter among final states; nullopt when there are none.
    std::optional<unsigned> min_final_counter() const;

    /// Plain NFA view over the underlying automaton's alphabet (state 0 is
    /// the start triple).
    Nfa as_nfa() const;

private:
    ProductNfa() = default;

    void seed(const Nfa& a, bool prune_diagonals, const Deadline& deadline);
    void close_level(std::vector<StateId> worklist, const Deadline& deadline);
    StateId intern(std::uint32_t counter, Label pending, StateId q, StateId q2);
    void refresh_adjacency() const;

    struct StoredEdge {
        StateId from;
        Label label;
        StateId to;
    };

    std::vector<ProductState> states_;
    std::vector<StoredEdge> edges_;  // flat; adjacency is derived on demand
    std::vector<StateId> finals_;
    std::vector<StateId> frontier_;  // states at counter == level_
    unsigned level_ = 0;
    bool prune_diagonals_ = false;
    bool incremental_ = false;

    mutable std::vector<std::uint32_t> adj_offsets_;
    mutable std::vector<ProductEdge> adj_edges_;
    mutable bool adjacency_stale_ = true;

    // The epsilon-free automaton the incremental product synchronizes with.
    std::optional<Nfa> aut_;

    // Dense per-level dedup table indexed by (pending-slot, q, q2); entries
    // are valid only when their stamp matches the current level generation.
    std::vector<StateId> table_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
};

}  // namespace edist
