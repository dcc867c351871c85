#include "edist/product.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace edist {

namespace {

Nfa epsilon_free_view(const Nfa& a) { return a.epsilon_free() ? a : remove_epsilon(a); }

/// Successor states of q under a transducer-side label: the empty label
/// stands for the implicit identity loop of the augmented automaton.
template <typename Fn>
void for_each_step(const Nfa& a, StateId q, Label x, Fn&& fn) {
    if (x.is_epsilon()) {
        fn(q);
        return;
    }
    for (const NfaTransition& t : a.transitions_from(q))
        if (t.label == x) fn(t.to);
}

struct TripleKey {
    StateId p, q, q2;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleHash {
    std::size_t operator()(const TripleKey& k) const noexcept {
        std::uint64_t h = k.p;
        h = h * 0x9E3779B97F4A7C15ull + k.q;
        h = h * 0x9E3779B97F4A7C15ull + k.q2;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

}  // namespace

Transducer detect_product(const Transducer& t, const Nfa& a, const Deadline& deadline) {
    if (!(t.input_alphabet() == a.alphabet()))
        throw std::invalid_argument("transducer and automaton alphabets differ");
    const Nfa an = epsilon_free_view(a);

    std::unordered_map<TripleKey, StateId, TripleHash> ids;
    std::vector<TripleKey> keys;
    std::vector<TransducerTransition> trans;
    std::vector<StateId> finals;
    auto intern = [&](StateId p, StateId q, StateId q2) {
        auto [it, inserted] = ids.emplace(TripleKey{p, q, q2}, static_cast<StateId>(keys.size()));
        if (inserted) keys.push_back({p, q, q2});
        return it->second;
    };

    DeadlineTicker ticker(deadline);
    intern(t.start(), an.start(), an.start());
    for (StateId id = 0; id < keys.size(); ++id) {
        TripleKey k = keys[id];
        if (t.is_final(k.p) && an.is_final(k.q) && an.is_final(k.q2)) finals.push_back(id);
        for (const TransducerTransition& e : t.transitions_from(k.p)) {
            for_each_step(an, k.q, e.input, [&](StateId r) {
                for_each_step(an, k.q2, e.output, [&](StateId r2) {
                    ticker.tick();
                    StateId target = intern(e.to, r, r2);
                    trans.push_back({id, e.input, e.output, target});
                });
            });
        }
    }

    Transducer raw(t.input_alphabet(), t.output_alphabet(),
                   static_cast<std::uint32_t>(keys.size()), 0, std::move(finals),
                   std::move(trans));
    return trim(raw);
}

Transducer correct_product(const Transducer& t, const Nfa& a, const Deadline& deadline) {
    if (!(t.input_alphabet() == a.alphabet()))
        throw std::invalid_argument("transducer and automaton alphabets differ");
    const Transducer ti = invert(t);
    const Nfa an = epsilon_free_view(a);

    std::unordered_map<std::uint64_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> keys;
    std::vector<TransducerTransition> trans;
    std::vector<StateId> finals;
    auto intern = [&](StateId p, StateId q) {
        std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto [it, inserted] = ids.emplace(key, static_cast<StateId>(keys.size()));
        if (inserted) keys.emplace_back(p, q);
        return it->second;
    };

    DeadlineTicker ticker(deadline);
    intern(ti.start(), an.start());
    for (StateId id = 0; id < keys.size(); ++id) {
        auto [p, q] = keys[id];
        if (ti.is_final(p) && an.is_final(q)) finals.push_back(id);
        for (const TransducerTransition& e : ti.transitions_from(p)) {
            for_each_step(an, q, e.output, [&](StateId r) {
                ticker.tick();
                StateId target = intern(e.to, r);
                trans.push_back({id, e.input, e.output, target});
            });
        }
    }

    Transducer raw(ti.input_alphabet(), ti.output_alphabet(),
                   static_cast<std::uint32_t>(keys.size()), 0, std::move(finals),
                   std::move(trans));
    return trim(raw);
}

ProductNfa ProductNfa::intersect_range(const Transducer& t, const Nfa& a,
                                       const Deadline& deadline) {
    if (!t.has_state_info())
        throw std::invalid_argument("range intersection requires a counter-annotated transducer");
    if (!(t.input_alphabet() == a.alphabet()))
        throw std::invalid_argument("transducer and automaton alphabets differ");

    ProductNfa p;
    p.aut_ = epsilon_free_view(a);
    const Nfa& an = *p.aut_;

    std::unordered_map<TripleKey, StateId, TripleHash> ids;
    std::vector<TripleKey> keys;
    auto intern = [&](StateId phi, StateId q, StateId q2) {
        auto [it, inserted] = ids.emplace(TripleKey{phi, q, q2}, static_cast<StateId>(keys.size()));
        if (inserted) {
            keys.push_back({phi, q, q2});
            p.states_.push_back({t.state_info(phi), q, q2});
        }
        return it->second;
    };

    DeadlineTicker ticker(deadline);
    intern(t.start(), an.start(), an.start());
    unsigned max_counter = 0;
    for (StateId id = 0; id < keys.size(); ++id) {
        TripleKey k = keys[id];
        max_counter = std::max(max_counter, t.state_info(k.p).counter);
        if (t.is_final(k.p) && an.is_final(k.q) && an.is_final(k.q2)) p.finals_.push_back(id);
        for (const TransducerTransition& e : t.transitions_from(k.p)) {
            for_each_step(an, k.q, e.input, [&](StateId r) {
                for_each_step(an, k.q2, e.output, [&](StateId r2) {
                    ticker.tick();
                    StateId target = intern(e.to, r, r2);
                    p.edges_.push_back({id, e.output, target});
                });
            });
        }
    }
    p.level_ = max_counter;
    return p;
}

StateId ProductNfa::intern(std::uint32_t counter, Label pending, StateId q, StateId q2) {
    const std::uint32_t n = aut_->num_states();
    std::size_t slot = pending.is_epsilon() ? 0 : 1 + pending.symbol();
    std::size_t idx = (slot * n + q) * n + q2;
    if (stamp_[idx] == generation_) return table_[idx];
    stamp_[idx] = generation_;
    StateId id = static_cast<StateId>(states_.size());
    table_[idx] = id;
    states_.push_back({{counter, pending}, q, q2});
    return id;
}

void ProductNfa::seed(const Nfa& a, bool prune_diagonals, const Deadline& deadline) {
    aut_ = epsilon_free_view(a);
    prune_diagonals_ = prune_diagonals;
    incremental_ = true;
    const std::uint32_t n = aut_->num_states();
    const std::size_t slots = 1 + aut_->alphabet().size();
    table_.assign(slots * n * n, 0);
    stamp_.assign(slots * n * n, 0);
    generation_ = 1;

    // Counter-0 layer: both copies read the same word.
    StateId start = intern(0, Label::epsilon(), aut_->start(), aut_->start());
    close_level({start}, deadline);
    frontier_.clear();
    for (StateId id = 0; id < states_.size(); ++id) frontier_.push_back(id);
    level_ = 0;
}

void ProductNfa::close_level(std::vector<StateId> worklist, const Deadline& deadline) {
    const Nfa& an = *aut_;
    DeadlineTicker ticker(deadline);
    while (!worklist.empty()) {
        StateId id = worklist.back();
        worklist.pop_back();
        const ProductState s = states_[id];  // copy: states_ may grow below
        for (const NfaTransition& e1 : an.transitions_from(s.q)) {
            if (s.cs.pending == e1.label) continue;  // pending symbol cannot close its own run
            for (const NfaTransition& e2 : an.transitions_from(s.q2)) {
                if (e2.label != e1.label) continue;
                ticker.tick();
                std::size_t before = states_.size();
                StateId target = intern(s.cs.counter, Label::epsilon(), e1.to, e2.to);
                edges_.push_back({id, e1.label, target});
                if (states_.size() != before) worklist.push_back(target);
            }
        }
    }
}

ProductNfa ProductNfa::incremental(const Nfa& a, bool prune_diagonals, const Deadline& deadline) {
    ProductNfa p;
    p.seed(a, prune_diagonals, deadline);
    p.extend(deadline);
    return p;
}

void ProductNfa::extend(const Deadline& deadline) {
    if (!incremental_)
        throw std::logic_error("extend applies to incrementally built products only");
    const Nfa& an = *aut_;
    const std::uint32_t next = level_ + 1;
    const StateId first_new = static_cast<StateId>(states_.size());
    ++generation_;
    adjacency_stale_ = true;

    DeadlineTicker ticker(deadline);
    std::vector<StateId> fresh;
    auto add = [&](StateId from, Label out, std::uint32_t counter, Label pending, StateId q,
                   StateId q2) {
        ticker.tick();
        std::size_t before = states_.size();
        StateId target = intern(counter, pending, q, q2);
        edges_.push_back({from, out, target});
        if (states_.size() != before) fresh.push_back(target);
    };

    // Error edges from the frontier into the new level.
    for (StateId id : frontier_) {
        const ProductState s = states_[id];
        if (s.cs.pending.is_epsilon()) {
            for (const NfaTransition& e1 : an.transitions_from(s.q)) {
                // Substitutions.
                for (const NfaTransition& e2 : an.transitions_from(s.q2))
                    if (e2.label != e1.label)
                        add(id, e2.label, next, Label::epsilon(), e1.to, e2.to);
                // Deletions: from the base layer they open a pending run.
                if (s.cs.counter == 0)
                    add(id, Label::epsilon(), next, e1.label, e1.to, s.q2);
                else
                    add(id, Label::epsilon(), next, Label::epsilon(), e1.to, s.q2);
            }
            // Insertions never leave the base layer.
            if (s.cs.counter >= 1)
                for (const NfaTransition& e2 : an.transitions_from(s.q2))
                    add(id, e2.label, next, Label::epsilon(), s.q, e2.to);
        } else {
            if (!prune_diagonals_) {
                for (const NfaTransition& e1 : an.transitions_from(s.q))
                    for (const NfaTransition& e2 : an.transitions_from(s.q2))
                        if (e2.label != e1.label && e2.label != s.cs.pending)
                            add(id, e2.label, next, Label::epsilon(), e1.to, e2.to);
                for (const NfaTransition& e2 : an.transitions_from(s.q2))
                    if (e2.label != s.cs.pending)
                        add(id, e2.label, next, Label::epsilon(), s.q, e2.to);
            }
            // Deletions extend the run and keep its pending symbol.
            for (const NfaTransition& e1 : an.transitions_from(s.q))
                add(id, Label::epsilon(), next, s.cs.pending, e1.to, s.q2);
        }
    }

    close_level(fresh, deadline);

    // Everything created above sits at counter `next`, contiguously.
    level_ = next;
    frontier_.clear();
    finals_.clear();
    for (StateId id = first_new; id < states_.size(); ++id) {
        frontier_.push_back(id);
        if (an.is_final(states_[id].q) && an.is_final(states_[id].q2)) finals_.push_back(id);
    }
}

std::optional<unsigned> ProductNfa::min_final_counter() const {
    std::optional<unsigned> best;
    for (StateId f : finals_) {
        unsigned c = states_[f].cs.counter;
        if (!best || c < *best) best = c;
    }
    return best;
}

Nfa ProductNfa::as_nfa() const {
    std::vector<NfaTransition> trans;
    trans.reserve(edges_.size());
    for (const StoredEdge& e : edges_) trans.push_back({e.from, e.label, e.to});
    return Nfa(aut_->alphabet(), static_cast<std::uint32_t>(states_.size()), 0, finals_,
               std::move(trans));
}

void ProductNfa::refresh_adjacency() const {
    adj_offsets_.assign(states_.size() + 1, 0);
    for (const StoredEdge& e : edges_) ++adj_offsets_[e.from + 1];
    for (std::size_t i = 1; i < adj_offsets_.size(); ++i) adj_offsets_[i] += adj_offsets_[i - 1];
    adj_edges_.resize(edges_.size());
    std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const StoredEdge& e : edges_) adj_edges_[cursor[e.from]++] = {e.label, e.to};
    adjacency_stale_ = false;
}

std::span<const ProductEdge> ProductNfa::edges_from(StateId id) const {
    if (adjacency_stale_) refresh_adjacency();
    return {adj_edges_.data() + adj_offsets_[id], adj_offsets_[id + 1] - adj_offsets_[id]};
}

}  // namespace edist
