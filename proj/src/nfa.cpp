#include "edist/nfa.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "edist/errors.hpp"

namespace edist {

namespace {

bool transition_less(const NfaTransition& a, const NfaTransition& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.label.sort_key() != b.label.sort_key()) return a.label.sort_key() < b.label.sort_key();
    return a.to < b.to;
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::uint32_t num_states, StateId start,
         std::vector<StateId> finals, std::vector<NfaTransition> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      start_(start),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
    if (num_states_ == 0) throw std::invalid_argument("automaton needs at least one state");
    if (start_ >= num_states_) throw std::invalid_argument("start state out of range");
    for (StateId f : finals_)
        if (f >= num_states_) throw std::invalid_argument("final state out of range");
    for (const NfaTransition& t : transitions_) {
        if (t.from >= num_states_ || t.to >= num_states_)
            throw std::invalid_argument("transition endpoint out of range");
        if (!t.label.is_epsilon() && t.label.symbol() >= alphabet_.size())
            throw std::invalid_argument("transition label outside the alphabet");
    }

    std::sort(transitions_.begin(), transitions_.end(), transition_less);
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());

    final_mask_.assign(num_states_, false);
    for (StateId f : finals_) final_mask_[f] = true;

    offsets_.assign(num_states_ + 1, 0);
    for (const NfaTransition& t : transitions_) ++offsets_[t.from + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

    epsilon_free_ = std::none_of(transitions_.begin(), transitions_.end(),
                                 [](const NfaTransition& t) { return t.label.is_epsilon(); });
}

Nfa trim(const Nfa& a) {
    const std::uint32_t n = a.num_states();

    std::vector<bool> fwd(n, false);
    {
        std::deque<StateId> queue{a.start()};
        fwd[a.start()] = true;
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (const NfaTransition& t : a.transitions_from(q))
                if (!fwd[t.to]) {
                    fwd[t.to] = true;
                    queue.push_back(t.to);
                }
        }
    }

    std::vector<std::vector<StateId>> rev(n);
    for (const NfaTransition& t : a.transitions()) rev[t.to].push_back(t.from);
    std::vector<bool> bwd(n, false);
    {
        std::deque<StateId> queue;
        for (StateId f : a.finals()) {
            if (!bwd[f]) {
                bwd[f] = true;
                queue.push_back(f);
            }
        }
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (StateId p : rev[q])
                if (!bwd[p]) {
                    bwd[p] = true;
                    queue.push_back(p);
                }
        }
    }

    constexpr StateId kDropped = std::numeric_limits<StateId>::max();
    std::vector<StateId> remap(n, kDropped);
    std::uint32_t kept = 0;
    for (StateId q = 0; q < n; ++q)
        if (fwd[q] && bwd[q]) remap[q] = kept++;

    if (remap[a.start()] == kDropped)
        return Nfa(a.alphabet(), 1, 0, {}, {});  // empty language

    std::vector<NfaTransition> trans;
    for (const NfaTransition& t : a.transitions())
        if (remap[t.from] != kDropped && remap[t.to] != kDropped)
            trans.push_back({remap[t.from], t.label, remap[t.to]});
    std::vector<StateId> finals;
    for (StateId f : a.finals())
        if (remap[f] != kDropped) finals.push_back(remap[f]);

    return Nfa(a.alphabet(), kept, remap[a.start()], std::move(finals), std::move(trans));
}

bool has_accepting_path(const Nfa& a) {
    std::vector<bool> seen(a.num_states(), false);
    std::deque<StateId> queue{a.start()};
    seen[a.start()] = true;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        if (a.is_final(q)) return true;
        for (const NfaTransition& t : a.transitions_from(q))
            if (!seen[t.to]) {
                seen[t.to] = true;
                queue.push_back(t.to);
            }
    }
    return false;
}

namespace {

/// True iff some cycle of the (trim) automaton contains a symbol-labeled
/// transition. Iterative Tarjan SCC.
bool has_pumpable_cycle(const Nfa& a) {
    const std::uint32_t n = a.num_states();
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::uint32_t next_index = 0, next_comp = 0;

    struct Frame {
        StateId q;
        std::size_t next_edge;
    };
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            auto edges = a.transitions_from(fr.q);
            if (fr.next_edge < edges.size()) {
                StateId to = edges[fr.next_edge++].to;
                if (index[to] == kUnset) {
                    index[to] = low[to] = next_index++;
                    stack.push_back(to);
                    on_stack[to] = true;
                    frames.push_back({to, 0});
                } else if (on_stack[to]) {
                    low[fr.q] = std::min(low[fr.q], index[to]);
                }
            } else {
                if (low[fr.q] == index[fr.q]) {
                    StateId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                    } while (w != fr.q);
                    ++next_comp;
                }
                StateId q = fr.q;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().q] = std::min(low[frames.back().q], low[q]);
            }
        }
    }

    for (const NfaTransition& t : a.transitions())
        if (!t.label.is_epsilon() && comp[t.from] == comp[t.to]) return true;
    return false;
}

}  // namespace

namespace detail {

bool accepts_at_least_two_words_trimmed(const Nfa& t) {
    if (t.finals().empty()) return false;  // empty language
    if (has_pumpable_cycle(t)) return true;

    // Finite language. The language is a singleton word w exactly when every
    // state is reachable after one fixed number of consumed symbols, that
    // position determines the symbol, and all finals share one position.
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> level(t.num_states(), kUnset);
    std::vector<Label> symbol_at(t.num_states() + 1, Label::epsilon());
    std::vector<bool> symbol_set(t.num_states() + 1, false);

    std::deque<StateId> queue{t.start()};
    level[t.start()] = 0;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (const NfaTransition& e : t.transitions_from(q)) {
            std::uint32_t next = level[q];
            if (!e.label.is_epsilon()) {
                if (!symbol_set[level[q]]) {
                    symbol_set[level[q]] = true;
                    symbol_at[level[q]] = e.label;
                } else if (symbol_at[level[q]] != e.label) {
                    return true;  // two prefixes of equal length diverge
                }
                ++next;
            }
            if (level[e.to] == kUnset) {
                level[e.to] = next;
                queue.push_back(e.to);
            } else if (level[e.to] != next) {
                return true;  // same state at two prefix lengths
            }
        }
    }

    std::uint32_t final_level = kUnset;
    for (StateId f : t.finals()) {
        if (final_level == kUnset) final_level = level[f];
        else if (level[f] != final_level) return true;  // two accepted lengths
    }
    return false;
}

}  // namespace detail

bool accepts_at_least_two_words(const Nfa& a) {
    return detail::accepts_at_least_two_words_trimmed(trim(a));
}

namespace {

using StateSet = std::vector<StateId>;  // sorted

StateSet epsilon_closure(const Nfa& a, StateSet states) {
    std::vector<bool> in(a.num_states(), false);
    std::deque<StateId> queue;
    for (StateId q : states) {
        in[q] = true;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (const NfaTransition& t : a.transitions_from(q))
            if (t.label.is_epsilon() && !in[t.to]) {
                in[t.to] = true;
                queue.push_back(t.to);
            }
    }
    StateSet out;
    for (StateId q = 0; q < a.num_states(); ++q)
        if (in[q]) out.push_back(q);
    return out;
}

StateSet step_closure(const Nfa& a, const StateSet& states, Symbol s) {
    StateSet next;
    for (StateId q : states)
        for (const NfaTransition& t : a.transitions_from(q))
            if (!t.label.is_epsilon() && t.label.symbol() == s) next.push_back(t.to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) return next;
    return epsilon_closure(a, std::move(next));
}

bool contains_final(const Nfa& a, const StateSet& states) {
    for (StateId q : states)
        if (a.is_final(q)) return true;
    return false;
}

}  // namespace

std::pair<Word, Word> shortest_two_words(const Nfa& a) {
    Nfa t = trim(a);
    const std::size_t cap = 2 * std::size_t{t.num_states()} + 1;

    struct Node {
        Word word;
        StateSet states;
    };
    std::vector<Node> frontier{{Word{}, epsilon_closure(t, {t.start()})}};
    std::vector<Word> found;

    for (std::size_t len = 0; len <= cap && !frontier.empty(); ++len) {
        for (const Node& node : frontier) {
            if (contains_final(t, node.states)) {
                found.push_back(node.word);
                if (found.size() == 2) return {found[0], found[1]};
            }
        }
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (Symbol s = 0; s < t.alphabet().size(); ++s) {
                StateSet reached = step_closure(t, node.states, s);
                if (reached.empty()) continue;
                Word w = node.word;
                w.push_back(s);
                next.push_back({std::move(w), std::move(reached)});
            }
        }
        frontier = std::move(next);
    }
    throw TwoWordsRequiredError();
}

Nfa augment_with_identity_loops(const Nfa& a) {
    std::vector<NfaTransition> trans(a.transitions().begin(), a.transitions().end());
    for (StateId q = 0; q < a.num_states(); ++q)
        trans.push_back({q, Label::epsilon(), q});
    return Nfa(a.alphabet(), a.num_states(), a.start(), a.finals(), std::move(trans));
}

Nfa remove_epsilon(const Nfa& a) {
    if (a.epsilon_free()) return a;

    std::vector<NfaTransition> trans;
    std::vector<StateId> finals;
    for (StateId q = 0; q < a.num_states(); ++q) {
        StateSet closure = epsilon_closure(a, {q});
        bool is_final = false;
        for (StateId p : closure) {
            if (a.is_final(p)) is_final = true;
            for (const NfaTransition& t : a.transitions_from(p))
                if (!t.label.is_epsilon()) trans.push_back({q, t.label, t.to});
        }
        if (is_final) finals.push_back(q);
    }
    return Nfa(a.alphabet(), a.num_states(), a.start(), std::move(finals), std::move(trans));
}

}  // namespace edist
