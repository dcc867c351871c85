// Shared fixtures: tiny automaton builders, the random corpus, and path
// search utilities used to cross-check transducers.

#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "edist/core.hpp"
#include "edist/edit.hpp"
#include "edist/nfa.hpp"
#include "edist/oracle.hpp"
#include "edist/transducer.hpp"

namespace edist::testing {

inline Word W(const Alphabet& sigma, const std::string& chars) {
    return sigma.word_from_chars(chars);
}

/// Trie acceptor of a finite set of words (trim by construction).
inline Nfa nfa_for_words(const Alphabet& sigma, const std::vector<std::string>& words) {
    std::vector<Word> ws;
    for (const std::string& s : words) ws.push_back(sigma.word_from_chars(s));

    struct Node {
        std::vector<std::pair<Symbol, StateId>> children;
        bool final_ = false;
    };
    std::vector<Node> nodes(1);
    for (const Word& w : ws) {
        StateId cur = 0;
        for (Symbol s : w) {
            auto& ch = nodes[cur].children;
            auto it = std::find_if(ch.begin(), ch.end(), [&](auto& p) { return p.first == s; });
            if (it == ch.end()) {
                nodes.push_back({});
                nodes[cur].children.push_back({s, static_cast<StateId>(nodes.size() - 1)});
                cur = static_cast<StateId>(nodes.size() - 1);
            } else {
                cur = it->second;
            }
        }
        nodes[cur].final_ = true;
    }

    std::vector<NfaTransition> trans;
    std::vector<StateId> finals;
    for (StateId q = 0; q < nodes.size(); ++q) {
        if (nodes[q].final_) finals.push_back(q);
        for (auto [s, to] : nodes[q].children) trans.push_back({q, Label(s), to});
    }
    return Nfa(sigma, static_cast<std::uint32_t>(nodes.size()), 0, std::move(finals),
               std::move(trans));
}

/// Random trim acyclic NFAs accepting at least two words: edges only go
/// forward, so languages are finite and the oracle is exact.
inline std::vector<Nfa> random_acyclic_corpus(std::size_t count, std::uint32_t seed,
                                              bool allow_epsilon = true) {
    std::mt19937 rng(seed);
    std::vector<Nfa> corpus;
    while (corpus.size() < count) {
        std::uniform_int_distribution<unsigned> state_dist(3, 8);
        std::uniform_int_distribution<unsigned> r_dist(2, 3);
        unsigned n = state_dist(rng);
        unsigned r = r_dist(rng);
        Alphabet sigma = Alphabet::from_chars(std::string("abc").substr(0, r));

        std::vector<NfaTransition> trans;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        std::uniform_int_distribution<Symbol> sym(0, r - 1);
        for (StateId i = 0; i < n; ++i)
            for (StateId j = i + 1; j < n; ++j) {
                if (coin(rng) < 0.45) trans.push_back({i, Label(sym(rng)), j});
                if (coin(rng) < 0.20) trans.push_back({i, Label(sym(rng)), j});
                if (allow_epsilon && coin(rng) < 0.06) trans.push_back({i, Label::epsilon(), j});
            }
        std::vector<StateId> finals;
        for (StateId q = 0; q < n; ++q)
            if (coin(rng) < 0.35) finals.push_back(q);
        if (finals.empty()) continue;

        Nfa candidate = trim(Nfa(sigma, n, 0, std::move(finals), std::move(trans)));
        if (candidate.num_states() < 2) continue;
        if (!accepts_at_least_two_words(candidate)) continue;
        corpus.push_back(std::move(candidate));
    }
    return corpus;
}

/// Random small standard-form transducers over {a,b}; finals are dense so
/// functionality counterexamples (when present) are short.
inline std::vector<Transducer> random_transducers(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Alphabet sigma = Alphabet::from_chars("ab");
    std::vector<Transducer> suite;
    std::uniform_int_distribution<unsigned> deg_dist(2, 4);
    std::uniform_int_distribution<StateId> target(0, 3);
    std::uniform_int_distribution<int> label(0, 2);  // a, b, epsilon
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    auto draw_label = [&]() {
        int v = label(rng);
        return v == 2 ? Label::epsilon() : Label(static_cast<Symbol>(v));
    };
    while (suite.size() < count) {
        std::vector<TransducerTransition> trans;
        for (StateId q = 0; q < 4; ++q) {
            unsigned deg = deg_dist(rng);
            for (unsigned i = 0; i < deg; ++i) {
                Label in = draw_label();
                Label out = draw_label();
                if (in.is_epsilon() && out.is_epsilon()) in = Label(0);
                trans.push_back({q, in, out, target(rng)});
            }
        }
        std::vector<StateId> finals;
        for (StateId q = 0; q < 4; ++q)
            if (coin(rng) < 0.6) finals.push_back(q);
        suite.emplace_back(sigma, sigma, 4, 0, std::move(finals), std::move(trans));
    }
    return suite;
}

/// All transducer states reachable at the end of some path labeled (u, v).
/// Used to check where accepting paths for a given pair can end.
inline std::set<StateId> pair_end_states(const Transducer& t, const Word& u, const Word& v) {
    struct Config {
        StateId state;
        std::size_t i, j;
        auto operator<=>(const Config&) const = default;
    };
    std::set<Config> seen;
    std::vector<Config> stack{{t.start(), 0, 0}};
    seen.insert(stack[0]);
    std::set<StateId> ends;
    while (!stack.empty()) {
        Config c = stack.back();
        stack.pop_back();
        if (c.i == u.size() && c.j == v.size()) ends.insert(c.state);
        for (const TransducerTransition& e : t.transitions_from(c.state)) {
            std::size_t i = c.i, j = c.j;
            if (!e.input.is_epsilon()) {
                if (i == u.size() || u[i] != e.input.symbol()) continue;
                ++i;
            }
            if (!e.output.is_epsilon()) {
                if (j == v.size() || v[j] != e.output.symbol()) continue;
                ++j;
            }
            Config next{e.to, i, j};
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return ends;
}

/// Membership of (u, v) in the realized relation via pair_end_states.
inline bool relates(const Transducer& t, const Word& u, const Word& v) {
    for (StateId q : pair_end_states(t, u, v))
        if (t.is_final(q)) return true;
    return false;
}

/// All words over r symbols with length <= max_len, in length-lex order.
inline std::vector<Word> all_words(unsigned r, unsigned max_len) {
    std::vector<Word> out{{}};
    std::size_t level_begin = 0;
    for (unsigned len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Symbol s = 0; s < r; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

inline std::vector<Word> to_words(const WordSet& ws) { return ws.words; }

}  // namespace edist::testing
