#include "edist/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "edist/edit.hpp"
#include "edist/errors.hpp"

namespace edist {

bool WordSet::contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w, length_lex_less);
}

namespace {

using StateSet = std::vector<StateId>;  // sorted

StateSet closure(const Nfa& a, StateSet states) {
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

bool any_final(const Nfa& a, const StateSet& states) {
    for (StateId q : states)
        if (a.is_final(q)) return true;
    return false;
}

}  // namespace

WordSet enumerate_language(const Nfa& a, unsigned max_len) {
    WordSet result;
    result.truncation_bound = max_len;

    struct Node {
        Word word;
        StateSet states;
    };
    std::vector<Node> frontier{{Word{}, closure(a, {a.start()})}};
    for (unsigned len = 0; len <= max_len && !frontier.empty(); ++len) {
        for (const Node& node : frontier)
            if (any_final(a, node.states)) result.words.push_back(node.word);
        if (len == max_len) break;
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (Symbol s = 0; s < a.alphabet().size(); ++s) {
                StateSet reached;
                for (StateId q : node.states)
                    for (const NfaTransition& t : a.transitions_from(q))
                        if (!t.label.is_epsilon() && t.label.symbol() == s)
                            reached.push_back(t.to);
                std::sort(reached.begin(), reached.end());
                reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
                if (reached.empty()) continue;
                Word w = node.word;
                w.push_back(s);
                next.push_back({std::move(w), closure(a, std::move(reached))});
            }
        }
        frontier = std::move(next);
    }
    return result;
}

unsigned brute_inner_distance(const Nfa& a, unsigned max_len) {
    WordSet ws = enumerate_language(a, max_len);
    if (ws.size() < 2) throw TwoWordsRequiredError();
    unsigned best = 0;
    bool have = false;
    for (std::size_t i = 0; i < ws.words.size(); ++i)
        for (std::size_t j = i + 1; j < ws.words.size(); ++j) {
            unsigned d = edit_distance_words(ws.words[i], ws.words[j]);
            if (!have || d < best) {
                best = d;
                have = true;
            }
        }
    return best;
}

WordSet brute_outputs(const Transducer& t, const Word& x, unsigned max_out_len) {
    struct Config {
        StateId state;
        std::size_t pos;
        Word out;

        auto operator<=>(const Config&) const = default;
    };

    std::set<Config> seen;
    std::deque<Config> queue;
    std::set<Word> outputs;
    auto visit = [&](Config c) {
        if (c.out.size() > max_out_len) return;
        if (seen.insert(c).second) queue.push_back(std::move(c));
    };
    visit({t.start(), 0, {}});
    while (!queue.empty()) {
        Config c = queue.front();
        queue.pop_front();
        if (c.pos == x.size() && t.is_final(c.state)) outputs.insert(c.out);
        for (const TransducerTransition& e : t.transitions_from(c.state)) {
            std::size_t pos = c.pos;
            if (!e.input.is_epsilon()) {
                if (pos == x.size() || x[pos] != e.input.symbol()) continue;
                ++pos;
            }
            Word out = c.out;
            if (!e.output.is_epsilon()) out.push_back(e.output.symbol());
            visit({e.to, pos, std::move(out)});
        }
    }

    WordSet result;
    result.truncation_bound = max_out_len;
    result.words.assign(outputs.begin(), outputs.end());
    std::sort(result.words.begin(), result.words.end(), length_lex_less);
    return result;
}

bool brute_is_functional(const Transducer& t, unsigned max_in_len) {
    const unsigned out_bound = max_in_len + t.num_states();
    const std::size_t r = t.input_alphabet().size();

    std::deque<Word> inputs{Word{}};
    while (!inputs.empty()) {
        Word x = inputs.front();
        inputs.pop_front();
        if (brute_outputs(t, x, out_bound).size() > 1) return false;
        if (x.size() < max_in_len)
            for (Symbol s = 0; s < r; ++s) {
                Word y = x;
                y.push_back(s);
                inputs.push_back(std::move(y));
            }
    }
    return true;
}

}  // namespace edist
