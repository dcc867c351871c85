#include "edist/transducer.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace edist {

namespace {

bool transition_less(const TransducerTransition& a, const TransducerTransition& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.input.sort_key() != b.input.sort_key()) return a.input.sort_key() < b.input.sort_key();
    if (a.output.sort_key() != b.output.sort_key()) return a.output.sort_key() < b.output.sort_key();
    return a.to < b.to;
}

}  // namespace

Transducer::Transducer(Alphabet input_alphabet, Alphabet output_alphabet, std::uint32_t num_states,
                       StateId start, std::vector<StateId> finals,
                       std::vector<TransducerTransition> transitions,
                       std::vector<CounterState> state_info)
    : input_alphabet_(std::move(input_alphabet)),
      output_alphabet_(std::move(output_alphabet)),
      num_states_(num_states),
      start_(start),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)),
      state_info_(std::move(state_info)) {
    if (num_states_ == 0) throw std::invalid_argument("transducer needs at least one state");
    if (start_ >= num_states_) throw std::invalid_argument("start state out of range");
    for (StateId f : finals_)
        if (f >= num_states_) throw std::invalid_argument("final state out of range");
    for (const TransducerTransition& t : transitions_) {
        if (t.from >= num_states_ || t.to >= num_states_)
            throw std::invalid_argument("transition endpoint out of range");
        if (!t.input.is_epsilon() && t.input.symbol() >= input_alphabet_.size())
            throw std::invalid_argument("input label outside the input alphabet");
        if (!t.output.is_epsilon() && t.output.symbol() >= output_alphabet_.size())
            throw std::invalid_argument("output label outside the output alphabet");
    }
    if (!state_info_.empty() && state_info_.size() != num_states_)
        throw std::invalid_argument("state info must cover every state");

    std::sort(transitions_.begin(), transitions_.end(), transition_less);
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());

    final_mask_.assign(num_states_, false);
    for (StateId f : finals_) final_mask_[f] = true;

    offsets_.assign(num_states_ + 1, 0);
    for (const TransducerTransition& t : transitions_) ++offsets_[t.from + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

Transducer channel_transducer(unsigned k, const Alphabet& sigma) {
    if (k < 1) throw std::invalid_argument("channel transducer requires k >= 1");
    if (sigma.size() < 1) throw std::invalid_argument("channel transducer requires a nonempty alphabet");

    const unsigned r = static_cast<unsigned>(sigma.size());
    std::vector<TransducerTransition> trans;
    std::vector<StateId> finals;
    std::vector<CounterState> info(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
        finals.push_back(i);
        info[i] = {i, Label::epsilon()};
        for (Symbol s = 0; s < r; ++s) trans.push_back({i, Label(s), Label(s), i});
        if (i < k) {
            for (Symbol s = 0; s < r; ++s) {
                for (Symbol t = 0; t < r; ++t)
                    if (s != t) trans.push_back({i, Label(s), Label(t), i + 1});
                trans.push_back({i, Label(s), Label::epsilon(), i + 1});
                trans.push_back({i, Label::epsilon(), Label(s), i + 1});
            }
        }
    }
    return Transducer(sigma, sigma, k + 1, 0, std::move(finals), std::move(trans), std::move(info));
}

Transducer input_altering_transducer(unsigned k, const Alphabet& sigma, IatOptions options) {
    if (k < 1) throw std::invalid_argument("input-altering transducer requires k >= 1");
    if (sigma.size() < 1)
        throw std::invalid_argument("input-altering transducer requires a nonempty alphabet");

    const unsigned r = static_cast<unsigned>(sigma.size());
    // Plain state [i] is id i; pending state [i,a] is id (k+1) + (i-1)*r + a.
    auto plain = [](unsigned i) -> StateId { return i; };
    auto pending = [&](unsigned i, Symbol a) -> StateId { return (k + 1) + (i - 1) * r + a; };
    const std::uint32_t num_states = (k + 1) + k * r;

    std::vector<CounterState> info(num_states);
    std::vector<StateId> finals;
    for (unsigned i = 0; i <= k; ++i) {
        info[plain(i)] = {i, Label::epsilon()};
        if (i >= 1) finals.push_back(plain(i));
    }
    for (unsigned i = 1; i <= k; ++i)
        for (Symbol a = 0; a < r; ++a) {
            info[pending(i, a)] = {i, Label(a)};
            finals.push_back(pending(i, a));
        }

    std::vector<TransducerTransition> trans;
    // Non-error edges: plain self-reads, and pending reads that close a
    // deletion run on a symbol other than the pending one.
    for (unsigned i = 0; i <= k; ++i)
        for (Symbol s = 0; s < r; ++s) trans.push_back({plain(i), Label(s), Label(s), plain(i)});
    for (unsigned i = 1; i <= k; ++i)
        for (Symbol a = 0; a < r; ++a)
            for (Symbol s = 0; s < r; ++s)
                if (s != a) trans.push_back({pending(i, a), Label(s), Label(s), plain(i)});

    // Substitutions.
    for (unsigned i = 0; i < k; ++i)
        for (Symbol s = 0; s < r; ++s)
            for (Symbol t = 0; t < r; ++t)
                if (s != t) trans.push_back({plain(i), Label(s), Label(t), plain(i + 1)});
    if (!options.prune_diagonals)
        for (unsigned i = 1; i < k; ++i)
            for (Symbol a = 0; a < r; ++a)
                for (Symbol s = 0; s < r; ++s)
                    for (Symbol t = 0; t < r; ++t)
                        if (s != t && t != a)
                            trans.push_back({pending(i, a), Label(s), Label(t), plain(i + 1)});

    // Insertions; none leave the start state, which keeps first errors
    // non-insertions.
    for (unsigned i = 1; i < k; ++i)
        for (Symbol s = 0; s < r; ++s)
            trans.push_back({plain(i), Label::epsilon(), Label(s), plain(i + 1)});
    if (!options.prune_diagonals)
        for (unsigned i = 1; i < k; ++i)
            for (Symbol a = 0; a < r; ++a)
                for (Symbol s = 0; s < r; ++s)
                    if (s != a)
                        trans.push_back({pending(i, a), Label::epsilon(), Label(s), plain(i + 1)});

    // Deletions: the start of a run records the deleted symbol; later
    // deletions keep it.
    for (Symbol a = 0; a < r; ++a)
        trans.push_back({plain(0), Label(a), Label::epsilon(), pending(1, a)});
    for (unsigned i = 1; i < k; ++i)
        for (Symbol s = 0; s < r; ++s)
            trans.push_back({plain(i), Label(s), Label::epsilon(), plain(i + 1)});
    for (unsigned i = 1; i < k; ++i)
        for (Symbol a = 0; a < r; ++a)
            for (Symbol s = 0; s < r; ++s)
                trans.push_back({pending(i, a), Label(s), Label::epsilon(), pending(i + 1, a)});

    return Transducer(sigma, sigma, num_states, 0, std::move(finals), std::move(trans),
                      std::move(info));
}

Transducer invert(const Transducer& t) {
    std::vector<TransducerTransition> trans;
    trans.reserve(t.num_transitions());
    for (const TransducerTransition& e : t.transitions())
        trans.push_back({e.from, e.output, e.input, e.to});
    // Counter annotations describe forward alignments; they do not survive
    // inversion.
    return Transducer(t.output_alphabet(), t.input_alphabet(), t.num_states(), t.start(),
                      t.finals(), std::move(trans));
}

Transducer trim(const Transducer& t) {
    const std::uint32_t n = t.num_states();

    std::vector<bool> fwd(n, false);
    {
        std::deque<StateId> queue{t.start()};
        fwd[t.start()] = true;
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (const TransducerTransition& e : t.transitions_from(q))
                if (!fwd[e.to]) {
                    fwd[e.to] = true;
                    queue.push_back(e.to);
                }
        }
    }
    std::vector<std::vector<StateId>> rev(n);
    for (const TransducerTransition& e : t.transitions()) rev[e.to].push_back(e.from);
    std::vector<bool> bwd(n, false);
    {
        std::deque<StateId> queue;
        for (StateId f : t.finals())
            if (!bwd[f]) {
                bwd[f] = true;
                queue.push_back(f);
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

    if (remap[t.start()] == kDropped)
        return Transducer(t.input_alphabet(), t.output_alphabet(), 1, 0, {}, {});

    std::vector<TransducerTransition> trans;
    for (const TransducerTransition& e : t.transitions())
        if (remap[e.from] != kDropped && remap[e.to] != kDropped)
            trans.push_back({remap[e.from], e.input, e.output, remap[e.to]});
    std::vector<StateId> finals;
    for (StateId f : t.finals())
        if (remap[f] != kDropped) finals.push_back(remap[f]);
    std::vector<CounterState> info;
    if (t.has_state_info()) {
        info.resize(kept);
        for (StateId q = 0; q < n; ++q)
            if (remap[q] != kDropped) info[remap[q]] = t.state_info(q);
    }

    return Transducer(t.input_alphabet(), t.output_alphabet(), kept, remap[t.start()],
                      std::move(finals), std::move(trans), std::move(info));
}

namespace {

/// Residual output of one branch of the square over the other: `side` tells
/// which branch leads (0 means neither; the word is then empty).
struct Delay {
    int side = 0;  // +1: first branch leads by `word`; -1: second branch leads
    Word word;

    friend bool operator==(const Delay&, const Delay&) = default;
};

/// Appends one output pair to a delay. Returns false when the two output
/// streams have diverged irreconcilably (distinct symbols at the same
/// position).
bool advance_delay(const Delay& d, Label out1, Label out2, Delay& result) {
    // Build the residual pair explicitly; each component gains at most one
    // symbol so this stays O(|delay|).
    Word lead = d.word;
    Word first, second;
    if (d.side >= 0) {
        first = std::move(lead);
        if (!out1.is_epsilon()) first.push_back(out1.symbol());
        if (!out2.is_epsilon()) second.push_back(out2.symbol());
    } else {
        second = std::move(lead);
        if (!out2.is_epsilon()) second.push_back(out2.symbol());
        if (!out1.is_epsilon()) first.push_back(out1.symbol());
    }
    std::size_t common = 0;
    while (common < first.size() && common < second.size() && first[common] == second[common])
        ++common;
    first.erase(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(common));
    second.erase(second.begin(), second.begin() + static_cast<std::ptrdiff_t>(common));
    if (!first.empty() && !second.empty()) return false;
    if (!first.empty())
        result = {+1, std::move(first)};
    else if (!second.empty())
        result = {-1, std::move(second)};
    else
        result = {};
    return true;
}

struct SquareEdge {
    std::uint32_t to;
    Label out1;
    Label out2;
};

}  // namespace

bool is_functional(const Transducer& input, const Deadline& deadline) {
    Transducer t = trim(input);
    if (t.finals().empty()) return true;  // empty relation

    // Reachable square states: pairs of states reached over a common input.
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    std::vector<std::vector<SquareEdge>> edges;
    auto intern = [&](StateId a, StateId b) -> std::uint32_t {
        std::uint64_t key = (std::uint64_t{a} << 32) | b;
        auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(a, b);
            edges.emplace_back();
        }
        return it->second;
    };

    DeadlineTicker ticker(deadline);
    std::deque<std::uint32_t> queue{intern(t.start(), t.start())};
    std::vector<bool> expanded{false};
    while (!queue.empty()) {
        std::uint32_t id = queue.front();
        queue.pop_front();
        if (expanded[id]) continue;
        expanded[id] = true;
        auto [p1, p2] = pairs[id];
        auto from1 = t.transitions_from(p1);
        auto from2 = t.transitions_from(p2);
        auto add = [&](StateId a, StateId b, Label o1, Label o2) {
            ticker.tick();
            std::size_t before = pairs.size();
            std::uint32_t target = intern(a, b);
            if (pairs.size() != before) {
                expanded.push_back(false);
                queue.push_back(target);
            }
            edges[id].push_back({target, o1, o2});
        };
        for (const TransducerTransition& e1 : from1) {
            if (e1.input.is_epsilon()) {
                add(e1.to, p2, e1.output, Label::epsilon());
                continue;
            }
            for (const TransducerTransition& e2 : from2)
                if (e2.input == e1.input) add(e1.to, e2.to, e1.output, e2.output);
        }
        for (const TransducerTransition& e2 : from2)
            if (e2.input.is_epsilon()) add(p1, e2.to, Label::epsilon(), e2.output);
    }

    // Pairs that cannot reach a final pair never witness two outputs for one
    // input; exclude them before checking residuals.
    std::vector<std::vector<std::uint32_t>> rev(pairs.size());
    for (std::uint32_t id = 0; id < edges.size(); ++id)
        for (const SquareEdge& e : edges[id]) rev[e.to].push_back(id);
    std::vector<bool> useful(pairs.size(), false);
    {
        std::deque<std::uint32_t> bq;
        for (std::uint32_t id = 0; id < pairs.size(); ++id)
            if (t.is_final(pairs[id].first) && t.is_final(pairs[id].second)) {
                useful[id] = true;
                bq.push_back(id);
            }
        while (!bq.empty()) {
            std::uint32_t id = bq.front();
            bq.pop_front();
            for (std::uint32_t p : rev[id])
                if (!useful[p]) {
                    useful[p] = true;
                    bq.push_back(p);
                }
        }
    }

    std::uint32_t start_id = ids.at((std::uint64_t{t.start()} << 32) | t.start());
    if (!useful[start_id]) return true;  // no accepting pair at all

    std::vector<Delay> delay(pairs.size());
    std::vector<bool> has_delay(pairs.size(), false);
    delay[start_id] = {};
    has_delay[start_id] = true;
    std::deque<std::uint32_t> dq{start_id};
    while (!dq.empty()) {
        std::uint32_t id = dq.front();
        dq.pop_front();
        for (const SquareEdge& e : edges[id]) {
            ticker.tick();
            if (!useful[e.to]) continue;
            Delay next;
            if (!advance_delay(delay[id], e.out1, e.out2, next)) return false;
            if (!has_delay[e.to]) {
                delay[e.to] = std::move(next);
                has_delay[e.to] = true;
                dq.push_back(e.to);
            } else if (delay[e.to] != next) {
                return false;  // two residuals at one useful pair
            }
        }
    }
    for (std::uint32_t id = 0; id < pairs.size(); ++id)
        if (has_delay[id] && t.is_final(pairs[id].first) && t.is_final(pairs[id].second) &&
            delay[id] != Delay{})
            return false;
    return true;
}

}  // namespace edist
