#include "edist/edit.hpp"

#include <algorithm>
#include <stdexcept>

namespace edist {

EditString::EditString(std::vector<EditOp> ops) : ops_(std::move(ops)) {
    for (const EditOp& op : ops_)
        if (op.input.is_epsilon() && op.output.is_epsilon())
            throw std::invalid_argument("edit operation cannot be empty on both sides");
}

unsigned weight(const EditString& h) {
    unsigned w = 0;
    for (const EditOp& op : h.ops())
        if (op.is_error()) ++w;
    return w;
}

std::pair<Word, Word> projections(const EditString& h) {
    Word in, out;
    for (const EditOp& op : h.ops()) {
        if (!op.input.is_epsilon()) in.push_back(op.input.symbol());
        if (!op.output.is_epsilon()) out.push_back(op.output.symbol());
    }
    return {std::move(in), std::move(out)};
}

EditString inverse(const EditString& h) {
    std::vector<EditOp> ops;
    ops.reserve(h.length());
    for (const EditOp& op : h.ops()) ops.push_back({op.output, op.input});
    return EditString(std::move(ops));
}

bool is_reduced(const EditString& h) {
    const auto& ops = h.ops();
    std::size_t first_error = ops.size();
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (ops[i].is_error()) {
            first_error = i;
            break;
        }
    if (first_error == ops.size())
        throw std::invalid_argument("reduced form is defined only for nonzero weight");

    const EditOp& e = ops[first_error];
    if (e.is_insertion()) return false;
    if (e.is_deletion()) {
        Label deleted = e.input;
        for (std::size_t i = first_error + 1; i < ops.size(); ++i) {
            if (ops[i].is_deletion()) continue;
            return ops[i].output != deleted;  // first non-deletion after the error
        }
    }
    return true;
}

EditString reduce(const EditString& h) {
    {
        auto [in, out] = projections(h);
        if (in == out) throw std::invalid_argument("reduce requires distinct projections");
    }

    std::vector<EditOp> g(h.ops().begin(), h.ops().end());
    // Each rewrite either finishes or strictly shrinks the deletion-run
    // pattern; the cap turns a looping bug into a loud failure.
    const std::size_t max_rounds = h.length() * h.length() + 4;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        std::size_t first_error = g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i].is_error()) {
                first_error = i;
                break;
            }
        if (first_error == g.size())
            throw std::logic_error("reduce lost all errors despite distinct projections");

        EditOp e = g[first_error];
        if (e.is_substitution()) return EditString(std::move(g));
        if (e.is_insertion()) {
            for (EditOp& op : g) std::swap(op.input, op.output);
            continue;
        }

        // First error deletes symbol a; skip the run of deletions after it.
        Label a = e.input;
        std::size_t next = first_error + 1;
        while (next < g.size() && g[next].is_deletion()) ++next;
        if (next == g.size() || g[next].output != a) return EditString(std::move(g));

        // The run is followed by (x/a): match a instead and push the deletion
        // onto x. An inserted a simply disappears into the match.
        EditOp xa = g[next];
        g[first_error] = {a, a};
        if (xa.input.is_epsilon())
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(next));
        else
            g[next] = {xa.input, Label::epsilon()};
    }
    throw std::logic_error("reduce failed to converge");
}

unsigned edit_distance_words(const Word& u, const Word& v) {
    const std::size_t n = u.size(), m = v.size();
    std::vector<unsigned> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<unsigned>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<unsigned>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            unsigned sub = prev[j - 1] + (u[i - 1] == v[j - 1] ? 0 : 1);
            cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

EditString edit_witness(const Word& u, const Word& v) {
    const std::size_t n = u.size(), m = v.size();
    std::vector<std::vector<unsigned>> dp(n + 1, std::vector<unsigned>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) dp[i][0] = static_cast<unsigned>(i);
    for (std::size_t j = 0; j <= m; ++j) dp[0][j] = static_cast<unsigned>(j);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            unsigned sub = dp[i - 1][j - 1] + (u[i - 1] == v[j - 1] ? 0 : 1);
            dp[i][j] = std::min({sub, dp[i - 1][j] + 1, dp[i][j - 1] + 1});
        }

    std::vector<EditOp> ops;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 &&
            dp[i][j] == dp[i - 1][j - 1] + (u[i - 1] == v[j - 1] ? 0 : 1)) {
            ops.push_back({Label(u[i - 1]), Label(v[j - 1])});
            --i, --j;
        } else if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
            ops.push_back({Label(u[i - 1]), Label::epsilon()});
            --i;
        } else {
            ops.push_back({Label::epsilon(), Label(v[j - 1])});
            --j;
        }
    }
    std::reverse(ops.begin(), ops.end());
    return EditString(std::move(ops));
}

}  // namespace edist
