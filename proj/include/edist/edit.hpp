// edit.hpp -- edit operations, edit strings, the reduced form, and the
// word-to-word edit distance. Value types used by tests and oracles; the
// distance algorithms themselves never materialize alignments.

#pragma once

#include <utility>
#include <vector>

#include "edist/core.hpp"

namespace edist {

/// One edit operation (x/y); at least one side is a symbol.
struct EditOp {
    Label input;
    Label output;

    bool is_error() const noexcept { return input != output; }
    bool is_insertion() const noexcept { return input.is_epsilon() && !output.is_epsilon(); }
    bool is_deletion() const noexcept { return !input.is_epsilon() && output.is_epsilon(); }
    bool is_substitution() const noexcept {
        return !input.is_epsilon() && !output.is_epsilon() && input != output;
    }

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

class EditString {
public:
    EditString() = default;
    explicit EditString(std::vector<EditOp> ops);

    const std::vector<EditOp>& ops() const noexcept { return ops_; }
    std::size_t length() const noexcept { return ops_.size(); }

    friend bool operator==(const EditString&, const EditString&) = default;

private:
    std::vector<EditOp> ops_;
};

/// Number of error operations.
unsigned weight(const EditString& h);

/// (input part, output part).
std::pair<Word, Word> projections(const EditString& h);

/// Swap input and output inside every operation; an involution.
EditString inverse(const EditString& h);

/// True iff the first error is not an insertion and, when the first error is
/// a deletion (a/_), the first following non-deletion operation (if any) does
/// not output a. Defined only for nonzero weight.
bool is_reduced(const EditString& h);

/// Rewrites h into a reduced edit string with the same unordered pair of
/// projections. When h realizes the edit distance of its projections the
/// weight is preserved as well; in general the weight never increases.
/// Requires inp(h) != out(h).
EditString reduce(const EditString& h);

/// Classic unit-cost dynamic program.
unsigned edit_distance_words(const Word& u, const Word& v);

/// An edit string realizing edit_distance_words(u, v), from the DP traceback
/// (ties: match/substitution, then deletion, then insertion).
EditString edit_witness(const Word& u, const Word& v);

}  // namespace edist
