// grail.hpp -- the text interchange format for automata. One item per line:
//
//   (START) |- q        start state (exactly one such line)
//   p x q               transition; x is a symbol token or @epsilon
//   q -| (FINAL)        final state
//
// Blank lines and lines starting with '#' are ignored. State names are
// arbitrary whitespace-free tokens, mapped to dense ids in order of first
// appearance; the alphabet is the set of transition symbol tokens in order
// of first appearance.

#pragma once

#include <string>
#include <string_view>

#include "edist/nfa.hpp"

namespace edist {

/// Throws ParseError (with the offending line) on malformed input, a missing
/// start line, or more than one start line.
Nfa parse_nfa(std::string_view text);

/// Deterministic: start line, then transitions sorted by (source, label,
/// target) with the empty label first, then finals in ascending order.
/// States are written as their dense ids.
std::string serialize_nfa(const Nfa& a);

}  // namespace edist
