// families.hpp -- benchmark automaton families with known inner distances.

#pragma once

#include "edist/nfa.hpp"

namespace edist {

/// Chain of n states over {0, 1}: n-1 zero-steps to the single final state
/// and a back edge labeled 1, accepting 0^(n-1) (1 0^(n-1))*. The inner
/// distance equals n, the worst case relative to the state count. n >= 2.
Nfa gen_family_a(unsigned n);

/// Acceptor of the length-n binary words b_1..b_n with sum(i*b_i) = 0 mod
/// (n+1), on n^2+n+1 states [i,s] tracking the partial sum (plus the final
/// [n,0]). The inner distance is 2 for every n. n >= 2.
Nfa gen_family_b(unsigned n);

}  // namespace edist
