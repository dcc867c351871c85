#include "edist/families.hpp"

#include <stdexcept>

namespace edist {

Nfa gen_family_a(unsigned n) {
    if (n < 2) throw std::invalid_argument("family a requires n >= 2");
    Alphabet sigma = Alphabet::from_chars("01");
    std::vector<NfaTransition> trans;
    for (StateId i = 0; i + 1 < n; ++i) trans.push_back({i, Label(0), i + 1});
    trans.push_back({n - 1, Label(1), 0});
    return Nfa(std::move(sigma), n, 0, {n - 1}, std::move(trans));
}

Nfa gen_family_b(unsigned n) {
    if (n < 2) throw std::invalid_argument("family b requires n >= 2");
    Alphabet sigma = Alphabet::from_chars("01");
    const unsigned mod = n + 1;

    // [i,s] for 0 <= i <= n-1, 0 <= s <= n is id i*(n+1)+s; [n,0] is the last.
    auto id = [&](unsigned i, unsigned s) -> StateId { return i * mod + s; };
    const StateId final_state = n * mod;  // [n,0]
    const std::uint32_t num_states = n * mod + 1;

    std::vector<NfaTransition> trans;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned s = 0; s <= n; ++s) {
            unsigned s0 = s;
            unsigned s1 = (s + i + 1) % mod;
            if (i + 1 < n) {
                trans.push_back({id(i, s), Label(0), id(i + 1, s0)});
                trans.push_back({id(i, s), Label(1), id(i + 1, s1)});
            } else {
                // Only [n,0] exists at the last level.
                if (s0 == 0) trans.push_back({id(i, s), Label(0), final_state});
                if (s1 == 0) trans.push_back({id(i, s), Label(1), final_state});
            }
        }
    return Nfa(std::move(sigma), num_states, id(0, 0), {final_state}, std::move(trans));
}

}  // namespace edist
