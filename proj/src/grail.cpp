#include "edist/grail.hpp"

#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "edist/errors.hpp"

namespace edist {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    return toks;
}

}  // namespace

Nfa parse_nfa(std::string_view text) {
    std::unordered_map<std::string, StateId> state_ids;
    std::vector<std::string> symbol_tokens;
    std::unordered_map<std::string, Symbol> symbol_ids;
    auto state = [&](const std::string& name) {
        auto [it, inserted] = state_ids.emplace(name, static_cast<StateId>(state_ids.size()));
        return it->second;
    };
    auto symbol = [&](const std::string& tok) -> Label {
        if (tok == "@epsilon") return Label::epsilon();
        auto [it, inserted] = symbol_ids.emplace(tok, static_cast<Symbol>(symbol_tokens.size()));
        if (inserted) symbol_tokens.push_back(tok);
        return Label(it->second);
    };

    std::optional<StateId> start;
    std::vector<StateId> finals;
    struct RawTransition {
        StateId from;
        Label label;
        StateId to;
    };
    std::vector<RawTransition> transitions;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 3)
            throw ParseError(line_no, "expected 3 tokens, got " + std::to_string(toks.size()));

        if (toks[1] == "|-") {
            if (toks[0] != "(START)")
                throw ParseError(line_no, "start line must read '(START) |- <state>'");
            if (start.has_value()) throw ParseError(line_no, "duplicate start line");
            start = state(toks[2]);
        } else if (toks[1] == "-|") {
            if (toks[2] != "(FINAL)")
                throw ParseError(line_no, "final line must read '<state> -| (FINAL)'");
            finals.push_back(state(toks[0]));
        } else {
            StateId from = state(toks[0]);
            Label label = symbol(toks[1]);
            StateId to = state(toks[2]);
            transitions.push_back({from, label, to});
        }
    }
    if (!start.has_value()) throw ParseError(line_no, "missing start line '(START) |- <state>'");

    std::vector<NfaTransition> trans;
    trans.reserve(transitions.size());
    for (const RawTransition& t : transitions) trans.push_back({t.from, t.label, t.to});
    return Nfa(Alphabet(std::move(symbol_tokens)),
               static_cast<std::uint32_t>(state_ids.size()), *start, std::move(finals),
               std::move(trans));
}

std::string serialize_nfa(const Nfa& a) {
    std::ostringstream out;
    out << "(START) |- " << a.start() << "\n";
    for (const NfaTransition& t : a.transitions()) {
        out << t.from << ' '
            << (t.label.is_epsilon() ? std::string("@epsilon") : a.alphabet().token(t.label.symbol()))
            << ' ' << t.to << "\n";
    }
    for (StateId f : a.finals()) out << f << " -| (FINAL)\n";
    return out.str();
}

}  // namespace edist
