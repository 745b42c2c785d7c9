#include "prax/automata_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace prax {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

long long parse_int_field(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw InputError("expected '" + key + "=<int>' in header, got '" + token + "'");
    try {
        std::size_t used = 0;
        long long v = std::stoll(token.substr(prefix.size()), &used);
        if (used != token.size() - prefix.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw InputError("bad integer in header field '" + token + "'");
    }
}

std::vector<State> parse_state_list(std::istringstream& in, const char* what) {
    std::vector<State> out;
    long long v;
    while (in >> v) {
        if (v < 0) throw InputError(std::string("negative ") + what + " state id");
        out.push_back(static_cast<State>(v));
    }
    if (!in.eof()) throw InputError(std::string("bad token in ") + what + " line");
    return out;
}

} // namespace

Nfa parse_nfa(std::istream& in) {
    std::string line;
    // Header: first non-blank, non-comment line.
    long long s = -1, states = -1;
    bool have_header = false;
    std::vector<State> start, finals;
    std::vector<Transition> transitions;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag, stok, ntok;
            ls >> tag >> stok >> ntok;
            if (tag != "nfa")
                throw InputError("expected header 'nfa s=<int> states=<int>'");
            s = parse_int_field(stok, "s");
            states = parse_int_field(ntok, "states");
            if (s < 1) throw InputError("alphabet size must be at least 1");
            if (states < 0) throw InputError("negative state count");
            std::string rest;
            if (ls >> rest) throw InputError("trailing token '" + rest + "' in header");
            have_header = true;
            continue;
        }
        std::string first;
        ls >> first;
        if (first == "start:") {
            auto ids = parse_state_list(ls, "start");
            start.insert(start.end(), ids.begin(), ids.end());
        } else if (first == "final:") {
            auto ids = parse_state_list(ls, "final");
            finals.insert(finals.end(), ids.begin(), ids.end());
        } else {
            long long from, symbol, to;
            try {
                from = std::stoll(first);
            } catch (const std::exception&) {
                throw InputError("unrecognized line starting with '" + first + "'");
            }
            if (!(ls >> symbol >> to))
                throw InputError("transition line needs '<from> <symbol> <to>'");
            std::string rest;
            if (ls >> rest) throw InputError("trailing token '" + rest + "' in transition");
            if (from < 0 || symbol < 0 || to < 0)
                throw InputError("negative value in transition line");
            transitions.push_back({static_cast<State>(from), static_cast<Symbol>(symbol),
                                   static_cast<State>(to)});
        }
    }
    if (!have_header) throw InputError("missing 'nfa' header line");
    return Nfa(static_cast<Symbol>(s), static_cast<State>(states), std::move(start),
               std::move(finals), std::move(transitions));
}

Nfa parse_nfa(const std::string& text) {
    std::istringstream in(text);
    return parse_nfa(in);
}

Dfa parse_dfa(const std::string& text) {
    return Dfa(parse_nfa(text));
}

std::string format_nfa(const Nfa& a) {
    std::ostringstream out;
    out << "nfa s=" << a.alphabet_size() << " states=" << a.num_states() << "\n";
    out << "start:";
    for (State q : a.start_states()) out << ' ' << q;
    out << "\nfinal:";
    for (State q : a.final_states()) out << ' ' << q;
    out << '\n';
    for (const Transition& t : a.transitions())
        out << t.from << ' ' << t.symbol << ' ' << t.to << '\n';
    return out.str();
}

Nfa read_nfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open automaton file '" + path + "'");
    return parse_nfa(in);
}

Dfa read_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open automaton file '" + path + "'");
    return Dfa(parse_nfa(in));
}

std::string format_word(const Word& w, Symbol alphabet_size) {
    std::string out;
    if (alphabet_size <= 10) {
        for (Symbol c : w) out += static_cast<char>('0' + c);
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(w[i]);
        }
    }
    return out;
}

} // namespace prax
