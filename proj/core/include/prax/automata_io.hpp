#pragma once

#include <iosfwd>
#include <string>

#include "prax/automata.hpp"

namespace prax {

/// Parses the automaton text format:
///
///   nfa s=<int> states=<int>
///   start: <id ...>
///   final: <id ...>
///   <from> <symbol> <to>
///
/// The header must come first; after it, start/final/transition lines may
/// appear in any order and the result does not depend on that order.
/// Comments run from '#' to end of line; blank lines are ignored.
/// Throws InputError on malformed input.
Nfa parse_nfa(std::istream& in);
Nfa parse_nfa(const std::string& text);

/// Same format plus the determinism and single-start checks.
Dfa parse_dfa(const std::string& text);

/// Canonical rendering: header, start line, final line, transitions
/// sorted by (from, symbol, to). parse(format(a)) == a.
std::string format_nfa(const Nfa& a);

/// Reads and parses a file; missing or unreadable files raise InputError.
Nfa read_nfa_file(const std::string& path);
Dfa read_dfa_file(const std::string& path);

/// Word rendering used by the CLI: digit string when the alphabet has at
/// most 10 symbols, space-separated integers otherwise.
std::string format_word(const Word& w, Symbol alphabet_size);

} // namespace prax
