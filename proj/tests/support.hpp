#pragma once

// Test-side oracles and instance builders. Everything here is covered by
// exhaustive reasoning rather than the library's own algorithms: word
// acceptance is re-derived by naive backtracking, languages by explicit
// enumeration, so agreement with the library is meaningful evidence.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "prax/automata.hpp"
#include "prax/distributions.hpp"

namespace praxtest {

using prax::AdfaCertificate;
using prax::BigInt;
using prax::Dfa;
using prax::Nfa;
using prax::State;
using prax::Symbol;
using prax::Transition;
using prax::Word;

/// Acceptance by naive backtracking search, independent of the library's
/// frontier simulation.
inline bool naive_accepts_from(const Nfa& a, State q, const Word& w, std::size_t i) {
    if (i == w.size()) return a.is_final(q);
    for (State succ : a.post(q, w[i]))
        if (naive_accepts_from(a, succ, w, i + 1)) return true;
    return false;
}

inline bool naive_accepts(const Nfa& a, const Word& w) {
    for (State q : a.start_states())
        if (naive_accepts_from(a, q, w, 0)) return true;
    return false;
}

/// All s^len words of the given length, in lexicographic order.
inline std::vector<Word> all_words(Symbol s, std::size_t len) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * s);
        for (const Word& w : out)
            for (Symbol c = 0; c < s; ++c) {
                Word e = w;
                e.push_back(c);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

inline std::vector<Word> words_up_to(Symbol s, std::size_t maxlen) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= maxlen; ++len)
        for (Word& w : all_words(s, len)) out.push_back(std::move(w));
    return out;
}

/// L(a) restricted to words of length <= maxlen, via the naive acceptor.
inline std::set<Word> enumerate_language(const Nfa& a, std::size_t maxlen) {
    std::set<Word> out;
    for (const Word& w : words_up_to(a.alphabet_size(), maxlen))
        if (naive_accepts(a, w)) out.insert(w);
    return out;
}

/// The (finite) language of a certified acyclic DFA by depth-first search.
inline void adfa_words_from(const Dfa& d, State q, Word& prefix, std::set<Word>& out) {
    if (d.is_final(q)) out.insert(prefix);
    for (Symbol c = 0; c < d.alphabet_size(); ++c)
        for (State succ : d.post(q, c)) {
            prefix.push_back(c);
            adfa_words_from(d, succ, prefix, out);
            prefix.pop_back();
        }
}

inline std::set<Word> adfa_words(const AdfaCertificate& b) {
    std::set<Word> out;
    Word prefix;
    adfa_words_from(b.dfa, b.dfa.start_state(), prefix, out);
    return out;
}

/// NFA accepting exactly the given finite word set (one branch per word).
inline Nfa trie_nfa(const std::vector<Word>& words, Symbol s) {
    std::vector<Transition> transitions;
    std::vector<State> finals;
    State next = 1;   // 0 = shared start
    for (const Word& w : words) {
        if (w.empty()) {
            finals.push_back(0);
            continue;
        }
        State prev = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            State target = next++;
            transitions.push_back({prev, w[i], target});
            prev = target;
        }
        finals.push_back(prev);
    }
    return Nfa(s, next, {0}, std::move(finals), std::move(transitions));
}

/// Prefix-sharing trie DFA accepting exactly the given finite word set.
inline Dfa trie_dfa(const std::vector<Word>& words, Symbol s) {
    std::vector<std::vector<State>> children{std::vector<State>(s, 0)};   // 0 = root
    std::vector<State> finals;
    std::vector<bool> is_final{false};
    for (const Word& w : words) {
        State q = 0;
        for (Symbol c : w) {
            if (children[q][c] == 0) {
                children[q][c] = static_cast<State>(children.size());
                children.push_back(std::vector<State>(s, 0));
                is_final.push_back(false);
            }
            q = children[q][c];
        }
        is_final[q] = true;
    }
    std::vector<Transition> transitions;
    for (State q = 0; q < children.size(); ++q) {
        if (is_final[q]) finals.push_back(q);
        for (Symbol c = 0; c < s; ++c)
            if (children[q][c] != 0) transitions.push_back({q, c, children[q][c]});
    }
    return Dfa(s, static_cast<State>(children.size()), 0, std::move(finals),
               std::move(transitions));
}

/// Chain DFA accepting exactly Sigma^ell.
inline Dfa full_block_dfa(Symbol s, std::uint32_t ell) {
    std::vector<Transition> transitions;
    for (State q = 0; q < ell; ++q)
        for (Symbol c = 0; c < s; ++c) transitions.push_back({q, c, q + 1});
    return Dfa(s, ell + 1, 0, {ell}, std::move(transitions));
}

/// One-state NFA accepting every word.
inline Nfa universal_nfa(Symbol s) {
    std::vector<Transition> transitions;
    for (Symbol c = 0; c < s; ++c) transitions.push_back({0, c, 0});
    return Nfa(s, 1, {0}, {0}, std::move(transitions));
}

/// Random DFA whose transitions all go from lower to higher state ids, so
/// it is acyclic by construction; retried until the language is nonempty.
inline AdfaCertificate random_adfa(std::mt19937_64& gen, State max_states, Symbol s) {
    for (;;) {
        std::uniform_int_distribution<State> state_count(1, max_states);
        const State n = state_count(gen);
        std::vector<Transition> transitions;
        std::uniform_int_distribution<int> coin(0, 2);
        for (State q = 0; q + 1 < n; ++q)
            for (Symbol c = 0; c < s; ++c)
                if (coin(gen) != 0) {
                    std::uniform_int_distribution<State> target(q + 1, n - 1);
                    transitions.push_back({q, c, target(gen)});
                }
        std::vector<State> finals;
        std::uniform_int_distribution<int> fin(0, 2);
        for (State q = 0; q < n; ++q)
            if (fin(gen) == 0) finals.push_back(q);
        Dfa d(s, n, 0, std::move(finals), std::move(transitions));
        AdfaCertificate cert = prax::certify_acyclic(d);
        if (!adfa_words(cert).empty()) return cert;
    }
}

/// Random (possibly cyclic) DFA.
inline Dfa random_dfa(std::mt19937_64& gen, State max_states, Symbol s) {
    std::uniform_int_distribution<State> state_count(1, max_states);
    const State n = state_count(gen);
    std::vector<Transition> transitions;
    std::uniform_int_distribution<int> present(0, 3);
    std::uniform_int_distribution<State> target(0, n - 1);
    for (State q = 0; q < n; ++q)
        for (Symbol c = 0; c < s; ++c)
            if (present(gen) != 0) transitions.push_back({q, c, target(gen)});
    std::vector<State> finals;
    std::uniform_int_distribution<int> fin(0, 1);
    for (State q = 0; q < n; ++q)
        if (fin(gen) == 0) finals.push_back(q);
    return Dfa(s, n, 0, std::move(finals), std::move(transitions));
}

/// Random NFA.
inline Nfa random_nfa(std::mt19937_64& gen, State max_states, Symbol s) {
    std::uniform_int_distribution<State> state_count(1, max_states);
    const State n = state_count(gen);
    std::uniform_int_distribution<State> pick(0, n - 1);
    std::uniform_int_distribution<int> present(0, 3);
    std::vector<Transition> transitions;
    for (State q = 0; q < n; ++q)
        for (Symbol c = 0; c < s; ++c)
            for (State r = 0; r < n; ++r)
                if (present(gen) == 0) transitions.push_back({q, c, r});
    std::vector<State> start{pick(gen)};
    std::vector<State> finals;
    std::uniform_int_distribution<int> fin(0, 1);
    for (State q = 0; q < n; ++q)
        if (fin(gen) == 0) finals.push_back(q);
    return Nfa(s, n, std::move(start), std::move(finals), std::move(transitions));
}

/// Chi-square statistic of observed counts against expected probabilities.
inline double chi_square_stat(const std::vector<std::int64_t>& counts,
                              const std::vector<double>& probs) {
    std::int64_t n = 0;
    for (auto c : counts) n += c;
    double stat = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expected = probs[i] * static_cast<double>(n);
        const double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

/// Upper 0.001 quantiles of the chi-square distribution.
inline double chi_square_critical_001(std::size_t df) {
    static const double table[] = {0,      10.828, 13.816, 16.266, 18.467, 20.515,
                                   22.458, 24.322, 26.124, 27.877, 29.588};
    return table[df];
}

} // namespace praxtest
