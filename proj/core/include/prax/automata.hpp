#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "prax/errors.hpp"

namespace prax {

using State = std::uint32_t;
using Symbol = std::uint32_t;

/// A word is a sequence of symbols, each smaller than the alphabet size.
/// The empty word is a valid word of length 0.
using Word = std::vector<Symbol>;

struct Transition {
    State from;
    Symbol symbol;
    State to;

    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton over the alphabet {0, ..., s-1}.
///
/// States are the dense range 0..num_states-1. There are no epsilon
/// transitions; nondeterminism comes from the transition relation and from
/// the start *set* (a single start state is the special case of a
/// singleton set, and a set keeps unions linear-time without epsilon
/// edges).
///
/// Immutable after construction, so all read operations are safe for
/// unrestricted concurrent use.
class Nfa {
public:
    /// Validates that every transition endpoint is a valid state id and
    /// every symbol is below the alphabet size; throws InputError
    /// otherwise. Start/final/transition lists are deduplicated and kept
    /// sorted.
    Nfa(Symbol alphabet_size, State num_states, std::vector<State> start,
        std::vector<State> finals, std::vector<Transition> transitions);

    Symbol alphabet_size() const { return alphabet_size_; }
    State num_states() const { return num_states_; }
    std::size_t num_transitions() const { return transitions_.size(); }

    /// Number of states plus number of transitions.
    std::size_t size() const { return num_states_ + transitions_.size(); }

    const std::vector<State>& start_states() const { return start_; }
    const std::vector<State>& final_states() const { return finals_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    /// Successors of state `from` under `symbol`, in ascending order.
    std::span<const State> post(State from, Symbol symbol) const;

    bool is_start(State q) const;
    bool is_final(State q) const;

    bool operator==(const Nfa& other) const;

private:
    Symbol alphabet_size_;
    State num_states_;
    std::vector<State> start_;                  // sorted, unique
    std::vector<State> finals_;                 // sorted, unique
    std::vector<Transition> transitions_;       // sorted, unique
    // Transitions grouped by (state, symbol) so one frontier step costs
    // O(out-degree).
    std::vector<std::uint32_t> post_offsets_;   // num_states*alphabet_size+1
    std::vector<State> post_targets_;
    std::vector<bool> final_mask_;
};

/// Deterministic finite automaton: exactly one start state and at most one
/// transition per (state, symbol). May be incomplete.
class Dfa : public Nfa {
public:
    /// Throws InputError if the automaton is not deterministic or does not
    /// have exactly one start state.
    explicit Dfa(Nfa nfa);

    Dfa(Symbol alphabet_size, State num_states, State start,
        std::vector<State> finals, std::vector<Transition> transitions);

    State start_state() const { return start_states().front(); }

    /// The unique successor under `symbol`, or num_states() if undefined.
    State step(State from, Symbol symbol) const;
};

/// An acyclic DFA together with a topological order of its reachable
/// states; the accepted language is therefore finite. States that cannot
/// be reached from the start state are ignored (they may lie on cycles).
struct AdfaCertificate {
    Dfa dfa;
    std::vector<State> topo_order;   // reachable states, sources first
};

/// A trimmed NFA all of whose accepted words share one length, together
/// with the per-state depth assignment witnessing that fact.
struct BlockCertificate {
    Nfa nfa;                        // trimmed: every state lies on an accepting path
    std::vector<std::uint32_t> level;  // level[q] = distance from the start set
    std::uint32_t word_length = 0;  // level of every final state
};

/// Membership test by frontier-set simulation, O(|w| * size(a)).
/// Throws InputError if a symbol of `w` is outside a's alphabet.
bool membership(const Nfa& a, const Word& w);

/// Topologically orders the reachable states of `d`. Throws NotAcyclicError
/// if a cycle is reachable from the start state.
AdfaCertificate certify_acyclic(const Dfa& d);

/// Trims `a` to the states on accepting paths and certifies that all
/// accepted words share one length. Throws EmptyLanguageError if L(a) is
/// empty and NotBlockError if two accepted words have different lengths.
/// Dead states never cause a spurious rejection: they are removed before
/// levels are assigned.
BlockCertificate certify_block(const Nfa& a);

/// DFA for the complement of L(d) relative to the full set of words.
/// Completes `d` with a sink state first (incomplete DFAs are allowed),
/// then flips final states.
Dfa complement_dfa(const Dfa& d);

/// NFA accepting the union of the given DFA languages: disjointly
/// relabeled state sets, union of start sets. Linear time, no epsilon
/// transitions. Throws InputError on mixed alphabets or an empty list.
Nfa union_nfa(std::span<const Dfa> ds);

} // namespace prax
