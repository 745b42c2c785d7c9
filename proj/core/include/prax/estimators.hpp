#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "prax/automata.hpp"
#include "prax/distributions.hpp"
#include "prax/sampling.hpp"

namespace prax {

/// Decision procedures that are exact on one side and probabilistic on the
/// other: an instance satisfying the tested property always yields true,
/// while an instance whose universality index falls below 1 - eps yields
/// false with probability at least 3/4. A returned false therefore
/// certifies non-universality, and comes with a witness word.
///
/// The deterministic counterpart exists only for unary alphabets
/// (pax_unary_univ); for larger alphabets randomization is required.

/// Cap applied to the tolerance of prax_univ. Any value below 1/5 keeps
/// the error analysis valid; 1/6 is the default.
inline constexpr double kTractableEpsCap = 1.0 / 6.0;

/// Default bound on the unary-magnitude length argument of
/// prax_maxlen_univ, keeping runtime polynomial in the written input.
inline constexpr std::int64_t kDefaultMaxlenBound = 1'000'000;

/// ceil(1/eps^2): the trial count of the uniform-distribution algorithms.
std::int64_t trials_for_uniform(double eps);

/// ceil(5/(e - 5 e^2)^2) with e = min(eps, kTractableEpsCap): the trial
/// count of the tractable-distribution algorithm.
std::int64_t trials_for_tractable(double eps);

/// Chebyshev bound on Pr[Cnt/n >= p] when the true index is g < p:
/// 1/(4 n (p-g)^2).
double chebyshev_bound(std::int64_t n, double gap);

/// Length marginal of the uniform distribution on Sigma^{<= ell}:
/// weight s^k / (1 + s + ... + s^ell) for each k. Computed top-down so
/// large ell cannot overflow.
std::vector<double> maxlen_length_weights(Symbol alphabet_size, std::int64_t ell);

/// Chernoff-style bound exp(-n eps^2/2) + exp(-n eps^2/3) on the
/// estimation error probability. Kept for comparison only: the Chebyshev
/// route gives the smaller bound at the trial counts used here, so no
/// trial sizing is derived from this formula.
double chernoff_error_bound(std::int64_t n, double eps);

/// Outcome of one estimation or decision run.
struct EstimateReport {
    /// Decision verdict, or an index estimate in [0,1] for the estimators.
    std::variant<bool, double> verdict;
    std::int64_t trials = 0;
    std::optional<std::int64_t> cutoff;   // M, when a truncation was used
    std::uint64_t seed = 0;
    std::optional<Word> witness;          // rejected word, when verdict is false
    std::int64_t words_sampled = 0;
    std::int64_t none_outcomes = 0;
    std::int64_t longest_word = 0;

    bool verdict_bool() const { return std::get<bool>(verdict); }
    double verdict_index() const { return std::get<double>(verdict); }
};

/// Draws n words from W and returns the accepted fraction; its expectation
/// is the universality index W(L(a)).
double ui_estim(const WordDistribution& W, const Nfa& a, std::int64_t n, RngStream& rng);

/// Truncated variant: draws n samples from the augmented distribution W^M
/// and counts "none" outcomes as well as accepted words; the expectation
/// is W(Sigma^{>M}) + W(Sigma^{<=M} cap L(a)).
double ui_estim_ml(const WordDistribution& W, const Nfa& a, std::int64_t n,
                   std::int64_t M, RngStream& rng);

/// Is L(b) a subset of L(a)? Exact-true / probabilistic-false relative to
/// the uniform distribution on L(b). n = ceil(1/eps^2) uniform draws from
/// L(b); rejects on the first sampled word outside L(a).
EstimateReport prax_adfa_subset_nfa(const Nfa& a, const AdfaCertificate& b, double eps,
                                    RngStream& rng);

/// Block NFA universality relative to the uniform distribution on the
/// block's word length. Propagates certify_block failures.
EstimateReport prax_block_univ(const Nfa& a, double eps, RngStream& rng);

/// Universality over all words of length at most ell, relative to the
/// uniform distribution on Sigma^{<= ell}: lengths are drawn with weight
/// s^k / (1 + s + ... + s^ell), then a uniform word of that length.
/// `ell` is validated against `ell_bound` (the argument is unary-magnitude:
/// runtime is linear in ell).
EstimateReport prax_maxlen_univ(const Nfa& a, std::int64_t ell, double eps, RngStream& rng,
                                std::int64_t ell_bound = kDefaultMaxlenBound);

/// NFA universality relative to the length-based word distribution of a
/// tractable length distribution L. Tolerance is capped at
/// kTractableEpsCap; n = trials_for_tractable(eps) samples are drawn from
/// the augmented distribution truncated at M = maxlen(L, eps'^2).
EstimateReport prax_univ(const Nfa& a, double eps, const LengthDistribution& L,
                         RngStream& rng);

/// Deterministic approximation for unary NFAs: accepts iff every word
/// 0^ell with ell <= maxlen(L, eps) is accepted. Universal instances give
/// true; instances with index below 1 - eps give false. Throws InputError
/// unless the alphabet size is 1 (no deterministic analogue exists for
/// larger alphabets).
bool pax_unary_univ(const Nfa& a, double eps, const LengthDistribution& L);

/// Runs `decision` up to k times, stopping at the first false. When the
/// instance lies outside the eps-relaxed set, a true verdict survives all
/// k rounds with probability below 1/4^k. Repetitions run sequentially on
/// the caller's stream, so k = 1 is the base invocation itself.
bool amplify(const std::function<bool()>& decision, int k);

/// How universality is tested inside prax_emptiness.
struct EmptinessBlockMode {
    std::int64_t word_length;   // uniform distribution on Sigma^ell
};
struct EmptinessTractableMode {
    LengthDistribution length;
};
using EmptinessMode = std::variant<EmptinessBlockMode, EmptinessTractableMode>;

/// Is the intersection of the given DFA languages eps-empty? Builds the
/// union NFA of the complements and tests it for (1-eps)-universality:
/// the intersection has probability at most eps exactly when that union
/// covers all but an eps fraction. A false verdict carries a witness word
/// lying in every input language.
EstimateReport prax_emptiness(std::span<const Dfa> ds, double eps,
                              const EmptinessMode& mode, RngStream& rng);

} // namespace prax
