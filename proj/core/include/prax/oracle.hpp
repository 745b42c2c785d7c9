#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prax/automata.hpp"
#include "prax/distributions.hpp"

namespace prax {

/// Exact small-instance computations. These are desk-scale ground-truth
/// tools: they refuse (ResourceLimitError) rather than degrade when an
/// instance outgrows the configured budget.

inline constexpr std::size_t kDefaultSubsetLimit = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 20;

/// Encloses a universality index computed up to a length cutoff: the true
/// index lies in [lower, upper] and upper - lower equals the length
/// distribution's tail beyond the cutoff.
struct IndexInterval {
    double lower = 0;
    double upper = 0;
    std::int64_t cutoff = 0;
};

/// |L(a) intersected with the words of length n|, exactly. Determinizes on
/// the fly layer by layer, weighting each reachable state set by the
/// number of words leading to it, so lengths far beyond enumeration reach
/// stay exact. Throws ResourceLimitError if a layer exceeds subset_limit
/// distinct state sets.
BigInt count_per_length(const Nfa& a, std::int64_t n,
                        std::size_t subset_limit = kDefaultSubsetLimit);

/// Per-length counts for all lengths 0..n in one pass.
std::vector<BigInt> counts_up_to(const Nfa& a, std::int64_t n,
                                 std::size_t subset_limit = kDefaultSubsetLimit);

/// Universality index of a block NFA relative to the uniform distribution
/// on its word length: |L(a)| / s^ell. Propagates certify_block errors.
double exact_index_block(const Nfa& a, std::size_t subset_limit = kDefaultSubsetLimit);

/// Two-sided enclosure of the universality index of `a` relative to the
/// length-based word distribution of L, truncated at cutoff M:
/// lower = sum over n <= M of mass(n) |L(a) cap Sigma^n| / s^n,
/// upper = lower + tail(L, M).
IndexInterval exact_index_truncated(const Nfa& a, const LengthDistribution& L,
                                    std::int64_t M,
                                    std::size_t subset_limit = kDefaultSubsetLimit);

struct SubsetResult {
    bool is_subset = true;
    std::optional<Word> counterexample;   // first enumerated word outside L(a)
};

/// Enumerates L(b) in depth-first path order (symbols ascending) and tests
/// each word against `a`; stops at the first counterexample. Throws
/// ResourceLimitError after enum_limit words.
SubsetResult exact_subset(const AdfaCertificate& b, const Nfa& a,
                          std::size_t enum_limit = kDefaultEnumerationLimit);

} // namespace prax
