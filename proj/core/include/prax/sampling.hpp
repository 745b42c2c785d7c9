#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prax/automata.hpp"
#include "prax/distributions.hpp"

namespace prax {

/// Deterministic counter-based pseudorandom stream. Identical seeds
/// reproduce identical sample sequences; split() derives a stream whose
/// output is unrelated to the parent's subsequent output. Not
/// cryptographic.
///
/// A stream must not be shared between concurrent callers; split one
/// stream per thread instead.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53 random bits.
    double next_double();

    /// Uniform in [0, bound); unbiased by rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform in [0, bound); unbiased by rejection on 64-bit chunks.
    BigInt next_below_big(const BigInt& bound);

    RngStream split();

private:
    std::uint64_t seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Returns 0 with probability p and 1 with probability 1-p.
/// Throws InputError unless 0 <= p <= 1.
int toss_coin(double p, RngStream& rng);

/// Uniformly selected word from the s^ell words of length ell; O(ell).
Word uselect(Symbol alphabet_size, std::int64_t ell, RngStream& rng);

/// The sequential coin-toss parameters behind select_fin: params[i] is the
/// probability that toss i returns outcome i given all earlier tosses
/// declined. Exposed for inspection; select_fin uses exactly these.
std::vector<double> selection_coin_params(std::span<const double> probs);

/// Selects index i with probability probs[i] by up to n-1 sequential coin
/// tosses with p1 = D(x1) and p_{i+1} = D(x_{i+1}) / ((1-p1)...(1-p_i));
/// O(n). The last outcome absorbs any residual mass, and denominators are
/// floored at 1e-15 so near-exhausted tails cannot blow up a division.
/// Throws InputError if a probability is negative or the sum deviates from
/// 1 by more than 1e-9.
std::size_t select_fin(std::span<const double> probs, RngStream& rng);

/// Per-state accepting-path counts of an acyclic DFA: counts[q] = number
/// of words leading from the start state to q, and total = sum over final
/// states = |L(B)| exactly.
struct PathCountTable {
    std::vector<BigInt> counts;   // indexed by state id; 0 for unreachable states
    BigInt total = 0;
};

/// Exact big-integer path counts via the topological recurrence
/// N(start) = 1, N(q) = sum of N(p) over transitions (p, sigma, q).
PathCountTable count_paths(const AdfaCertificate& B);

/// The word of rank r in L(B), for r in [0, total): picks the final state
/// by cumulative count, then walks transitions backwards, resolving each
/// step by cumulative predecessor counts. A bijection from ranks onto
/// L(B).
Word adfa_unrank(const AdfaCertificate& B, const PathCountTable& T, const BigInt& r);

/// Uniform sample from L(B): draws a uniform rank below T.total and
/// unranks it, so every accepted word has probability exactly 1/|L(B)|.
/// Throws EmptyLanguageError when the language is empty.
Word adfa_uselect(const AdfaCertificate& B, const PathCountTable& T, RngStream& rng);

/// Exact sample from the length distribution itself.
std::int64_t sample_length(const LengthDistribution& L, RngStream& rng);

/// Exact sample w <- W. For a length-based W this selects a length and
/// then a uniform word of that length; for a uniform-finite W it samples
/// the acceptor's language uniformly (the table is rebuilt per call; use
/// count_paths + adfa_uselect directly for bulk draws).
Word sample_word(const WordDistribution& W, RngStream& rng);

/// Sample from the augmented distribution W^M: a word of length <= M, or
/// none (the "bottom" outcome) with the tail probability.
AugmentedSample sample_augmented(const WordDistribution& W, std::int64_t M, RngStream& rng);

} // namespace prax
