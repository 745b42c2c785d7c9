#pragma once

#include <cstdint>

#include "prax/automata.hpp"
#include "prax/distributions.hpp"

namespace prax {

/// Binary-expansion view of an exact rational threshold in (0,1).
/// bit(p) is the p-th digit after the binary point (p >= 1), computed by
/// repeated doubling of the exact fraction, and truncated_numerator(p)
/// is m_p = b_1 2^(p-1) + ... + b_p, the numerator of the expansion cut
/// after p bits. For a non-dyadic value, m_p/2^p < delta < (1+m_p)/2^p at
/// every p.
class DeltaBits {
public:
    /// Requires 0 < numerator/denominator < 1.
    DeltaBits(BigInt numerator, BigInt denominator);

    int bit(std::int64_t p) const;
    BigInt truncated_numerator(std::int64_t p) const;

    /// True when the value equals m/2^k for some integers m, k.
    bool is_dyadic() const { return is_dyadic_; }
    /// Minimal m, k with value = m/2^k (dyadic values only).
    const BigInt& dyadic_numerator() const;
    std::int64_t dyadic_exponent() const;

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

private:
    BigInt num_, den_;   // reduced fraction
    bool is_dyadic_ = false;
    std::int64_t dyadic_exponent_ = 0;
};

inline constexpr std::int64_t kDefaultFirstBitBound = std::int64_t{1} << 20;

/// Position of the first 1 bit of delta; throws InputError if none appears
/// within `bound` positions (delta too small to handle).
std::int64_t first_one_position(const DeltaBits& delta,
                                std::int64_t bound = kDefaultFirstBitBound);

/// Block NFA over the binary alphabet accepting exactly 1 + m_k words of
/// length k, with a single start and a single final state, of size O(k^2).
///
/// For each 1 bit of m_k at position c (value 2^c) there is a straight
/// branch accepting Sigma^c 0 1^(k-c-1): c free symbols, a marker 0, then
/// all 1s. Distinct positions pin the marker 0 at distinct places, so the
/// branches are pairwise disjoint and contribute exactly m_k words; the
/// all-ones word 1^k contains no marker, so it is always fresh and serves
/// as the "+1".
/// Throws InputError unless 0 <= m_k <= 2^k - 1 and k >= 1.
Nfa build_mk_bnfa(const BigInt& m_k, std::int64_t k);

struct ReductionResult {
    Nfa nfa;                 // block NFA of word length k + ell
    std::int64_t k = 0;      // gadget word length
    std::int64_t word_length = 0;   // n = k + ell
    BigInt m_k = 0;          // the gadget accepts exactly 1 + m_k words
    bool dyadic = false;
};

/// Maps a binary block NFA b (word length ell >= 1) to a block NFA out
/// such that |L(b)| = 2^ell iff |L(out)| >= 2^n delta, where n is out's
/// word length. Non-dyadic delta: k = p1 + ell, gadget accepts 1 + m_k
/// words; dyadic delta = m/2^k: the gadget accepts exactly m words.
/// The gadget is concatenated with b by rerouting transitions into the
/// gadget's final state to b's start states; inputs are never mutated.
/// Throws InputError if b is not over the binary alphabet.
ReductionResult reduce_to_threshold(const BlockCertificate& b, const DeltaBits& delta);

} // namespace prax
