#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prax/automata.hpp"
#include "prax/errors.hpp"

namespace prax {

using BigInt = boost::multiprecision::cpp_int;

/// Riemann zeta evaluated as a partial sum with a certified remainder.
/// The partial sum runs to the smallest N whose integral remainder bound
/// 1/((t-1) N^(t-1)) is at most the requested tolerance; that bound is
/// stored as error_bound, so |value - zeta(t)| <= error_bound.
struct ZetaValue {
    double t = 0;
    double value = 0;
    double error_bound = 0;
};

/// Throws InputError unless t > 1 and tol > 0. Results are cached per
/// (t, tol); the cache is thread-safe.
ZetaValue zeta(double t, double tol);

/// Distribution on word lengths (nonnegative integers). Three families:
///
///   Uniform(M):        mass 1/M on lengths 0..M-1
///   Lambert(s', d):    mass (1-z) z^(n-d) for n >= d, with z = 1/s'
///   Dirichlet(t, d):   mass (n+1-d)^(-t) / zeta(t) for n >= d
///
/// The Lambert base s' is any real > 1, independent of the alphabet size.
/// Dirichlet needs t > 1; the expectation additionally needs t > 2.
class LengthDistribution {
public:
    enum class Family { Uniform, Lambert, Dirichlet };

    static LengthDistribution uniform(std::int64_t m);
    static LengthDistribution lambert(double base, std::int64_t displacement);
    static LengthDistribution dirichlet(double t, std::int64_t displacement);

    Family family() const { return family_; }
    std::int64_t uniform_span() const { return m_; }
    double lambert_base() const { return base_; }
    double dirichlet_exponent() const { return t_; }
    std::int64_t displacement() const { return displacement_; }

    /// Descriptor round-trip, e.g. "lambert:base=2,d=0".
    std::string descriptor() const;

private:
    LengthDistribution() = default;
    Family family_ = Family::Uniform;
    std::int64_t m_ = 1;            // Uniform span
    double base_ = 2.0;             // Lambert base s' (> 1)
    double t_ = 3.0;                // Dirichlet exponent (> 1)
    std::int64_t displacement_ = 0; // Lambert/Dirichlet displacement d
};

/// Probability that the length equals n; exactly 0 outside the support.
double length_mass(const LengthDistribution& L, std::int64_t n);

/// Probability that the length exceeds n (closed form).
double length_tail(const LengthDistribution& L, std::int64_t n);

/// Closed-form expected length. Throws InfiniteExpectationError for
/// Dirichlet with t <= 2.
double expected_length(const LengthDistribution& L);

/// Smallest cutoff M satisfying the family's sufficient tail bound, so
/// that length_tail(L, M) <= eps:
///
///   Uniform(M0)  -> M0 - 1
///   Lambert      -> ceil(log_{s'}(1/eps)) + d - 1, clamped to >= 0
///   Dirichlet    -> ceil((1/eps)^(1/(t-1))) + d - 1
///
/// This is the smallest integer satisfying the *sufficient* bound, not
/// necessarily the smallest M with tail <= eps. Throws InputError unless
/// 0 < eps < 1.
std::int64_t maxlen(const LengthDistribution& L, double eps);

/// Pointwise length probability; alias of length_mass with the
/// polynomial-time tractability contract.
double probd(const LengthDistribution& L, std::int64_t m);

/// Distribution on words: either spread a length distribution uniformly
/// over each length class (word probability = mass(|w|) / s^|w|), or the
/// uniform distribution on the finite language of an acyclic DFA.
class WordDistribution {
public:
    static WordDistribution length_based(LengthDistribution length, Symbol alphabet_size);
    /// `total_count` must equal |L(acceptor)| exactly (see count_paths).
    static WordDistribution uniform_finite(AdfaCertificate acceptor, BigInt total_count);

    bool is_length_based() const { return length_.has_value(); }
    Symbol alphabet_size() const { return alphabet_size_; }
    const LengthDistribution& length_distribution() const;
    const AdfaCertificate& acceptor() const;
    const BigInt& total_count() const { return total_count_; }

    double word_prob(const Word& w) const;

private:
    WordDistribution() = default;
    Symbol alphabet_size_ = 1;
    std::optional<LengthDistribution> length_;
    std::optional<AdfaCertificate> acceptor_;
    BigInt total_count_ = 0;
};

double word_prob(const WordDistribution& W, const Word& w);

/// An augmented sample: a word of length at most the cutoff, or the
/// distinguished outcome "none".
using AugmentedSample = std::optional<Word>;

/// Finite outcome table of a length-based word distribution truncated at
/// cutoff M: the length masses 0..M plus the tail mass on "none".
struct AugmentedDistribution {
    std::vector<double> length_mass;  // index = length, size M+1
    double none_mass = 0;

    std::int64_t cutoff() const {
        return static_cast<std::int64_t>(length_mass.size()) - 1;
    }
};

/// Builds the truncated outcome table; entries sum to 1 within 1e-12.
/// Throws InputError if W is not length-based.
AugmentedDistribution augment(const WordDistribution& W, std::int64_t M);

/// Parses a CLI distribution descriptor:
///   uniform:M=<int> | lambert:base=<real>,d=<int> | dirichlet:t=<real>,d=<int>
/// Errors name the offending field.
LengthDistribution parse_length_distribution(const std::string& descriptor);

} // namespace prax
