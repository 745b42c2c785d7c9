#include "prax/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace prax {

namespace {

using boost::multiprecision::cpp_rational;

// Reachable state sets packed as bit blocks, usable as hash keys.
struct SubsetKey {
    std::vector<std::uint64_t> blocks;

    bool operator==(const SubsetKey&) const = default;
};

struct SubsetKeyHash {
    std::size_t operator()(const SubsetKey& k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t b : k.blocks) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using Layer = std::unordered_map<SubsetKey, BigInt, SubsetKeyHash>;

bool subset_hits_finals(const SubsetKey& k, const Nfa& a) {
    bool hit = false;
    for (std::size_t i = 0; i < k.blocks.size() && !hit; ++i) {
        std::uint64_t b = k.blocks[i];
        while (b != 0) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(b));
            if (a.is_final(static_cast<State>(i * 64 + bit))) {
                hit = true;
                break;
            }
            b &= b - 1;
        }
    }
    return hit;
}

BigInt accepting_weight(const Layer& layer, const Nfa& a) {
    BigInt total = 0;
    for (const auto& [key, weight] : layer)
        if (subset_hits_finals(key, a)) total += weight;
    return total;
}

} // namespace

std::vector<BigInt> counts_up_to(const Nfa& a, std::int64_t n, std::size_t subset_limit) {
    if (n < 0) throw InputError("length must be >= 0");
    const std::size_t nblocks = (a.num_states() + 63) / 64;
    SubsetKey start{std::vector<std::uint64_t>(nblocks, 0)};
    for (State q : a.start_states()) start.blocks[q >> 6] |= std::uint64_t{1} << (q & 63);

    Layer layer;
    layer.emplace(std::move(start), BigInt(1));
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(accepting_weight(layer, a));
    for (std::int64_t step = 1; step <= n; ++step) {
        Layer next;
        for (const auto& [key, weight] : layer) {
            for (Symbol c = 0; c < a.alphabet_size(); ++c) {
                SubsetKey succ{std::vector<std::uint64_t>(nblocks, 0)};
                bool nonempty = false;
                for (std::size_t i = 0; i < nblocks; ++i) {
                    std::uint64_t b = key.blocks[i];
                    while (b != 0) {
                        unsigned bit = static_cast<unsigned>(std::countr_zero(b));
                        for (State q : a.post(static_cast<State>(i * 64 + bit), c)) {
                            succ.blocks[q >> 6] |= std::uint64_t{1} << (q & 63);
                            nonempty = true;
                        }
                        b &= b - 1;
                    }
                }
                if (!nonempty) continue;   // dead branch; contributes no words
                next[std::move(succ)] += weight;
                if (next.size() > subset_limit)
                    throw ResourceLimitError(
                        "per-length count exceeded the subset limit of " +
                        std::to_string(subset_limit) + " state sets");
            }
        }
        layer = std::move(next);
        out.push_back(accepting_weight(layer, a));
        if (layer.empty()) {
            // No live runs remain; all later counts are zero.
            out.resize(static_cast<std::size_t>(n) + 1, BigInt(0));
            break;
        }
    }
    return out;
}

BigInt count_per_length(const Nfa& a, std::int64_t n, std::size_t subset_limit) {
    return counts_up_to(a, n, subset_limit).back();
}

double exact_index_block(const Nfa& a, std::size_t subset_limit) {
    const BlockCertificate cert = certify_block(a);
    const std::int64_t ell = cert.word_length;
    BigInt count = count_per_length(cert.nfa, ell, subset_limit);
    BigInt space = boost::multiprecision::pow(BigInt(a.alphabet_size()),
                                              static_cast<unsigned>(ell));
    return cpp_rational(count, space).convert_to<double>();
}

IndexInterval exact_index_truncated(const Nfa& a, const LengthDistribution& L,
                                    std::int64_t M, std::size_t subset_limit) {
    if (M < 0) throw InputError("cutoff must be >= 0");
    const std::vector<BigInt> counts = counts_up_to(a, M, subset_limit);
    double lower = 0.0;
    BigInt space = 1;
    for (std::int64_t n = 0; n <= M; ++n) {
        const double mass = length_mass(L, n);
        if (mass > 0.0 && counts[static_cast<std::size_t>(n)] > 0)
            lower += mass * cpp_rational(counts[static_cast<std::size_t>(n)], space)
                                .convert_to<double>();
        space *= a.alphabet_size();
    }
    return IndexInterval{lower, lower + length_tail(L, M), M};
}

namespace {

bool enumerate_from(const AdfaCertificate& b, const Nfa& a, State q, Word& prefix,
                    std::size_t enum_limit, std::size_t& produced,
                    std::optional<Word>& counterexample) {
    const Dfa& d = b.dfa;
    if (d.is_final(q)) {
        if (++produced > enum_limit)
            throw ResourceLimitError("language enumeration exceeded " +
                                     std::to_string(enum_limit) + " words");
        if (!membership(a, prefix)) {
            counterexample = prefix;
            return false;
        }
    }
    for (Symbol c = 0; c < d.alphabet_size(); ++c) {
        for (State succ : d.post(q, c)) {
            prefix.push_back(c);
            bool keep_going =
                enumerate_from(b, a, succ, prefix, enum_limit, produced, counterexample);
            prefix.pop_back();
            if (!keep_going) return false;
        }
    }
    return true;
}

} // namespace

SubsetResult exact_subset(const AdfaCertificate& b, const Nfa& a, std::size_t enum_limit) {
    Word prefix;
    std::size_t produced = 0;
    SubsetResult result;
    std::optional<Word> counterexample;
    if (!enumerate_from(b, a, b.dfa.start_state(), prefix, enum_limit, produced,
                        counterexample)) {
        result.is_subset = false;
        result.counterexample = std::move(counterexample);
    }
    return result;
}

} // namespace prax
