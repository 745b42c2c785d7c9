#include "prax/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace prax {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kKeyTag = 0x7E46A3C0D9B15E2FULL;
constexpr std::uint64_t kSplitTag = 0xC2B2AE3D27D4EB4FULL;

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

constexpr double kMinDenominator = 1e-15;

} // namespace

RngStream::RngStream(std::uint64_t seed)
    : seed_(seed), key_(mix64(seed ^ kKeyTag)) {}

std::uint64_t RngStream::next_u64() { return mix64(key_ + ++counter_ * kGolden); }

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    if (bound == 0) throw InputError("next_below needs a positive bound");
    if (bound == 1) return 0;
    const std::uint64_t threshold = -bound % bound;   // 2^64 mod bound
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r < threshold);
    return r % bound;
}

BigInt RngStream::next_below_big(const BigInt& bound) {
    if (bound <= 0) throw InputError("next_below_big needs a positive bound");
    if (bound == 1) return 0;
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned chunks = (bits + 63) / 64;
    const unsigned top_bits = bits - (chunks - 1) * 64;
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    BigInt r;
    do {
        r = 0;
        for (unsigned i = 0; i < chunks; ++i) {
            std::uint64_t w = next_u64();
            if (i == 0) w &= top_mask;
            r <<= 64;
            r |= w;
        }
        // The shift layout above puts the masked chunk on top.
    } while (r >= bound);
    return r;
}

RngStream RngStream::split() { return RngStream(next_u64() ^ kSplitTag); }

int toss_coin(double p, RngStream& rng) {
    if (!(p >= 0.0) || !(p <= 1.0)) throw InputError("coin bias must lie in [0,1]");
    return rng.next_double() < p ? 0 : 1;
}

Word uselect(Symbol alphabet_size, std::int64_t ell, RngStream& rng) {
    if (alphabet_size < 1) throw InputError("alphabet size must be at least 1");
    if (ell < 0) throw InputError("word length must be >= 0");
    Word w(static_cast<std::size_t>(ell));
    if (alphabet_size == 1) return w;
    for (auto& c : w) c = static_cast<Symbol>(rng.next_below(alphabet_size));
    return w;
}

std::vector<double> selection_coin_params(std::span<const double> probs) {
    std::vector<double> params;
    if (probs.size() <= 1) return params;
    params.reserve(probs.size() - 1);
    double remaining = 1.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        double p = probs[i] / std::max(remaining, kMinDenominator);
        p = std::clamp(p, 0.0, 1.0);
        params.push_back(p);
        remaining *= 1.0 - p;
    }
    return params;
}

std::size_t select_fin(std::span<const double> probs, RngStream& rng) {
    if (probs.empty()) throw InputError("select_fin needs at least one outcome");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw InputError("select_fin probabilities must be >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InputError("select_fin probabilities sum to " + std::to_string(sum));
    const std::vector<double> params = selection_coin_params(probs);
    for (std::size_t i = 0; i < params.size(); ++i)
        if (toss_coin(params[i], rng) == 0) return i;
    return probs.size() - 1;   // absorbs residual mass
}

PathCountTable count_paths(const AdfaCertificate& B) {
    const Dfa& d = B.dfa;
    PathCountTable table;
    table.counts.assign(d.num_states(), BigInt(0));
    std::vector<std::vector<State>> pre(d.num_states());
    for (const Transition& t : d.transitions()) pre[t.to].push_back(t.from);
    // topo_order lists exactly the reachable states, sources first, so
    // every predecessor count is ready when needed.
    for (State q : B.topo_order) {
        BigInt n = (q == d.start_state()) ? 1 : 0;
        for (State p : pre[q]) n += table.counts[p];
        table.counts[q] = std::move(n);
    }
    for (State q : B.topo_order)
        if (d.is_final(q)) table.total += table.counts[q];
    return table;
}

Word adfa_unrank(const AdfaCertificate& B, const PathCountTable& T, const BigInt& r) {
    if (r < 0 || r >= T.total) throw InputError("rank outside [0, |L|)");
    const Dfa& d = B.dfa;
    // Final states in ascending id order give the canonical rank layout.
    BigInt rest = r;
    State q = d.num_states();
    for (State f : d.final_states()) {
        if (T.counts[f] == 0) continue;   // unreachable final
        if (rest < T.counts[f]) {
            q = f;
            break;
        }
        rest -= T.counts[f];
    }

    std::vector<std::vector<std::pair<State, Symbol>>> pre(d.num_states());
    for (const Transition& t : d.transitions())
        if (T.counts[t.from] > 0) pre[t.to].push_back({t.from, t.symbol});
    for (auto& v : pre) std::sort(v.begin(), v.end());

    Word reversed;
    while (q != d.start_state()) {
        bool advanced = false;
        for (auto [p, c] : pre[q]) {
            if (rest < T.counts[p]) {
                reversed.push_back(c);
                q = p;
                advanced = true;
                break;
            }
            rest -= T.counts[p];
        }
        if (!advanced) throw Error("path count table inconsistent with automaton");
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

Word adfa_uselect(const AdfaCertificate& B, const PathCountTable& T, RngStream& rng) {
    if (T.total < 1) throw EmptyLanguageError("acyclic DFA accepts no word");
    return adfa_unrank(B, T, rng.next_below_big(T.total));
}

std::int64_t sample_length(const LengthDistribution& L, RngStream& rng) {
    switch (L.family()) {
        case LengthDistribution::Family::Uniform:
            return static_cast<std::int64_t>(
                rng.next_below(static_cast<std::uint64_t>(L.uniform_span())));
        case LengthDistribution::Family::Lambert: {
            // Geometric via repeated coin tosses; exact, coins only.
            const double stop = 1.0 - 1.0 / L.lambert_base();
            std::int64_t n = L.displacement();
            while (toss_coin(stop, rng) != 0) ++n;
            return n;
        }
        case LengthDistribution::Family::Dirichlet: {
            // Inverse-CDF walk. The guard stops once the remaining mass is
            // below representable resolution (u is a 53-bit uniform).
            const double u = rng.next_double();
            double cum = 0.0;
            std::int64_t n = L.displacement();
            while (true) {
                cum += length_mass(L, n);
                if (u < cum || 1.0 - cum < 1e-15) return n;
                ++n;
            }
        }
    }
    return 0;
}

Word sample_word(const WordDistribution& W, RngStream& rng) {
    if (W.is_length_based())
        return uselect(W.alphabet_size(), sample_length(W.length_distribution(), rng), rng);
    PathCountTable table = count_paths(W.acceptor());
    return adfa_uselect(W.acceptor(), table, rng);
}

AugmentedSample sample_augmented(const WordDistribution& W, std::int64_t M, RngStream& rng) {
    const AugmentedDistribution table = augment(W, M);
    std::vector<double> probs = table.length_mass;
    probs.push_back(table.none_mass);
    const std::size_t pick = select_fin(probs, rng);
    if (pick == probs.size() - 1) return std::nullopt;
    return uselect(W.alphabet_size(), static_cast<std::int64_t>(pick), rng);
}

} // namespace prax
