#include "prax/reduction.hpp"

#include <string>
#include <utility>
#include <vector>

namespace prax {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

} // namespace

DeltaBits::DeltaBits(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ <= 0) throw InputError("threshold denominator must be positive");
    if (num_ <= 0 || num_ >= den_) throw InputError("threshold must lie strictly in (0,1)");
    BigInt g = gcd_big(num_, den_);
    num_ /= g;
    den_ /= g;
    // Dyadic iff the reduced denominator is a power of two.
    BigInt d = den_;
    std::int64_t exponent = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++exponent;
    }
    if (d == 1) {
        is_dyadic_ = true;
        dyadic_exponent_ = exponent;
    }
}

int DeltaBits::bit(std::int64_t p) const {
    if (p < 1) throw InputError("bit positions start at 1");
    // p-th bit of num/den: floor(num * 2^p / den) mod 2.
    BigInt shifted = num_ << static_cast<unsigned>(p);
    return static_cast<int>((shifted / den_) % 2);
}

BigInt DeltaBits::truncated_numerator(std::int64_t p) const {
    if (p < 1) throw InputError("bit positions start at 1");
    return (num_ << static_cast<unsigned>(p)) / den_;
}

const BigInt& DeltaBits::dyadic_numerator() const {
    if (!is_dyadic_) throw InputError("threshold is not dyadic");
    return num_;
}

std::int64_t DeltaBits::dyadic_exponent() const {
    if (!is_dyadic_) throw InputError("threshold is not dyadic");
    return dyadic_exponent_;
}

std::int64_t first_one_position(const DeltaBits& delta, std::int64_t bound) {
    BigInt rest = delta.numerator();
    for (std::int64_t p = 1; p <= bound; ++p) {
        rest <<= 1;
        if (rest >= delta.denominator()) return p;
    }
    throw InputError("threshold has no 1 bit within " + std::to_string(bound) +
                     " positions; too small to reduce");
}

Nfa build_mk_bnfa(const BigInt& m_k, std::int64_t k) {
    if (k < 1) throw InputError("gadget word length must be >= 1");
    if (m_k < 0) throw InputError("word count offset must be >= 0");
    if (m_k + 1 > BigInt(1) << static_cast<unsigned>(k))
        throw InputError("cannot fit " + m_k.str() + " + 1 words into length " +
                         std::to_string(k));

    // Shared endpoints: state 0 = start, state 1 = final.
    const State start = 0, final_state = 1;
    State next_state = 2;
    std::vector<Transition> transitions;

    // One straight branch accepting a fixed pattern over positions
    // 0..k-1, where pattern symbol kBoth means both 0 and 1.
    constexpr Symbol kBoth = 2;
    auto add_branch = [&](auto&& symbol_at) {
        State prev = start;
        for (std::int64_t pos = 0; pos < k; ++pos) {
            State target = (pos == k - 1) ? final_state : next_state++;
            Symbol want = symbol_at(pos);
            if (want == kBoth) {
                transitions.push_back({prev, 0, target});
                transitions.push_back({prev, 1, target});
            } else {
                transitions.push_back({prev, want, target});
            }
            prev = target;
        }
    };

    // The branch for bit position c: c free symbols, marker 0, then 1s.
    for (std::int64_t c = 0; c < k; ++c) {
        if (boost::multiprecision::bit_test(m_k, static_cast<unsigned>(c)))
            add_branch([c](std::int64_t pos) -> Symbol {
                if (pos < c) return kBoth;
                return pos == c ? 0 : 1;
            });
    }
    // The all-ones word.
    add_branch([](std::int64_t) -> Symbol { return 1; });

    return Nfa(2, next_state, {start}, {final_state}, std::move(transitions));
}

ReductionResult reduce_to_threshold(const BlockCertificate& b, const DeltaBits& delta) {
    if (b.nfa.alphabet_size() != 2)
        throw InputError("threshold reduction needs a binary block NFA");
    if (b.word_length < 1)
        throw InputError("threshold reduction needs word length >= 1");
    const std::int64_t ell = b.word_length;

    std::int64_t k;
    BigInt m_k;
    if (delta.is_dyadic()) {
        // delta = m / 2^k exactly: a gadget of exactly m words suffices.
        k = delta.dyadic_exponent();
        m_k = delta.dyadic_numerator() - 1;
    } else {
        const std::int64_t p1 = first_one_position(delta);
        k = p1 + ell;
        m_k = delta.truncated_numerator(k);
        // Both bounds follow from b_{p1} = 1 and the expansion being
        // non-terminating.
        if (m_k < BigInt(1) << static_cast<unsigned>(ell) ||
            m_k >= BigInt(1) << static_cast<unsigned>(k))
            throw Error("truncated numerator fell outside [2^ell, 2^k)");
    }
    const Nfa gadget = build_mk_bnfa(m_k, k);

    // Concatenate: reroute gadget transitions entering its final state to
    // every start state of b; drop the gadget final, append b's states.
    // The final state has no outgoing transitions, so after rerouting it
    // never appears and its id can be compacted away.
    const State gadget_final = gadget.final_states().front();
    auto relabel_gadget = [&](State q) { return q < gadget_final ? q : q - 1; };
    const State gadget_states = gadget.num_states() - 1;
    const State offset = gadget_states;

    std::vector<Transition> transitions;
    transitions.reserve(gadget.num_transitions() + b.nfa.num_transitions());
    for (const Transition& t : gadget.transitions()) {
        if (t.to == gadget_final) {
            for (State bs : b.nfa.start_states())
                transitions.push_back({relabel_gadget(t.from), t.symbol, bs + offset});
        } else {
            transitions.push_back({relabel_gadget(t.from), t.symbol, relabel_gadget(t.to)});
        }
    }
    for (const Transition& t : b.nfa.transitions())
        transitions.push_back({t.from + offset, t.symbol, t.to + offset});

    std::vector<State> start;
    for (State q : gadget.start_states()) start.push_back(relabel_gadget(q));
    std::vector<State> finals;
    for (State q : b.nfa.final_states()) finals.push_back(q + offset);

    ReductionResult out{
        Nfa(2, gadget_states + b.nfa.num_states(), std::move(start), std::move(finals),
            std::move(transitions)),
        k, k + ell, m_k, delta.is_dyadic()};
    return out;
}

} // namespace prax
