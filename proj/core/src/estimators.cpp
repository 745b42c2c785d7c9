#include "prax/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace prax {

namespace {

// ceil with a nudge: the trial-count formulas hit exact integers (1/0.02^2
// = 2500, 5/(1/6 - 5/36)^2 = 6480) that float evaluation may overshoot by
// a few ulps.
std::int64_t ceil_trials(double x) {
    return static_cast<std::int64_t>(std::ceil(x - std::max(1e-9, x * 1e-12)));
}

void require_eps(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw InputError("tolerance must lie in (0,1)");
}

void require_alphabet_match(const Nfa& a, Symbol s) {
    if (a.alphabet_size() != s)
        throw InputError("automaton alphabet size " + std::to_string(a.alphabet_size()) +
                         " does not match the distribution's " + std::to_string(s));
}

void note_word(EstimateReport& report, const Word& w) {
    ++report.words_sampled;
    report.longest_word = std::max(report.longest_word,
                                   static_cast<std::int64_t>(w.size()));
}

} // namespace

std::int64_t trials_for_uniform(double eps) {
    require_eps(eps);
    return ceil_trials(1.0 / (eps * eps));
}

std::int64_t trials_for_tractable(double eps) {
    require_eps(eps);
    const double e = std::min(eps, kTractableEpsCap);
    const double denom = e - 5.0 * e * e;
    return ceil_trials(5.0 / (denom * denom));
}

double chebyshev_bound(std::int64_t n, double gap) {
    if (n < 1 || !(gap > 0.0)) throw InputError("chebyshev_bound needs n >= 1, gap > 0");
    return 1.0 / (4.0 * static_cast<double>(n) * gap * gap);
}

double chernoff_error_bound(std::int64_t n, double eps) {
    if (n < 1 || !(eps > 0.0)) throw InputError("chernoff_error_bound needs n >= 1, eps > 0");
    const double ne2 = static_cast<double>(n) * eps * eps;
    return std::exp(-ne2 / 2.0) + std::exp(-ne2 / 3.0);
}

double ui_estim(const WordDistribution& W, const Nfa& a, std::int64_t n, RngStream& rng) {
    if (n < 1) throw InputError("trial count must be >= 1");
    require_alphabet_match(a, W.alphabet_size());
    std::int64_t cnt = 0;
    if (W.is_length_based()) {
        for (std::int64_t i = 0; i < n; ++i)
            if (membership(a, sample_word(W, rng))) ++cnt;
    } else {
        const PathCountTable table = count_paths(W.acceptor());
        if (table.total < 1) throw EmptyLanguageError("word distribution over empty language");
        for (std::int64_t i = 0; i < n; ++i)
            if (membership(a, adfa_uselect(W.acceptor(), table, rng))) ++cnt;
    }
    return static_cast<double>(cnt) / static_cast<double>(n);
}

double ui_estim_ml(const WordDistribution& W, const Nfa& a, std::int64_t n,
                   std::int64_t M, RngStream& rng) {
    if (n < 1) throw InputError("trial count must be >= 1");
    require_alphabet_match(a, W.alphabet_size());
    const AugmentedDistribution table = augment(W, M);
    std::vector<double> probs = table.length_mass;
    probs.push_back(table.none_mass);
    std::int64_t cnt = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t pick = select_fin(probs, rng);
        if (pick == probs.size() - 1) {
            ++cnt;   // the "none" outcome counts as covered
            continue;
        }
        Word w = uselect(W.alphabet_size(), static_cast<std::int64_t>(pick), rng);
        if (membership(a, w)) ++cnt;
    }
    return static_cast<double>(cnt) / static_cast<double>(n);
}

EstimateReport prax_adfa_subset_nfa(const Nfa& a, const AdfaCertificate& b, double eps,
                                    RngStream& rng) {
    require_eps(eps);
    require_alphabet_match(a, b.dfa.alphabet_size());
    const PathCountTable table = count_paths(b);
    if (table.total < 1) throw EmptyLanguageError("acyclic DFA accepts no word");

    EstimateReport report;
    report.trials = trials_for_uniform(eps);
    report.seed = rng.seed();
    for (std::int64_t i = 0; i < report.trials; ++i) {
        Word w = adfa_uselect(b, table, rng);
        note_word(report, w);
        if (!membership(a, w)) {
            report.verdict = false;
            report.witness = std::move(w);
            return report;
        }
    }
    report.verdict = true;
    return report;
}

namespace {

// Shared by prax_block_univ and the block mode of prax_emptiness:
// universality of `a` relative to the uniform distribution on words of one
// fixed length.
EstimateReport prax_fixed_length_univ(const Nfa& a, std::int64_t ell, double eps,
                                      RngStream& rng) {
    EstimateReport report;
    report.trials = trials_for_uniform(eps);
    report.seed = rng.seed();
    for (std::int64_t i = 0; i < report.trials; ++i) {
        Word w = uselect(a.alphabet_size(), ell, rng);
        note_word(report, w);
        if (!membership(a, w)) {
            report.verdict = false;
            report.witness = std::move(w);
            return report;
        }
    }
    report.verdict = true;
    return report;
}

} // namespace

EstimateReport prax_block_univ(const Nfa& a, double eps, RngStream& rng) {
    require_eps(eps);
    const BlockCertificate cert = certify_block(a);
    return prax_fixed_length_univ(a, cert.word_length, eps, rng);
}

std::vector<double> maxlen_length_weights(Symbol alphabet_size, std::int64_t ell) {
    if (alphabet_size < 1) throw InputError("alphabet size must be at least 1");
    if (ell < 0) throw InputError("maximum length must be >= 0");
    std::vector<double> weights(static_cast<std::size_t>(ell) + 1, 0.0);
    if (alphabet_size == 1) {
        std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(ell + 1));
        return weights;
    }
    const double s = static_cast<double>(alphabet_size);
    // Top weight s^ell (s-1) / (s^{ell+1} - 1), then divide downwards;
    // weights below double resolution vanish, which is where their true
    // probability lives anyway.
    double w = (1.0 - 1.0 / s) / (1.0 - std::pow(s, -static_cast<double>(ell + 1)));
    for (std::int64_t k = ell; k >= 0; --k) {
        weights[static_cast<std::size_t>(k)] = w;
        w /= s;
    }
    return weights;
}

EstimateReport prax_maxlen_univ(const Nfa& a, std::int64_t ell, double eps, RngStream& rng,
                                std::int64_t ell_bound) {
    require_eps(eps);
    if (ell < 0) throw InputError("maximum length must be >= 0");
    if (ell > ell_bound)
        throw InputError("maximum length " + std::to_string(ell) +
                         " exceeds the configured bound " + std::to_string(ell_bound));
    const std::vector<double> weights = maxlen_length_weights(a.alphabet_size(), ell);

    EstimateReport report;
    report.trials = trials_for_uniform(eps);
    report.seed = rng.seed();
    report.cutoff = ell;
    for (std::int64_t i = 0; i < report.trials; ++i) {
        const std::size_t k = select_fin(weights, rng);
        Word w = uselect(a.alphabet_size(), static_cast<std::int64_t>(k), rng);
        note_word(report, w);
        if (!membership(a, w)) {
            report.verdict = false;
            report.witness = std::move(w);
            return report;
        }
    }
    report.verdict = true;
    return report;
}

EstimateReport prax_univ(const Nfa& a, double eps, const LengthDistribution& L,
                         RngStream& rng) {
    require_eps(eps);
    const double eps_capped = std::min(eps, kTractableEpsCap);
    const std::int64_t n = trials_for_tractable(eps);
    const std::int64_t M = maxlen(L, eps_capped * eps_capped);

    const WordDistribution W = WordDistribution::length_based(L, a.alphabet_size());
    const AugmentedDistribution table = augment(W, M);

    // Error-analysis preconditions; cannot fail for the shipped families.
    const double tail = table.none_mass;
    if (tail > eps_capped * eps_capped + 1e-12)
        throw Error("maxlen returned a cutoff with tail above eps^2");
    if (tail > 0.0 && eps_capped / tail <= 5.0)
        throw Error("tail too heavy for the x = 5 error split");
    double direct_sum = 0.0;
    for (double p : table.length_mass) direct_sum += p;
    if (std::abs((1.0 - direct_sum) - tail) > 1e-9)
        throw Error("closed-form tail and summed residual disagree beyond 1e-9");

    std::vector<double> probs = table.length_mass;
    probs.push_back(tail);

    EstimateReport report;
    report.trials = n;
    report.seed = rng.seed();
    report.cutoff = M;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t pick = select_fin(probs, rng);
        if (pick == probs.size() - 1) {
            ++report.none_outcomes;
            continue;
        }
        Word w = uselect(a.alphabet_size(), static_cast<std::int64_t>(pick), rng);
        note_word(report, w);
        if (!membership(a, w)) {
            report.verdict = false;
            report.witness = std::move(w);
            return report;
        }
    }
    report.verdict = true;
    return report;
}

bool pax_unary_univ(const Nfa& a, double eps, const LengthDistribution& L) {
    require_eps(eps);
    if (a.alphabet_size() != 1)
        throw InputError("the deterministic approximation needs a unary alphabet");
    const std::int64_t M = maxlen(L, eps);
    // One frontier sweep answers membership of 0^ell for every ell <= M.
    std::vector<bool> cur(a.num_states(), false), nxt(a.num_states());
    for (State q : a.start_states()) cur[q] = true;
    for (std::int64_t ell = 0; ell <= M; ++ell) {
        bool accepted = false;
        for (State q = 0; q < a.num_states(); ++q)
            if (cur[q] && a.is_final(q)) accepted = true;
        if (!accepted) return false;
        std::fill(nxt.begin(), nxt.end(), false);
        for (State q = 0; q < a.num_states(); ++q)
            if (cur[q])
                for (State succ : a.post(q, 0)) nxt[succ] = true;
        cur.swap(nxt);
    }
    return true;
}

bool amplify(const std::function<bool()>& decision, int k) {
    if (k < 1) throw InputError("amplification needs k >= 1");
    for (int i = 0; i < k; ++i)
        if (!decision()) return false;
    return true;
}

EstimateReport prax_emptiness(std::span<const Dfa> ds, double eps,
                              const EmptinessMode& mode, RngStream& rng) {
    require_eps(eps);
    std::vector<Dfa> complements;
    complements.reserve(ds.size());
    for (const Dfa& d : ds) complements.push_back(complement_dfa(d));
    const Nfa unioned = union_nfa(complements);

    if (const auto* block = std::get_if<EmptinessBlockMode>(&mode)) {
        if (block->word_length < 0) throw InputError("block word length must be >= 0");
        return prax_fixed_length_univ(unioned, block->word_length, eps, rng);
    }
    return prax_univ(unioned, eps, std::get<EmptinessTractableMode>(mode).length, rng);
}

} // namespace prax
