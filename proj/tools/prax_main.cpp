// prax: approximate decision procedures for NFA universality and related
// problems, relative to uniform, Lambert and Dirichlet word distributions.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prax/automata.hpp"
#include "prax/automata_io.hpp"
#include "prax/distributions.hpp"
#include "prax/estimators.hpp"
#include "prax/oracle.hpp"
#include "prax/reduction.hpp"
#include "prax/sampling.hpp"

using nlohmann::json;

namespace {

struct Limits {
    std::size_t subset_limit = prax::kDefaultSubsetLimit;
    std::size_t enum_limit = prax::kDefaultEnumerationLimit;
    std::int64_t maxlen_bound = prax::kDefaultMaxlenBound;
};

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr) return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
        throw prax::InputError(std::string("environment variable ") + name +
                               " is not an integer: '" + v + "'");
    }
}

Limits read_limits() {
    Limits limits;
    limits.subset_limit = env_size("PRAX_SUBSET_LIMIT", limits.subset_limit);
    limits.enum_limit = env_size("PRAX_ENUM_LIMIT", limits.enum_limit);
    limits.maxlen_bound = static_cast<std::int64_t>(
        env_size("PRAX_MAXLEN_BOUND", static_cast<std::size_t>(limits.maxlen_bound)));
    return limits;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given) {
    if (given.has_value()) return *given;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

json report_json(const std::string& command, const prax::EstimateReport& r, double eps,
                 prax::Symbol alphabet_size) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["eps"] = eps;
    j["verdict"] = r.verdict_bool();
    j["n"] = r.trials;
    j["M"] = r.cutoff.has_value() ? json(*r.cutoff) : json(nullptr);
    j["seed"] = r.seed;
    j["witness"] = r.witness.has_value()
                       ? json(prax::format_word(*r.witness, alphabet_size))
                       : json(nullptr);
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int verdict_exit(bool verdict) { return verdict ? 0 : 1; }

std::string significant15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.15g", v);   // keep all 15 significant digits
    return buf;
}

prax::BigInt parse_big(const std::string& text, const char* what) {
    try {
        return prax::BigInt(text);
    } catch (const std::exception&) {
        throw prax::InputError(std::string("cannot parse ") + what + " '" + text + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Randomized and exact approximation tools for NFA universality"};
    app.require_subcommand(1);

    const Limits limits = read_limits();

    // ---- sample ----------------------------------------------------------
    auto* sample = app.add_subcommand(
        "sample", "Draw words from an augmented length-based distribution");
    std::string sample_dist;
    std::int64_t sample_cutoff = 0;
    std::int64_t sample_n = 1;
    std::optional<std::uint64_t> sample_seed;
    prax::Symbol sample_alphabet = 2;
    sample->add_option("--dist", sample_dist, "Distribution descriptor")->required();
    sample->add_option("--cutoff", sample_cutoff, "Length cutoff M")->required();
    sample->add_option("--n", sample_n, "Number of samples")->required();
    sample->add_option("--seed", sample_seed, "RNG seed (random if omitted)");
    sample->add_option("--alphabet", sample_alphabet, "Alphabet size (default 2)");

    // ---- prax-subset -----------------------------------------------------
    auto* subset = app.add_subcommand(
        "prax-subset", "Is the acyclic DFA's language included in the NFA's?");
    std::string subset_nfa, subset_adfa;
    double subset_eps = 0.1;
    std::optional<std::uint64_t> subset_seed;
    subset->add_option("--nfa", subset_nfa, "NFA file")->required();
    subset->add_option("--adfa", subset_adfa, "Acyclic DFA file")->required();
    subset->add_option("--eps", subset_eps, "Tolerance in (0,1)")->required();
    subset->add_option("--seed", subset_seed, "RNG seed (random if omitted)");

    // ---- prax-block ------------------------------------------------------
    auto* block = app.add_subcommand("prax-block",
                                     "Block NFA universality at its word length");
    std::string block_nfa;
    double block_eps = 0.1;
    std::optional<std::uint64_t> block_seed;
    block->add_option("--nfa", block_nfa, "Block NFA file")->required();
    block->add_option("--eps", block_eps, "Tolerance in (0,1)")->required();
    block->add_option("--seed", block_seed, "RNG seed (random if omitted)");

    // ---- prax-maxlen -----------------------------------------------------
    auto* maxlen_cmd = app.add_subcommand(
        "prax-maxlen", "Universality over all words up to a maximum length");
    std::string maxlen_nfa;
    std::int64_t maxlen_len = 0;
    double maxlen_eps = 0.1;
    std::optional<std::uint64_t> maxlen_seed;
    maxlen_cmd->add_option("--nfa", maxlen_nfa, "NFA file")->required();
    maxlen_cmd->add_option("--len", maxlen_len, "Maximum word length")->required();
    maxlen_cmd->add_option("--eps", maxlen_eps, "Tolerance in (0,1)")->required();
    maxlen_cmd->add_option("--seed", maxlen_seed, "RNG seed (random if omitted)");

    // ---- prax-univ -------------------------------------------------------
    auto* univ = app.add_subcommand(
        "prax-univ", "NFA universality relative to a tractable word distribution");
    std::string univ_nfa, univ_dist;
    double univ_eps = 0.1;
    std::optional<std::uint64_t> univ_seed;
    int univ_amplify = 1;
    univ->add_option("--nfa", univ_nfa, "NFA file")->required();
    univ->add_option("--dist", univ_dist, "Distribution descriptor")->required();
    univ->add_option("--eps", univ_eps, "Tolerance in (0,1)")->required();
    univ->add_option("--seed", univ_seed, "RNG seed (random if omitted)");
    univ->add_option("--amplify", univ_amplify, "Repetitions (wrong-true < 1/4^k)");

    // ---- pax-unary -------------------------------------------------------
    auto* pax = app.add_subcommand(
        "pax-unary", "Deterministic approximate universality for unary NFAs");
    std::string pax_nfa, pax_dist;
    double pax_eps = 0.1;
    pax->add_option("--nfa", pax_nfa, "Unary NFA file")->required();
    pax->add_option("--dist", pax_dist, "Distribution descriptor")->required();
    pax->add_option("--eps", pax_eps, "Tolerance in (0,1)")->required();

    // ---- emptiness -------------------------------------------------------
    auto* empt = app.add_subcommand(
        "emptiness", "Is the intersection of the DFA languages eps-empty?");
    std::string empt_dfas, empt_dist;
    double empt_eps = 0.1;
    std::optional<std::uint64_t> empt_seed;
    empt->add_option("--dfas", empt_dfas, "Comma-separated DFA files")->required();
    empt->add_option("--eps", empt_eps, "Tolerance in (0,1)")->required();
    empt->add_option("--dist", empt_dist, "Distribution descriptor")->required();
    empt->add_option("--seed", empt_seed, "RNG seed (random if omitted)");

    // ---- oracle ----------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Exact small-instance universality indices");
    std::string oracle_nfa, oracle_mode, oracle_dist;
    std::int64_t oracle_cutoff = 0;
    oracle_cmd->add_option("--nfa", oracle_nfa, "NFA file")->required();
    oracle_cmd->add_option("--mode", oracle_mode, "block | truncated")->required();
    oracle_cmd->add_option("--dist", oracle_dist, "Distribution (truncated mode)");
    oracle_cmd->add_option("--cutoff", oracle_cutoff, "Length cutoff (truncated mode)");

    // ---- reduce ----------------------------------------------------------
    auto* reduce_cmd = app.add_subcommand(
        "reduce", "Block universality to threshold-counting reduction");
    std::string reduce_bnfa, reduce_delta;
    reduce_cmd->add_option("--bnfa", reduce_bnfa, "Binary block NFA file")->required();
    reduce_cmd->add_option("--delta", reduce_delta, "Threshold as P/Q in (0,1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (sample->parsed()) {
        auto L = prax::parse_length_distribution(sample_dist);
        auto W = prax::WordDistribution::length_based(L, sample_alphabet);
        prax::RngStream rng(resolve_seed(sample_seed));
        std::cerr << "seed: " << rng.seed() << "\n";
        for (std::int64_t i = 0; i < sample_n; ++i) {
            prax::AugmentedSample s = prax::sample_augmented(W, sample_cutoff, rng);
            if (s.has_value())
                std::cout << prax::format_word(*s, sample_alphabet) << "\n";
            else
                std::cout << "⊥\n";
        }
        return 0;
    }

    if (subset->parsed()) {
        prax::Nfa a = prax::read_nfa_file(subset_nfa);
        prax::AdfaCertificate b = prax::certify_acyclic(prax::read_dfa_file(subset_adfa));
        prax::RngStream rng(resolve_seed(subset_seed));
        prax::EstimateReport r = prax::prax_adfa_subset_nfa(a, b, subset_eps, rng);
        emit(report_json("prax-subset", r, subset_eps, a.alphabet_size()));
        return verdict_exit(r.verdict_bool());
    }

    if (block->parsed()) {
        prax::Nfa a = prax::read_nfa_file(block_nfa);
        prax::RngStream rng(resolve_seed(block_seed));
        prax::EstimateReport r = prax::prax_block_univ(a, block_eps, rng);
        emit(report_json("prax-block", r, block_eps, a.alphabet_size()));
        return verdict_exit(r.verdict_bool());
    }

    if (maxlen_cmd->parsed()) {
        prax::Nfa a = prax::read_nfa_file(maxlen_nfa);
        prax::RngStream rng(resolve_seed(maxlen_seed));
        prax::EstimateReport r =
            prax::prax_maxlen_univ(a, maxlen_len, maxlen_eps, rng, limits.maxlen_bound);
        emit(report_json("prax-maxlen", r, maxlen_eps, a.alphabet_size()));
        return verdict_exit(r.verdict_bool());
    }

    if (univ->parsed()) {
        prax::Nfa a = prax::read_nfa_file(univ_nfa);
        auto L = prax::parse_length_distribution(univ_dist);
        prax::RngStream rng(resolve_seed(univ_seed));
        prax::EstimateReport last;
        last.verdict = true;
        const bool verdict = prax::amplify(
            [&] {
                last = prax::prax_univ(a, univ_eps, L, rng);
                return last.verdict_bool();
            },
            univ_amplify);
        last.seed = rng.seed();
        json j = report_json("prax-univ", last, univ_eps, a.alphabet_size());
        j["amplify"] = univ_amplify;
        emit(j);
        return verdict_exit(verdict);
    }

    if (pax->parsed()) {
        prax::Nfa a = prax::read_nfa_file(pax_nfa);
        auto L = prax::parse_length_distribution(pax_dist);
        const bool verdict = prax::pax_unary_univ(a, pax_eps, L);
        const std::int64_t M = prax::maxlen(L, pax_eps);
        json j;
        j["schema"] = 1;
        j["command"] = "pax-unary";
        j["eps"] = pax_eps;
        j["verdict"] = verdict;
        j["n"] = M + 1;   // words examined
        j["M"] = M;
        j["seed"] = nullptr;   // deterministic procedure
        j["witness"] = nullptr;
        if (!verdict) {
            // Recover the first rejected length for the report.
            for (std::int64_t ell = 0; ell <= M; ++ell) {
                prax::Word w(static_cast<std::size_t>(ell), 0);
                if (!prax::membership(a, w)) {
                    j["witness"] = prax::format_word(w, a.alphabet_size());
                    break;
                }
            }
        }
        emit(j);
        return verdict_exit(verdict);
    }

    if (empt->parsed()) {
        std::vector<prax::Dfa> ds;
        std::istringstream paths(empt_dfas);
        std::string path;
        while (std::getline(paths, path, ','))
            if (!path.empty()) ds.push_back(prax::read_dfa_file(path));
        if (ds.empty()) throw prax::InputError("--dfas names no files");
        auto L = prax::parse_length_distribution(empt_dist);
        prax::RngStream rng(resolve_seed(empt_seed));
        prax::EstimateReport r =
            prax::prax_emptiness(ds, empt_eps, prax::EmptinessTractableMode{L}, rng);
        emit(report_json("emptiness", r, empt_eps, ds.front().alphabet_size()));
        return verdict_exit(r.verdict_bool());
    }

    if (oracle_cmd->parsed()) {
        prax::Nfa a = prax::read_nfa_file(oracle_nfa);
        json j;
        j["schema"] = 1;
        j["command"] = "oracle";
        j["mode"] = oracle_mode;
        if (oracle_mode == "block") {
            j["value"] = significant15(prax::exact_index_block(a, limits.subset_limit));
        } else if (oracle_mode == "truncated") {
            if (oracle_dist.empty())
                throw prax::InputError("truncated mode needs --dist");
            auto L = prax::parse_length_distribution(oracle_dist);
            prax::IndexInterval iv =
                prax::exact_index_truncated(a, L, oracle_cutoff, limits.subset_limit);
            j["lower"] = significant15(iv.lower);
            j["upper"] = significant15(iv.upper);
            j["cutoff"] = iv.cutoff;
        } else {
            throw prax::InputError("oracle mode must be 'block' or 'truncated'");
        }
        emit(j);
        return 0;
    }

    if (reduce_cmd->parsed()) {
        prax::Nfa raw = prax::read_nfa_file(reduce_bnfa);
        prax::BlockCertificate b = prax::certify_block(raw);
        auto slash = reduce_delta.find('/');
        if (slash == std::string::npos)
            throw prax::InputError("threshold must be written as P/Q");
        prax::DeltaBits delta(parse_big(reduce_delta.substr(0, slash), "threshold numerator"),
                              parse_big(reduce_delta.substr(slash + 1), "threshold denominator"));
        prax::ReductionResult out = prax::reduce_to_threshold(b, delta);
        std::cout << "# n=" << out.word_length << " k=" << out.k << " m_k=" << out.m_k.str()
                  << "\n"
                  << prax::format_nfa(out.nfa);
        return 0;
    }

    return 2;   // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const prax::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
