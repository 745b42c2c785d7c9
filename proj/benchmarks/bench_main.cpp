#include <benchmark/benchmark.h>

#include <random>

#include "prax/automata.hpp"
#include "prax/estimators.hpp"
#include "prax/oracle.hpp"
#include "prax/sampling.hpp"

namespace {

using namespace prax;

Nfa random_nfa(std::uint64_t seed, State states, Symbol s, int out_degree) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<State> pick(0, states - 1);
    std::vector<Transition> ts;
    for (State q = 0; q < states; ++q)
        for (Symbol c = 0; c < s; ++c)
            for (int i = 0; i < out_degree; ++i) ts.push_back({q, c, pick(gen)});
    std::vector<State> finals;
    for (State q = 0; q < states; q += 3) finals.push_back(q);
    return Nfa(s, states, {0}, std::move(finals), std::move(ts));
}

// Layered ADFA accepting all of Sigma_2^ell.
Dfa chain_dfa(std::uint32_t ell) {
    std::vector<Transition> ts;
    for (State q = 0; q < ell; ++q)
        for (Symbol c = 0; c < 2; ++c) ts.push_back({q, c, q + 1});
    return Dfa(2, ell + 1, 0, {ell}, std::move(ts));
}

void BM_Membership(benchmark::State& state) {
    const Nfa a = random_nfa(1, static_cast<State>(state.range(0)), 2, 2);
    RngStream rng(7);
    const Word w = uselect(2, 64, rng);
    for (auto _ : state) benchmark::DoNotOptimize(membership(a, w));
}
BENCHMARK(BM_Membership)->Arg(16)->Arg(64)->Arg(256);

void BM_CountPaths(benchmark::State& state) {
    const AdfaCertificate cert =
        certify_acyclic(chain_dfa(static_cast<std::uint32_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(count_paths(cert));
}
BENCHMARK(BM_CountPaths)->Arg(32)->Arg(128);

void BM_AdfaUselect(benchmark::State& state) {
    const AdfaCertificate cert =
        certify_acyclic(chain_dfa(static_cast<std::uint32_t>(state.range(0))));
    const PathCountTable table = count_paths(cert);
    RngStream rng(11);
    for (auto _ : state) benchmark::DoNotOptimize(adfa_uselect(cert, table, rng));
}
BENCHMARK(BM_AdfaUselect)->Arg(16)->Arg(64);

void BM_SelectFin(benchmark::State& state) {
    std::vector<double> probs(static_cast<std::size_t>(state.range(0)));
    double mass = 1.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        probs[i] = mass / 2;
        mass /= 2;
    }
    probs.back() = mass;
    RngStream rng(13);
    for (auto _ : state) benchmark::DoNotOptimize(select_fin(probs, rng));
}
BENCHMARK(BM_SelectFin)->Arg(8)->Arg(32);

void BM_SampleAugmented(benchmark::State& state) {
    const auto W =
        WordDistribution::length_based(LengthDistribution::lambert(2.0, 0), 2);
    RngStream rng(17);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_augmented(W, state.range(0), rng));
}
BENCHMARK(BM_SampleAugmented)->Arg(8)->Arg(32);

void BM_PraxBlockUniv(benchmark::State& state) {
    // Full block of length 8: the completeness-side cost (all trials run).
    std::vector<Transition> ts;
    for (State q = 0; q < 8; ++q)
        for (Symbol c = 0; c < 2; ++c) ts.push_back({q, c, q + 1});
    const Nfa a(2, 9, {0}, {8}, std::move(ts));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RngStream rng(seed++);
        benchmark::DoNotOptimize(prax_block_univ(a, 0.1, rng));
    }
}
BENCHMARK(BM_PraxBlockUniv);

void BM_CountPerLength(benchmark::State& state) {
    const Nfa a = random_nfa(3, 10, 2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_per_length(a, state.range(0)));
}
BENCHMARK(BM_CountPerLength)->Arg(16)->Arg(40);

} // namespace

BENCHMARK_MAIN();
