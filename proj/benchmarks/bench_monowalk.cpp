#include <benchmark/benchmark.h>

#include "monowalk/bounds.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/green.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/models/free_tree.hpp"
#include "monowalk/models/toom.hpp"
#include "monowalk/models/tsetlin.hpp"
#include "monowalk/simulate.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/stationary.hpp"
#include "monowalk/walk.hpp"

using namespace monowalk;

namespace {
  struct Walk {
    FiniteMonoid          M;
    GreenStructure        G;
    IdempotentLattice     L;
    Action                action;
    ProbabilityAssignment P;
  };

  Walk tsetlin(std::size_t k) {
    Walk w;
    w.M      = close_monoid(models::free_lrb_generators(k));
    w.G      = green_structure(w.M);
    w.L      = build_lattice(w.M);
    w.action = Action(w.M, models::tsetlin_generators(k));
    w.P      = ProbabilityAssignment::from_generator_weights(w.M, generic_probability(k, ProbabilityScheme::Powers));
    return w;
  }
}  // namespace

static void BM_CloseFreeLrb(benchmark::State& state) {
  auto gens = models::free_lrb_generators(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto M = close_monoid(gens);
    benchmark::DoNotOptimize(M.size());
  }
}
BENCHMARK(BM_CloseFreeLrb)->DenseRange(3, 5);

static void BM_CloseToom(benchmark::State& state) {
  auto gens = models::toom_fixed_generators(models::toom_fixed_spec({3, 2, 2}));
  for (auto _ : state) {
    auto M = close_monoid(gens);
    benchmark::DoNotOptimize(M.size());
  }
}
BENCHMARK(BM_CloseToom);

static void BM_Lattice(benchmark::State& state) {
  auto M = close_monoid(models::free_tree_generators(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto L = build_lattice(M);
    benchmark::DoNotOptimize(L.size());
  }
}
BENCHMARK(BM_Lattice)->DenseRange(2, 3);

static void BM_SpectrumTsetlin(benchmark::State& state) {
  auto w = tsetlin(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto S = spectrum(w.M, w.L, w.action, w.P);
    benchmark::DoNotOptimize(S.entries.data());
  }
}
BENCHMARK(BM_SpectrumTsetlin)->DenseRange(3, 5);

static void BM_TraceVerification(benchmark::State& state) {
  auto w = tsetlin(4);
  auto S = spectrum(w.M, w.L, w.action, w.P);
  auto T = transition_matrix(w.M, w.action, w.P);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_spectrum_by_traces(T, S));
  }
}
BENCHMARK(BM_TraceVerification)->Unit(benchmark::kMillisecond);

static void BM_StationaryChainFormula(benchmark::State& state) {
  auto w = tsetlin(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto pi = stationary_chain_formula(w.M, w.G, w.L, w.P);
    benchmark::DoNotOptimize(pi.pi.data());
  }
}
BENCHMARK(BM_StationaryChainFormula)->DenseRange(3, 4);

static void BM_StationaryLinearSolve(benchmark::State& state) {
  auto w = tsetlin(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto pi = stationary_on_ideal_exact(w.M, w.G, w.P);
    benchmark::DoNotOptimize(pi.pi.data());
  }
}
BENCHMARK(BM_StationaryLinearSolve)->DenseRange(3, 4);

static void BM_ExchangeSpectrum(benchmark::State& state) {
  auto chain = make_exchange_chain(build_coxeter("A3"), generic_probability(3, ProbabilityScheme::Powers));
  for (auto _ : state) {
    auto S = exchange_spectrum(chain);
    benchmark::DoNotOptimize(S.entries.data());
  }
}
BENCHMARK(BM_ExchangeSpectrum);

static void BM_SimulateWalk(benchmark::State& state) {
  auto w = tsetlin(5);
  for (auto _ : state) {
    auto sim = simulate_walk(w.action, w.P, 1, 50, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(sim.final_counts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 50);
}
BENCHMARK(BM_SimulateWalk)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
