#include <benchmark/benchmark.h>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>
#include <omega/marking.hh>
#include <omega/product.hh>
#include <omega/proplab.hh>

namespace fam = omega::families;

static void subset_construction_an(benchmark::State& state)
{
  auto an = fam::build_an(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::subset_construction(an));
}
BENCHMARK(subset_construction_an)->DenseRange(4, 12, 4);

static void minimize_bn(benchmark::State& state)
{
  auto b = omega::complete_with_sink(fam::build_bn(static_cast<unsigned>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::hopcroft_minimize(b));
}
BENCHMARK(minimize_bn)->DenseRange(4, 12, 4);

static void psyn_gn_random_chain(benchmark::State& state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto m = omega::build_random_mc(7, 5, omega::alphabet::binary_dollar(), 0.6);
  auto g = fam::build_gn(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::psyn(m, g, omega::successor_choice::per_letter));
}
BENCHMARK(psyn_gn_random_chain)->DenseRange(1, 3);

static void psem_dn_random_chain(benchmark::State& state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto m = omega::build_random_mc(7, 5, omega::alphabet::binary_dollar(), 0.6);
  auto d = fam::build_dn(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::psem(m, d));
}
BENCHMARK(psem_dn_random_chain)->DenseRange(1, 5, 2);

static void marking_dn(benchmark::State& state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto d = fam::build_dn(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::run_marking(d, n));
}
BENCHMARK(marking_dn)->DenseRange(2, 8, 2);

static void separation_sn(benchmark::State& state)
{
  auto s = fam::build_sn(static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::is_separating(s));
}
BENCHMARK(separation_sn)->DenseRange(2, 8, 3);

static void lasso_equivalence_gn_dn(benchmark::State& state)
{
  auto n = static_cast<unsigned>(state.range(0));
  auto g = fam::build_gn(n), d = fam::build_dn(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(omega::buchi_equiv_on_lassos(g, d, 2 * n + 2));
}
BENCHMARK(lasso_equivalence_gn_dn)->DenseRange(1, 3);
BENCHMARK_MAIN();
