// Micro benchmarks for the hot paths: comparison, validation, enumeration,
// the o-measure, and text round-trips.

#include <benchmark/benchmark.h>

#include <vector>

#include "ot/finite_fn.hpp"
#include "ot/harness.hpp"
#include "ot/hull.hpp"
#include "ot/order.hpp"
#include "ot/textio.hpp"

using namespace ot;

namespace {

const std::vector<Term>& pool() {
  static const std::vector<Term> ts = [] {
    EnumSpec spec;
    spec.max_size = 5;
    return enumerate_terms(spec);
  }();
  return ts;
}

void BM_compare_pairs(benchmark::State& state) {
  const std::vector<Term>& ts = pool();
  std::size_t i = 0;
  for (auto _ : state) {
    const Term& x = ts[i % ts.size()];
    const Term& y = ts[(i * 7 + 3) % ts.size()];
    benchmark::DoNotOptimize(compare(x, y));
    ++i;
  }
}
BENCHMARK(BM_compare_pairs);

void BM_validate(benchmark::State& state) {
  const std::vector<Term>& ts = pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_ot(ts[i % ts.size()]).ok);
    ++i;
  }
}
BENCHMARK(BM_validate);

void BM_enumerate(benchmark::State& state) {
  EnumSpec spec;
  spec.max_size = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_terms(spec).size());
  }
}
BENCHMARK(BM_enumerate)->Arg(3)->Arg(4)->Arg(5);

void BM_o_measure(benchmark::State& state) {
  FiniteFn f = FiniteFn::make({{zero(), lam()},
                               {one(), theta(one(), phi(zero(), one()))},
                               {nat(3), lam()}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(o_measure(f));
  }
}
BENCHMARK(BM_o_measure);

void BM_print_parse(benchmark::State& state) {
  const std::vector<Term>& ts = pool();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_term(print_term(ts[i % ts.size()])));
    ++i;
  }
}
BENCHMARK(BM_print_parse);

}  // namespace

BENCHMARK_MAIN();
