#include <benchmark/benchmark.h>

#include "urset/checker.hpp"
#include "urset/naturals.hpp"
#include "urset/object.hpp"

namespace {

urset::Alpha default_alpha() {
  return urset::first_number(urset::mk_individual("p"), urset::mk_individual("q"));
}

void BM_MkSetCanonicalize(benchmark::State& state) {
  urset::Alpha a = default_alpha();
  std::vector<urset::Obj> elems;
  urset::Nat n = urset::from_int(static_cast<std::uint64_t>(state.range(0)), a);
  for (const urset::Obj& m : n.value().members()) elems.push_back(m);
  // worst case for the sort: reversed canonical order plus duplicates
  std::reverse(elems.begin(), elems.end());
  std::vector<urset::Obj> dup(elems.begin(), elems.begin() + elems.size() / 2);
  elems.insert(elems.end(), dup.begin(), dup.end());
  for (auto _ : state) benchmark::DoNotOptimize(urset::mk_set(elems));
}
BENCHMARK(BM_MkSetCanonicalize)->Arg(4)->Arg(8)->Arg(12);

void BM_Membership(benchmark::State& state) {
  urset::Alpha a = default_alpha();
  urset::Nat n = urset::from_int(static_cast<std::uint64_t>(state.range(0)), a);
  urset::Obj probe = urset::from_int(static_cast<std::uint64_t>(state.range(0)) / 2, a).value();
  for (auto _ : state) benchmark::DoNotOptimize(urset::member(probe, n.value()));
}
BENCHMARK(BM_Membership)->Arg(4)->Arg(8)->Arg(12);

void BM_SuccessorChain(benchmark::State& state) {
  urset::Alpha a = default_alpha();
  for (auto _ : state) {
    urset::Nat n = urset::from_int(0, a);
    for (int i = 0; i < state.range(0); ++i) n = urset::succ(n);
    benchmark::DoNotOptimize(n.value());
  }
}
BENCHMARK(BM_SuccessorChain)->Arg(8)->Arg(14);

void BM_Addition(benchmark::State& state) {
  urset::Alpha a = default_alpha();
  urset::Nat x = urset::from_int(static_cast<std::uint64_t>(state.range(0)), a);
  for (auto _ : state) benchmark::DoNotOptimize(urset::add(x, x).value());
}
BENCHMARK(BM_Addition)->Arg(4)->Arg(8)->Arg(12);

void BM_NumberRecognizer(benchmark::State& state) {
  urset::Alpha a = default_alpha();
  urset::Obj n = urset::from_int(static_cast<std::uint64_t>(state.range(0)), a).value();
  for (auto _ : state) benchmark::DoNotOptimize(urset::is_number(n, a));
}
BENCHMARK(BM_NumberRecognizer)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
