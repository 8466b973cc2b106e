#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "ptri/engine.hpp"
#include "ptri/laws.hpp"
#include "ptri/operators.hpp"
#include "ptri/prob_oracle.hpp"
#include "ptri/rule_lang.hpp"

namespace {

using ptri::Interval;

std::vector<Interval> random_intervals(std::size_t n) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Interval> out;
  for (std::size_t i = 0; i < n; ++i) {
    double a = unit(gen), b = unit(gen);
    if (a > b) std::swap(a, b);
    out.push_back(Interval::make(a, b));
  }
  return out;
}

ptri::Program load(const char* name) {
  std::ifstream in(std::string(PTRI_PROGRAMS_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return ptri::parse_program(s.str());
}

template <Interval (*Op)(const Interval&, const Interval&)>
void BM_Binary(benchmark::State& state) {
  const auto xs = random_intervals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Op(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Binary<ptri::t_min_p>)->Name("tminp");
BENCHMARK(BM_Binary<ptri::t_pr>)->Name("tpr");
BENCHMARK(BM_Binary<ptri::s_pr>)->Name("spr");

void BM_CmpTp(benchmark::State& state) {
  const auto xs = random_intervals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptri::cmp_tp(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_CmpTp);

void BM_ProbLeq(benchmark::State& state) {
  const auto xs = random_intervals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptri::prob_leq(xs[i & 1023], xs[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_ProbLeq);

void BM_ProbLeqMc(benchmark::State& state) {
  const Interval x = Interval::make(0.4, 0.8), y = Interval::make(0.6, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptri::prob_leq_mc(x, y, static_cast<std::uint64_t>(state.range(0)), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProbLeqMc)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_ImplicatorPr(benchmark::State& state) {
  const Interval x = Interval::make(0.2, 0.8), y = Interval::make(0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(ptri::r_implicator_pr(x, y, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ImplicatorPr)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SolveRoads(benchmark::State& state) {
  const auto p = load("roads.pre");
  for (auto _ : state) benchmark::DoNotOptimize(ptri::solve(p));
}
BENCHMARK(BM_SolveRoads);

void BM_SolveTriage(benchmark::State& state) {
  const auto p = load("triage.pre");
  for (auto _ : state) benchmark::DoNotOptimize(ptri::solve(p));
}
BENCHMARK(BM_SolveTriage);

void BM_Parse(benchmark::State& state) {
  std::ifstream in(std::string(PTRI_PROGRAMS_DIR) + "/roads.pre", std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  const std::string text = s.str();
  for (auto _ : state) benchmark::DoNotOptimize(ptri::parse_program(text));
}
BENCHMARK(BM_Parse);

void BM_LawSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ptri::run_law_suite(0.1));
}
BENCHMARK(BM_LawSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
