#include <benchmark/benchmark.h>

#include <string>

#include "igband/band.hpp"
#include "igband/green.hpp"
#include "igband/group_oracle.hpp"
#include "igband/ig_presentation.hpp"
#include "igband/pipeline.hpp"
#include "igband/presentation.hpp"
#include "igband/rees.hpp"
#include "igband/squares.hpp"
#include "igband/tietze.hpp"

namespace {

using namespace igband;

std::string const kInputs[] = {
    // 3 generators, 3 relations: the quaternion presentation.
    "gens a b c\nrel a*b = c\nrel b*c = a\nrel c*a = b\n",
    // 4 generators, 8 relations.
    "gens a b c d\n"
    "rel a*b = c\nrel b*c = d\nrel c*d = a\nrel d*a = b\n"
    "rel a*a = d\nrel b*b = a\nrel c*c = b\nrel d*d = c\n",
    // 5 generators, 10 relations.
    "gens a b c d e\n"
    "rel a*b = c\nrel b*c = d\nrel c*d = e\nrel d*e = a\nrel e*a = b\n"
    "rel a*a = b\nrel b*b = c\nrel c*c = d\nrel d*d = e\nrel e*e = a\n",
};

CayleyFormPresentation cayley(int idx) {
  return to_cayley_form(parse_group_presentation(kInputs[idx])).presentation;
}

void BM_BuildBand(benchmark::State& state) {
  auto p = cayley(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_band(p));
  }
}
BENCHMARK(BM_BuildBand)->DenseRange(0, 2);

void BM_SingularSquares(benchmark::State& state) {
  auto p = cayley(static_cast<int>(state.range(0)));
  Band b = build_band(p);
  GreenClasses g = green_classes(b);
  DClassGrid grid = dclass_grid(b, g, b.constant_element(0, 0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(singular_squares(b, g, grid));
  }
}
BENCHMARK(BM_SingularSquares)->DenseRange(0, 2);

void BM_SubgroupPresentation(benchmark::State& state) {
  auto p = cayley(static_cast<int>(state.range(0)));
  Band b = build_band(p);
  GreenClasses g = green_classes(b);
  DClassGrid grid = dclass_grid(b, g, b.constant_element(0, 0));
  auto squares = singular_squares(b, g, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        maximal_subgroup_presentation(b, g, grid, squares));
  }
}
BENCHMARK(BM_SubgroupPresentation)->DenseRange(0, 2);

void BM_Simplify(benchmark::State& state) {
  auto p = cayley(static_cast<int>(state.range(0)));
  Band b = build_band(p);
  GreenClasses g = green_classes(b);
  DClassGrid grid = dclass_grid(b, g, b.constant_element(0, 0));
  auto squares = singular_squares(b, g, grid);
  auto ig = maximal_subgroup_presentation(b, g, grid, squares);
  SimplifyOptions options;
  options.checkpoints = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplify(ig, options));
  }
}
BENCHMARK(BM_Simplify)->DenseRange(0, 2);

void BM_ToddCoxeter(benchmark::State& state) {
  auto p = parse_group_presentation(kInputs[static_cast<int>(state.range(0))]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(todd_coxeter(p, 20000));
  }
}
BENCHMARK(BM_ToddCoxeter)->DenseRange(0, 2);

void BM_Pipeline(benchmark::State& state) {
  auto p = parse_group_presentation(kInputs[static_cast<int>(state.range(0))]);
  PipelineOptions options;
  options.max_cosets = 20000;
  options.checkpoints = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(p, options));
  }
}
BENCHMARK(BM_Pipeline)->DenseRange(0, 2);

void BM_NormalForm(benchmark::State& state) {
  auto conv = to_cayley_form(parse_group_presentation(kInputs[0]));
  Band b = build_band(conv.presentation);
  auto oracle =
      build_group_oracle(conv.presentation.to_group_presentation());
  ReesModel m = build_rees_model(b, std::move(*oracle.oracle));
  std::vector<int> word;
  for (int i = 0; i < 64; ++i) word.push_back(i % b.size);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.normal_form(word));
  }
}
BENCHMARK(BM_NormalForm);

}  // namespace

BENCHMARK_MAIN();
