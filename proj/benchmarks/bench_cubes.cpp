/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/bench.hpp"
#include "ttc/pipeline.hpp"
#include "ttc/smtlib.hpp"

#include <benchmark/benchmark.h>

using namespace ttc;

namespace {

void BM_Decompose(benchmark::State &state)
{
	BenchSpec spec;
	spec.n = static_cast<std::size_t>(state.range(0));
	spec.m = static_cast<std::size_t>(state.range(1));
	spec.seed = 3;
	Formula f = parse_smt2(gen_instance(spec).smt2);
	for (auto _ : state)
		benchmark::DoNotOptimize(decompose(f).cubes.size());
}
BENCHMARK(BM_Decompose)->Args({3, 5})->Args({6, 10})->Args({15, 20})->Unit(benchmark::kMillisecond);

void BM_Parse(benchmark::State &state)
{
	BenchSpec spec;
	spec.n = 15;
	spec.m = 20;
	std::string text = gen_instance(spec).smt2;
	for (auto _ : state)
		benchmark::DoNotOptimize(parse_smt2(text).vars.dimension());
	state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse);

} // namespace
