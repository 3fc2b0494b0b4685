/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/sketch.hpp"

#include <benchmark/benchmark.h>

using namespace ttc;
using Eigen::VectorXd;

namespace {

void BM_Poisson(benchmark::State &state)
{
	const double lambda = static_cast<double>(state.range(0)) / 10.0;
	Rng rng = derive_stream(1, StreamTag::Sketch);
	for (auto _ : state)
		benchmark::DoNotOptimize(poisson(lambda, rng));
}
BENCHMARK(BM_Poisson)->Arg(5)->Arg(40)->Arg(100)->Arg(50000)->Arg(100000000);

void BM_Thin(benchmark::State &state)
{
	Rng rng = derive_stream(2, StreamTag::Sketch);
	std::vector<LatticePoint> pts;
	for (std::int64_t i = 0; i < state.range(0); ++i)
		pts.push_back(LatticePoint{{i, -i, 3 * i}});
	for (auto _ : state) {
		state.PauseTiming();
		Sketch s(1e9, 0);
		s.append(pts);
		state.ResumeTiming();
		s.thin(rng);
		benchmark::DoNotOptimize(s.size());
	}
}
BENCHMARK(BM_Thin)->Arg(1000)->Arg(30000);

void BM_ProcessPolytope(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Polytope A = Polytope::box(VectorXd::Zero(n), VectorXd::Constant(n, 2.0));
	Polytope B = Polytope::box(VectorXd::Ones(n), VectorXd::Constant(n, 3.0));
	const double vol = std::pow(2.0, static_cast<double>(n));
	Rng rng = derive_stream(3, StreamTag::Sketch);
	Rng sampler = derive_stream(3, StreamTag::Sampler);
	for (auto _ : state) {
		Sketch s(thresh(0.8, 0.2, 2), 2, static_cast<double>(n) * 2 * std::log2(10.0));
		process_polytope(s, A, vol, rng, sampler);
		process_polytope(s, B, vol, rng, sampler);
		benchmark::DoNotOptimize(s.estimate());
	}
}
BENCHMARK(BM_ProcessPolytope)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace
