/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/lattice.hpp"
#include "ttc/volume.hpp"

#include <benchmark/benchmark.h>

using namespace ttc;
using Eigen::VectorXd;

namespace {

Polytope cube(Eigen::Index n)
{
	return Polytope::box(VectorXd::Zero(n), VectorXd::Ones(n));
}

void BM_HitAndRunStep(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Body body{cube(n), std::nullopt, {}};
	HitAndRunWalker w(body, VectorXd::Constant(n, 0.5));
	Rng rng = derive_stream(1, StreamTag::Volume);
	for (auto _ : state) {
		w.step(rng);
		benchmark::DoNotOptimize(w.point().data());
	}
}
BENCHMARK(BM_HitAndRunStep)->Arg(2)->Arg(5)->Arg(10)->Arg(15)->Arg(30);

void BM_ComputeVolume(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Polytope P = cube(n);
	std::uint64_t seed = 0;
	for (auto _ : state) {
		Rng rng = derive_stream(++seed, StreamTag::Volume);
		benchmark::DoNotOptimize(compute_volume(P, 0.8 / 12, 0.1, rng).value);
	}
}
BENCHMARK(BM_ComputeVolume)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LatticeSamples(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Polytope P = cube(n);
	Rng rng = derive_stream(2, StreamTag::Sampler);
	for (auto _ : state)
		benchmark::DoNotOptimize(generate_samples(P, 1000, 2, rng));
	state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_LatticeSamples)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace
