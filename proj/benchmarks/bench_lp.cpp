/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/lp.hpp"
#include "ttc/polytope.hpp"
#include "ttc/rng.hpp"

#include <benchmark/benchmark.h>

using namespace ttc;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

/* m random half-spaces around the origin plus a box */
Polytope random_polytope(Eigen::Index n, Eigen::Index m, std::uint64_t seed)
{
	Rng rng = derive_stream(seed, StreamTag::Generator);
	MatrixXd A(m + 2 * n, n);
	VectorXd b(m + 2 * n);
	for (Eigen::Index i = 0; i < m; ++i) {
		for (Eigen::Index j = 0; j < n; ++j)
			A(i, j) = standard_normal(rng);
		b[i] = 1.0 + uniform01(rng);
	}
	A.bottomRows(2 * n).setZero();
	for (Eigen::Index j = 0; j < n; ++j) {
		A(m + 2 * j, j) = 1.0;
		A(m + 2 * j + 1, j) = -1.0;
		b[m + 2 * j] = b[m + 2 * j + 1] = 3.0;
	}
	return Polytope(A, b);
}

void BM_SolveLp(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Polytope P = random_polytope(n, 4 * n, 1);
	VectorXd c = VectorXd::Ones(n);
	for (auto _ : state)
		benchmark::DoNotOptimize(solve_lp(P.A, P.b, c));
}
BENCHMARK(BM_SolveLp)->Arg(2)->Arg(5)->Arg(10)->Arg(15)->Arg(30);

void BM_Chebyshev(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Polytope P = random_polytope(n, 4 * n, 2);
	for (auto _ : state)
		benchmark::DoNotOptimize(chebyshev(P));
}
BENCHMARK(BM_Chebyshev)->Arg(2)->Arg(5)->Arg(10)->Arg(15);

void BM_RemoveRedundant(benchmark::State &state)
{
	const auto n = static_cast<Eigen::Index>(state.range(0));
	Polytope P = random_polytope(n, 4 * n, 3);
	for (auto _ : state)
		benchmark::DoNotOptimize(remove_redundant(P));
}
BENCHMARK(BM_RemoveRedundant)->Arg(2)->Arg(5)->Arg(10);

} // namespace
