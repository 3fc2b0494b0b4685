/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/errors.hpp"
#include "ttc/sketch.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace ttc;
using Eigen::VectorXd;

namespace {

Polytope square(double lo, double hi)
{
	return Polytope::box(VectorXd::Constant(2, lo), VectorXd::Constant(2, hi));
}

struct Moments {
	double mean = 0.0;
	double var = 0.0;
};

template <class F>
Moments moments(int n, F draw)
{
	std::vector<double> xs(static_cast<std::size_t>(n));
	for (auto &x : xs)
		x = draw();
	Moments m;
	m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
	for (double x : xs)
		m.var += (x - m.mean) * (x - m.mean);
	m.var /= (n - 1);
	return m;
}

/* Two-sample Kolmogorov-Smirnov statistic. */
double ks_statistic(std::vector<double> a, std::vector<double> b)
{
	std::sort(a.begin(), a.end());
	std::sort(b.begin(), b.end());
	std::size_t i = 0, j = 0;
	double d = 0.0;
	while (i < a.size() && j < b.size()) {
		double x = std::min(a[i], b[j]);
		while (i < a.size() && a[i] <= x)
			++i;
		while (j < b.size() && b[j] <= x)
			++j;
		d = std::max(d, std::abs(static_cast<double>(i) / static_cast<double>(a.size()) -
		                         static_cast<double>(j) / static_cast<double>(b.size())));
	}
	return d;
}

} // namespace

TEST(Thresh, Formula)
{
	// 50-digit reference values
	EXPECT_NEAR(thresh(0.8, 0.2, 10), 27699.059368953266109575983978313049, 1e-9 * 27699.06);
	EXPECT_NEAR(thresh(0.5, 0.05, 3), 89057.132974268213988780366691747803, 1e-9 * 89057.13);
	EXPECT_NEAR(thresh(1.0, 1.0, 1), 11981.840768380909157999814735362862, 1e-9 * 11981.84);
}

TEST(Thresh, SecondTermWinsForHugeM)
{
	// eps = 1, delta = 1: 6 (ln 6 + ln m) passes 11981.84 once m > e^1997 / 6,
	// which no size_t reaches, so the first term always wins here
	EXPECT_NEAR(thresh(1.0, 1.0, 1000000000), 11981.840768380909, 1e-6);
	// term 2 with m = 1 reduces to 6 ln(6 / delta)
	const double e = 1.0 / 12;
	const double delta = 0.3;
	EXPECT_NEAR(thresh(1.0, delta, 1),
	            std::max(24 * std::log(24 / delta) / ((1 - e) * e * e), 6 * std::log(6 / delta)),
	            1e-9);
}

TEST(Thresh, DecreasingInEpsAndDelta)
{
	for (int i = 0; i < 5; ++i) {
		for (int j = 0; j < 5; ++j) {
			double eps = 0.1 + 0.2 * i, delta = 0.05 + 0.2 * j;
			double t = thresh(eps, delta, 10);
			EXPECT_GT(t, thresh(eps + 0.01, delta, 10));
			EXPECT_GT(t, thresh(eps, delta + 0.01, 10));
		}
	}
}

TEST(Thresh, Contract)
{
	EXPECT_THROW(thresh(0.0, 0.2, 1), ContractError);
	EXPECT_THROW(thresh(0.8, 0.0, 1), ContractError);
	EXPECT_THROW(thresh(0.8, 0.2, 0), ContractError);
}

TEST(Poisson, Zero)
{
	Rng rng = derive_stream(1, StreamTag::Sketch);
	for (int t = 0; t < 100; ++t)
		EXPECT_EQ(poisson(0.0, rng), 0u);
}

TEST(Poisson, MomentBands)
{
	const int n = 100000;
	for (double lambda : {0.5, 4.0, 10.0, 10.5, 37.0, 5000.0}) {
		Rng rng = derive_stream(static_cast<std::uint64_t>(lambda * 10), StreamTag::Sketch);
		Moments m = moments(n, [&] { return static_cast<double>(poisson(lambda, rng)); });
		// sd of the mean sqrt(l / n); sd of the sample variance ~ sqrt((2 l^2 + l) / n)
		EXPECT_NEAR(m.mean, lambda, 3 * std::sqrt(lambda / n)) << lambda;
		EXPECT_NEAR(m.var, lambda, 3 * std::sqrt((2 * lambda * lambda + lambda) / n)) << lambda;
	}
}

TEST(Poisson, Lambda4Explicit)
{
	Rng rng = derive_stream(4, StreamTag::Sketch);
	Moments m = moments(100000, [&] { return static_cast<double>(poisson(4.0, rng)); });
	EXPECT_NEAR(m.mean, 4.0, 0.02 * 3);
	EXPECT_NEAR(m.var, 4.0, 0.1 * 3);
}

TEST(Poisson, PmfSmallLambda)
{
	Rng rng = derive_stream(9, StreamTag::Sketch);
	const int n = 200000;
	std::vector<int> counts(40, 0);
	for (int t = 0; t < n; ++t) {
		auto k = poisson(12.0, rng);
		if (k < counts.size())
			++counts[k];
	}
	for (int k = 4; k < 25; ++k) {
		double p = std::exp(-12.0 + k * std::log(12.0) - std::lgamma(k + 1.0));
		EXPECT_NEAR(counts[static_cast<std::size_t>(k)], n * p, 4 * std::sqrt(n * p * (1 - p)))
			<< "k=" << k;
	}
}

TEST(BinomialHalf, Moments)
{
	Rng rng = derive_stream(2, StreamTag::Sketch);
	for (std::uint64_t copies : {1ull, 3ull, 64ull, 1000ull}) {
		Moments m = moments(20000, [&] {
			auto k = binomial_half(copies, rng);
			EXPECT_LE(k, copies);
			return static_cast<double>(k);
		});
		double c = static_cast<double>(copies);
		EXPECT_NEAR(m.mean, c / 2, 3 * std::sqrt(c / 4 / 20000));
	}
	EXPECT_EQ(binomial_half(0, rng), 0u);
}

TEST(Sketch, RateIsDyadic)
{
	Sketch s(100.0, 0);
	Rng rng = derive_stream(3, StreamTag::Sketch);
	EXPECT_EQ(s.p(), 1.0);
	for (int j = 1; j <= 60; ++j) {
		s.thin(rng);
		EXPECT_EQ(s.p_exponent(), j);
		EXPECT_EQ(s.p(), std::ldexp(1.0, -j));
	}
}

TEST(Sketch, RemoveInsideTakesAllCopies)
{
	Sketch s(100.0, 0);
	s.append({LatticePoint{{1, 1}}, LatticePoint{{1, 1}}, LatticePoint{{5, 5}}});
	EXPECT_EQ(s.size(), 3u);
	EXPECT_EQ(s.remove_inside(square(0, 2)), 2u);
	EXPECT_EQ(s.size(), 1u);
	EXPECT_EQ(s.keys().size(), 1u);
}

TEST(Sketch, EstimateUnits)
{
	Sketch s(100.0, 1, 2.0 * std::log2(10.0));
	s.append({LatticePoint{{1, 1}}});
	// one cell of side 0.1 in 2 dimensions
	EXPECT_NEAR(s.estimate(), 0.01, 1e-15);
}

TEST(Process, SmallVolumeKeepsRate)
{
	Rng rng = derive_stream(4, StreamTag::Sketch);
	Rng sampler = derive_stream(4, StreamTag::Sampler);
	const double t = 50.0;
	double sum = 0;
	const int runs = 400;
	for (int r = 0; r < runs; ++r) {
		Sketch s(27699.0, 2);
		ProcessRecord rec = process_polytope(s, square(0, 1), t, rng, sampler);
		EXPECT_EQ(rec.halvings, 0);
		EXPECT_EQ(s.p_exponent(), 0);
		EXPECT_EQ(s.size(), rec.drawn);
		sum += static_cast<double>(s.size());
	}
	EXPECT_NEAR(sum / runs, t, 3 * std::sqrt(t / runs));
}

TEST(Process, LargeVolumeHalvesAtLeastThreeTimes)
{
	Rng rng = derive_stream(5, StreamTag::Sketch);
	Rng sampler = derive_stream(5, StreamTag::Sampler);
	Sketch s(200.0, 1);
	s.append({LatticePoint{{3, 3}}, LatticePoint{{4, 2}}});
	ProcessRecord rec = process_polytope(s, square(0, 1), 200.0 * 8, rng, sampler);
	EXPECT_EQ(rec.removed, 2u);
	EXPECT_GE(rec.halvings, 3);
	EXPECT_LE(static_cast<double>(s.size()), s.thresh());
}

TEST(Process, ZeroVolumeIsNoop)
{
	Rng rng = derive_stream(6, StreamTag::Sketch);
	Rng sampler = derive_stream(6, StreamTag::Sampler);
	Sketch s(200.0, 0);
	s.append({LatticePoint{{0, 0}}});
	ProcessRecord rec = process_polytope(s, square(-1, 1), 0.0, rng, sampler);
	EXPECT_EQ(rec.removed, 0u);
	EXPECT_EQ(s.size(), 1u);
	EXPECT_THROW(process_polytope(s, square(-1, 1), -1.0, rng, sampler), ContractError);
}

TEST(Process, SizeNeverExceedsThresh)
{
	Rng rng = derive_stream(7, StreamTag::Sketch);
	Rng sampler = derive_stream(7, StreamTag::Sampler);
	Sketch s(500.0, 2, 2 * 2 * std::log2(10.0));
	for (int i = 0; i < 12; ++i) {
		double lo = 0.3 * i;
		process_polytope(s, square(lo, lo + 1), 1.0, rng, sampler);
		ASSERT_LE(static_cast<double>(s.size()), s.thresh());
	}
}

/* Processing the same body twice leaves |X| with the same law. */
TEST(Process, SameBodyTwiceSameLaw)
{
	Rng rng = derive_stream(8, StreamTag::Sketch);
	Rng sampler = derive_stream(8, StreamTag::Sampler);
	const int runs = 2000;
	std::vector<double> once, twice;
	Polytope P = square(0, 2);
	for (int r = 0; r < runs; ++r) {
		Sketch a(27699.0, 1);
		process_polytope(a, P, 30.0, rng, sampler);
		once.push_back(static_cast<double>(a.size()));
		Sketch b(27699.0, 1);
		process_polytope(b, P, 30.0, rng, sampler);
		process_polytope(b, P, 30.0, rng, sampler);
		twice.push_back(static_cast<double>(b.size()));
	}
	// alpha = 0.01 critical value for equal sample sizes
	double crit = 1.628 * std::sqrt(2.0 / runs);
	EXPECT_LT(ks_statistic(once, twice), crit);
}

namespace {

double run_sketch(const std::vector<std::pair<Polytope, double>> &bodies, double th,
                  std::uint64_t seed)
{
	Rng rng = derive_stream(seed, StreamTag::Sketch);
	Rng sampler = derive_stream(seed, StreamTag::Sampler);
	Sketch s(th, 1, 2 * std::log2(10.0));
	for (const auto &[P, t] : bodies)
		process_polytope(s, P, t, rng, sampler);
	return s.estimate();
}

Moments summarize(const std::vector<double> &xs)
{
	Moments m;
	m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
	for (double x : xs)
		m.var += (x - m.mean) * (x - m.mean);
	m.var /= static_cast<double>(xs.size() - 1);
	return m;
}

} // namespace

TEST(SketchLaw, OverlapIdempotence)
{
	Polytope P = square(0, 2);
	const int runs = 500;
	std::vector<double> single, doubled;
	for (int r = 0; r < runs; ++r) {
		single.push_back(run_sketch({{P, 4.0}}, 2000, 1000 + static_cast<std::uint64_t>(r)));
		doubled.push_back(run_sketch({{P, 4.0}, {P, 4.0}}, 2000, 5000 + static_cast<std::uint64_t>(r)));
	}
	Moments a = summarize(single), b = summarize(doubled);
	double se = std::sqrt(a.var / runs + b.var / runs);
	EXPECT_NEAR(a.mean, b.mean, 2 * se);
	EXPECT_NEAR(a.mean, 4.0, 0.05 * 4.0);
}

TEST(SketchLaw, PermutationRobustness)
{
	Polytope A = square(0, 2), B = square(1, 3), C = square(2.5, 3.5);
	const double exact = 4 + 4 - 1 + 1 - 0.25;
	const int runs = 500;
	std::vector<double> abc, cba;
	for (int r = 0; r < runs; ++r) {
		abc.push_back(run_sketch({{A, 4.0}, {B, 4.0}, {C, 1.0}}, 2000, 9000 + static_cast<std::uint64_t>(r)));
		cba.push_back(run_sketch({{C, 1.0}, {B, 4.0}, {A, 4.0}}, 2000, 19000 + static_cast<std::uint64_t>(r)));
	}
	Moments a = summarize(abc), b = summarize(cba);
	double se = std::sqrt(a.var / runs + b.var / runs);
	EXPECT_NEAR(a.mean, b.mean, 2 * se);
	EXPECT_NEAR(a.mean / exact, 1.0, 0.05);
}
