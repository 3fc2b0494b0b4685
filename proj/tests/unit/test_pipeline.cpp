/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/errors.hpp"
#include "ttc/pipeline.hpp"
#include "ttc/smtlib.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace ttc;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

Polytope square(double lo, double hi)
{
	return Polytope::box(VectorXd::Constant(2, lo), VectorXd::Constant(2, hi));
}

std::vector<Polytope> two_squares()
{
	return {square(10, 30), square(20, 40)};
}

} // namespace

TEST(Pipeline, TwoSquaresFormula)
{
	Formula f = parse_smt2_file(std::string(TTC_DATA_DIR) + "/two_squares.smt2");
	RunOptions opt;
	opt.seed = 3;
	RunReport r = estimate_formula(f, opt);
	EXPECT_EQ(r.status, RunStatus::Ok);
	EXPECT_EQ(r.dim, 2u);
	EXPECT_EQ(r.m, 2u);
	EXPECT_EQ(r.preci, 2);
	EXPECT_NEAR(r.thresh, 27699.059368953266, 1e-6);
	EXPECT_NEAR(r.estimate, 700.0, 0.8 * 700.0);
	ASSERT_EQ(r.polytopes.size(), 2u);
	EXPECT_NEAR(r.polytopes[0].volume, 400.0, 0.15 * 400);
	EXPECT_GT(r.polytopes[1].removed, 0u);
	EXPECT_TRUE(r.warnings.empty());
}

TEST(Pipeline, SingleUnitSquare)
{
	RunOptions opt;
	opt.eps = 0.3;
	RunReport r = estimate_polytopes({square(0, 1)}, opt);
	EXPECT_NEAR(r.estimate, 1.0, 0.3);
}

TEST(Pipeline, DisjointSquares)
{
	RunOptions opt;
	opt.eps = 0.3;
	RunReport r = estimate_polytopes({square(0, 1), square(5, 6)}, opt);
	EXPECT_NEAR(r.estimate, 2.0, 0.6);
	EXPECT_EQ(r.polytopes[1].removed, 0u);
}

TEST(Pipeline, VolumeUnits)
{
	RunOptions opt;
	opt.units = SketchUnits::Volume;
	opt.seed = 4;
	RunReport r = estimate_polytopes(two_squares(), opt);
	EXPECT_NEAR(r.estimate, 700.0, 0.8 * 700.0);
}

TEST(Pipeline, DegenerateOnly)
{
	MatrixXd A(4, 2);
	A << 1, 0, -1, 0, 0, 1, 0, -1;
	Polytope segment(A, (VectorXd(4) << 1, -1, 2, 0).finished());
	RunReport r = estimate_polytopes({segment, segment}, RunOptions{});
	EXPECT_EQ(r.estimate, 0.0);
	ASSERT_FALSE(r.warnings.empty());
	EXPECT_NE(r.warnings[0].find("degenerate"), std::string::npos);
	EXPECT_TRUE(r.polytopes[0].degenerate);
}

TEST(Pipeline, DegenerateMixedIsSkipped)
{
	MatrixXd A(4, 2);
	A << 1, 0, -1, 0, 0, 1, 0, -1;
	Polytope segment(A, (VectorXd(4) << 1, -1, 2, 0).finished());
	RunOptions opt;
	opt.eps = 0.3;
	RunReport r = estimate_polytopes({segment, square(0, 1)}, opt);
	EXPECT_TRUE(r.polytopes[0].degenerate);
	EXPECT_FALSE(r.polytopes[1].degenerate);
	EXPECT_NEAR(r.estimate, 1.0, 0.3);
}

TEST(Pipeline, UnboundedRaises)
{
	Polytope half(-MatrixXd::Identity(2, 2), VectorXd::Zero(2));
	EXPECT_THROW(estimate_polytopes({square(0, 1), half}, RunOptions{}), UnboundedError);
	Formula f = parse_smt2("(declare-fun x () Real)(assert (>= x 0))");
	EXPECT_THROW(estimate_formula(f, RunOptions{}), UnboundedError);
}

TEST(Pipeline, UnsatIsZero)
{
	Formula f = parse_smt2("(declare-fun x () Real)(declare-fun p () Bool)(assert (and p (not p)))");
	RunReport r = estimate_formula(f, RunOptions{});
	EXPECT_EQ(r.estimate, 0.0);
	EXPECT_FALSE(r.warnings.empty());
}

TEST(Pipeline, Deterministic)
{
	RunOptions opt;
	opt.seed = 17;
	RunReport a = estimate_polytopes(two_squares(), opt);
	RunReport b = estimate_polytopes(two_squares(), opt);
	EXPECT_EQ(a.estimate, b.estimate);
	opt.jobs = 3;
	RunReport c = estimate_polytopes(two_squares(), opt);
	EXPECT_EQ(a.estimate, c.estimate);
	EXPECT_EQ(estimate_union(two_squares(), 0.8, 0.2, 17), a.estimate);
}

TEST(Pipeline, PrecisionOverride)
{
	RunOptions opt;
	opt.precision_override = 0;
	RunReport r = estimate_polytopes(two_squares(), opt);
	EXPECT_EQ(r.preci, 0);
	opt.precision_override = 99;
	EXPECT_THROW(estimate_polytopes(two_squares(), opt), ContractError);
}

TEST(Pipeline, Timeout)
{
	RunOptions opt;
	opt.timeout_s = 0.0;
	RunReport r = estimate_polytopes(two_squares(), opt);
	EXPECT_EQ(r.status, RunStatus::Timeout);
}

TEST(Pipeline, CubeLimit)
{
	Formula f = parse_smt2_file(std::string(TTC_DATA_DIR) + "/two_squares.smt2");
	RunOptions opt;
	opt.cube_limit = 1;
	EXPECT_THROW(estimate_formula(f, opt), TruncationError);
}

/* Over many seeds the mean estimate sits near the true area, and single runs
 * land within eps at least 1 - delta of the time. */
TEST(Pipeline, UnbiasedAndReliable)
{
	const int runs = 300;
	const double eps = 0.5;
	std::vector<double> est;
	int within = 0;
	for (int s = 0; s < runs; ++s) {
		double v = estimate_union(two_squares(), eps, 0.2, 1000 + static_cast<std::uint64_t>(s));
		est.push_back(v);
		if (std::abs(v - 700.0) <= eps * 700.0)
			++within;
	}
	double mean = std::accumulate(est.begin(), est.end(), 0.0) / runs;
	double var = 0;
	for (double v : est)
		var += (v - mean) * (v - mean);
	var /= runs - 1;
	double se = std::sqrt(var / runs);
	// volume estimates carry their own small error; allow 2% on top of 3 SE
	EXPECT_NEAR(mean, 700.0, 3 * se + 0.02 * 700);
	EXPECT_GE(within, static_cast<int>(0.8 * runs));
}
