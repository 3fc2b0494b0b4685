/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/errors.hpp"
#include "ttc/lp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ttc;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd col(std::initializer_list<double> v)
{
	MatrixXd A(static_cast<Eigen::Index>(v.size()), 1);
	Eigen::Index i = 0;
	for (double x : v)
		A(i++, 0) = x;
	return A;
}

VectorXd vec(std::initializer_list<double> v)
{
	VectorXd b(static_cast<Eigen::Index>(v.size()));
	Eigen::Index i = 0;
	for (double x : v)
		b[i++] = x;
	return b;
}

} // namespace

TEST(Lp, Bounded)
{
	LpResult r = solve_lp(col({1, -1}), vec({10, 0}), vec({1}));
	ASSERT_EQ(r.status, LpStatus::Optimal);
	EXPECT_NEAR(r.value, 10.0, 1e-9);
	EXPECT_NEAR(r.x[0], 10.0, 1e-9);
	// dual y = (1, 0) >= 0 with A^T y = c certifies value <= b.y = 10
	EXPECT_LE(r.value, 10.0 + 1e-9);

	LpResult m = solve_lp(col({1, -1}), vec({10, 0}), vec({1}), Sense::Minimize);
	ASSERT_EQ(m.status, LpStatus::Optimal);
	EXPECT_NEAR(m.value, 0.0, 1e-9);
}

TEST(Lp, Unbounded)
{
	LpResult r = solve_lp(col({-1}), vec({0}), vec({1}));
	EXPECT_EQ(r.status, LpStatus::Unbounded);
}

TEST(Lp, Infeasible)
{
	LpResult r = solve_lp(col({1, -1}), vec({-1, -1}), vec({0}));
	EXPECT_EQ(r.status, LpStatus::Infeasible);
}

TEST(Lp, FreeVariablesNegativeOptimum)
{
	// max x + y s.t. x <= -2, y <= -3
	MatrixXd A(2, 2);
	A << 1, 0, 0, 1;
	LpResult r = solve_lp(A, vec({-2, -3}), vec({1, 1}));
	ASSERT_EQ(r.status, LpStatus::Optimal);
	EXPECT_NEAR(r.value, -5.0, 1e-9);
}

TEST(Lp, DimensionMismatch)
{
	EXPECT_THROW(solve_lp(col({1}), vec({1, 2}), vec({1})), ContractError);
	EXPECT_THROW(solve_lp(col({1}), vec({std::nan("")}), vec({1})), ContractError);
}

TEST(Lp, DegenerateVertex)
{
	// many constraints through the optimum (1,1)
	MatrixXd A(6, 2);
	A << 1, 0, 0, 1, 1, 1, 2, 1, 1, 2, -1, -1;
	LpResult r = solve_lp(A, vec({1, 1, 2, 3, 3, 0}), vec({1, 1}));
	ASSERT_EQ(r.status, LpStatus::Optimal);
	EXPECT_NEAR(r.value, 2.0, 1e-9);
}

/* Random feasible LPs: optimum is feasible and at least as good as random
 * feasible points, and matches a hand-built dual bound on boxes. */
TEST(Lp, RandomProperty)
{
	std::mt19937_64 rng(4);
	std::normal_distribution<double> g;
	for (int t = 0; t < 200; ++t) {
		const Eigen::Index n = 2 + t % 5, m = n + 2 + t % 7;
		MatrixXd A(m + 2 * n, n);
		VectorXd b(m + 2 * n);
		for (Eigen::Index i = 0; i < m; ++i) {
			for (Eigen::Index j = 0; j < n; ++j)
				A(i, j) = g(rng);
			b[i] = 1.0 + std::abs(g(rng)); // origin is feasible
		}
		A.bottomRows(2 * n).setZero();
		for (Eigen::Index j = 0; j < n; ++j) {
			A(m + 2 * j, j) = 1.0;
			A(m + 2 * j + 1, j) = -1.0;
			b[m + 2 * j] = b[m + 2 * j + 1] = 5.0;
		}
		VectorXd c(n);
		for (Eigen::Index j = 0; j < n; ++j)
			c[j] = g(rng);
		LpResult r = solve_lp(A, b, c);
		ASSERT_EQ(r.status, LpStatus::Optimal) << "trial " << t;
		VectorXd slack = b - A * r.x;
		for (Eigen::Index i = 0; i < slack.size(); ++i)
			EXPECT_GE(slack[i], -1e-7 * (1 + std::abs(b[i])));
		// the box alone bounds the value by 5 |c|_1
		EXPECT_LE(r.value, 5.0 * c.lpNorm<1>() + 1e-9);
		std::uniform_real_distribution<double> u(-5, 5);
		for (int k = 0; k < 50; ++k) {
			VectorXd x(n);
			for (Eigen::Index j = 0; j < n; ++j)
				x[j] = u(rng);
			if (((A * x).array() <= b.array()).all())
				EXPECT_LE(c.dot(x), r.value + 1e-9);
		}
	}
}
