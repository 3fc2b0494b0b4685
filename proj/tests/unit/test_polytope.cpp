/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/bench.hpp"
#include "ttc/cubes.hpp"
#include "ttc/errors.hpp"
#include "ttc/polytope.hpp"
#include "ttc/smtlib.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace ttc;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd v2(double a, double b)
{
	return (VectorXd(2) << a, b).finished();
}

Polytope triangle()
{
	MatrixXd A(3, 2);
	A << -1, 0, 0, -1, 1, 1;
	return Polytope(A, (VectorXd(3) << 0, 0, 1).finished());
}

Polytope square(double lo, double hi)
{
	return Polytope::box(v2(lo, lo), v2(hi, hi));
}

Polytope rotated_cube(Eigen::Index n, std::uint64_t seed)
{
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> g;
	MatrixXd M(n, n);
	for (Eigen::Index i = 0; i < n; ++i)
		for (Eigen::Index j = 0; j < n; ++j)
			M(i, j) = g(rng);
	Eigen::HouseholderQR<MatrixXd> qr(M);
	MatrixXd Q = qr.householderQ();
	MatrixXd A(2 * n, n);
	A << Q.transpose(), -Q.transpose();
	return Polytope(A, VectorXd::Ones(2 * n));
}

} // namespace

TEST(Polytope, BuildFromTwoSquaresCubes)
{
	Formula f = parse_smt2_file(TTC_DATA_DIR "/two_squares.smt2");
	Abstraction abs = abstract(f.root);
	auto cubes = enumerate_cubes(abs.circuit);
	ASSERT_EQ(cubes.size(), 2u);
	std::vector<Box> boxes;
	for (const auto &c : cubes) {
		Polytope P = build_polytope(c, abs.atoms, 2);
		EXPECT_EQ(P.facets(), 4);
		boxes.push_back(box_of(P));
	}
	std::sort(boxes.begin(), boxes.end(), [](const Box &a, const Box &b) { return a.lo[0] < b.lo[0]; });
	EXPECT_EQ(boxes[0].lo, v2(10, 10));
	EXPECT_EQ(boxes[0].hi, v2(30, 30));
	EXPECT_EQ(boxes[1].lo, v2(20, 20));
	EXPECT_EQ(boxes[1].hi, v2(40, 40));
}

TEST(Polytope, BuildNegativeLiteralAndDegenerate)
{
	Formula f = parse_smt2("(set-logic QF_LRA)(declare-fun x () Real)(assert (<= x 10))");
	Abstraction abs = abstract(f.root);
	Cube both{{{0, true}}};
	Polytope P = build_polytope(both, abs.atoms, 1);
	ASSERT_EQ(P.facets(), 1);
	EXPECT_EQ(P.A(0, 0), 1.0);
	EXPECT_EQ(P.b[0], 10.0);
	// {x <= 10, not x <= 10} through two rows
	Polytope Q(MatrixXd((MatrixXd(2, 1) << 1, -1).finished()), (VectorXd(2) << 10, -10).finished());
	Cube neg{{{0, false}}};
	Polytope N = build_polytope(neg, abs.atoms, 1);
	EXPECT_EQ(N.A(0, 0), -1.0);
	EXPECT_EQ(N.b[0], -10.0);
	ChebyshevBall ball = chebyshev(Q);
	EXPECT_EQ(ball.status, BallStatus::Degenerate);
	EXPECT_NEAR(ball.radius, 0.0, 1e-9);
}

TEST(Polytope, BuildSimplexCube)
{
	Formula f = parse_smt2("(set-logic QF_LRA)(declare-fun x () Real)(declare-fun y () Real)"
	                       "(assert (and (>= x 0) (>= y 0) (<= (+ x y) 1)))");
	Abstraction abs = abstract(f.root);
	auto cubes = enumerate_cubes(abs.circuit);
	ASSERT_EQ(cubes.size(), 1u);
	Polytope P = build_polytope(cubes[0], abs.atoms, 2);
	EXPECT_EQ(P.facets(), 3);
	EXPECT_TRUE(contains(P, v2(0.2, 0.2)));
	EXPECT_FALSE(contains(P, v2(0.6, 0.6)));
}

TEST(Polytope, BuildBooleanOnlyIsUnbounded)
{
	Formula f = parse_smt2("(set-logic QF_LRA)(declare-const a Bool)(declare-fun x () Real)"
	                       "(assert (or a (<= x 1)))");
	Abstraction abs = abstract(f.root);
	Cube only_bool{{{0, true}}};
	EXPECT_THROW(build_polytope(only_bool, abs.atoms, 1), UnboundedError);
}

TEST(Polytope, Contains)
{
	Polytope unit = square(0, 1);
	EXPECT_TRUE(contains(unit, v2(0.5, 0.5)));
	Polytope a = square(10, 30), b = square(20, 40);
	EXPECT_TRUE(contains(a, v2(25, 25)));
	EXPECT_TRUE(contains(b, v2(25, 25)));
	EXPECT_FALSE(contains(a, v2(15, 35)));
	EXPECT_FALSE(contains(b, v2(15, 35)));
	Polytope half(MatrixXd::Ones(1, 1), VectorXd::Constant(1, 10.0));
	EXPECT_TRUE(contains(half, VectorXd::Constant(1, 10.0)));
	EXPECT_FALSE(contains(half, VectorXd::Constant(1, 10.001)));
	EXPECT_THROW(contains(unit, VectorXd::Zero(3)), ContractError);
}

TEST(Polytope, Chebyshev)
{
	ChebyshevBall s = chebyshev(square(10, 30));
	EXPECT_EQ(s.status, BallStatus::Interior);
	EXPECT_NEAR(s.radius, 10.0, 1e-9);
	EXPECT_NEAR(s.center[0], 20.0, 1e-9);
	EXPECT_NEAR(s.center[1], 20.0, 1e-9);

	ChebyshevBall t = chebyshev(triangle());
	const double r = 1.0 / (2.0 + std::sqrt(2.0));
	EXPECT_NEAR(t.radius, r, 1e-9);
	EXPECT_NEAR(t.center[0], r, 1e-9);
	EXPECT_NEAR(t.center[1], r, 1e-9);

	Polytope empty(MatrixXd((MatrixXd(2, 1) << 1, -1).finished()), (VectorXd(2) << -1, -1).finished());
	ChebyshevBall e = chebyshev(empty);
	EXPECT_EQ(e.status, BallStatus::Empty);
	EXPECT_EQ(e.radius, -1.0);

	Polytope half(MatrixXd::Ones(1, 1), VectorXd::Constant(1, 10.0));
	EXPECT_EQ(chebyshev(half).status, BallStatus::Unbounded);
}

/* Inscribed ball property on random bodies. */
TEST(Polytope, ChebyshevInscribedProperty)
{
	std::mt19937_64 rng(8);
	std::normal_distribution<double> g;
	for (int t = 0; t < 20; ++t) {
		const Eigen::Index n = 2 + t % 4;
		const Eigen::Index m = n + 1 + t % 6;
		MatrixXd A(m + 2 * n, n);
		VectorXd b(m + 2 * n);
		for (Eigen::Index i = 0; i < m; ++i) {
			for (Eigen::Index j = 0; j < n; ++j)
				A(i, j) = g(rng);
			b[i] = 0.5 + std::abs(g(rng));
		}
		A.bottomRows(2 * n).setZero();
		for (Eigen::Index j = 0; j < n; ++j) {
			A(m + 2 * j, j) = 1;
			A(m + 2 * j + 1, j) = -1;
			b[m + 2 * j] = b[m + 2 * j + 1] = 3;
		}
		Polytope P(A, b);
		ChebyshevBall ball = chebyshev(P);
		ASSERT_EQ(ball.status, BallStatus::Interior);
		EXPECT_TRUE(contains(P, ball.center));
		bool escaped = false;
		for (int k = 0; k < 100; ++k) {
			VectorXd d(n);
			for (Eigen::Index j = 0; j < n; ++j)
				d[j] = g(rng);
			d.normalize();
			EXPECT_TRUE(contains(P, ball.center + (ball.radius - 1e-6) * d));
			escaped |= !contains(P, ball.center + ball.radius * 1.01 * d);
		}
		// along the normal of a tight row the ball escapes for sure
		for (Eigen::Index i = 0; i < P.facets(); ++i) {
			VectorXd d = P.A.row(i).transpose().normalized();
			escaped |= !contains(P, ball.center + ball.radius * 1.01 * d);
		}
		EXPECT_TRUE(escaped);
	}
}

TEST(Polytope, RemoveRedundant)
{
	Polytope P(MatrixXd((MatrixXd(3, 1) << 1, 1, -1).finished()), (VectorXd(3) << 10, 20, 0).finished());
	Polytope Q = remove_redundant(P);
	ASSERT_EQ(Q.facets(), 2);
	EXPECT_EQ(Q.b[0], 10.0);
	EXPECT_EQ(Q.b[1], 0.0);

	Polytope unit = square(0, 1);
	MatrixXd A(5, 2);
	A << unit.A, unit.A.row(0);
	VectorXd b(5);
	b << unit.b, unit.b[0];
	EXPECT_EQ(remove_redundant(Polytope(A, b)).facets(), 4);
}

TEST(Polytope, RemoveRedundantRotatedCube)
{
	Polytope C = rotated_cube(6, 12);
	std::mt19937_64 rng(2);
	std::normal_distribution<double> g;
	MatrixXd A(15, 6);
	VectorXd b(15);
	A.topRows(12) = C.A;
	b.head(12) = C.b;
	for (int k = 0; k < 3; ++k) {
		VectorXd a(6);
		for (int j = 0; j < 6; ++j)
			a[j] = g(rng);
		A.row(12 + k) = a.transpose();
		// the cube lies in |x|_inf... bounded by sqrt(6); a.x <= |a|_1 sqrt(6) is loose
		b[12 + k] = a.lpNorm<1>() * std::sqrt(6.0) + 1.0;
	}
	Polytope P(A, b);
	Polytope Q = remove_redundant(P);
	EXPECT_EQ(Q.facets(), 12);

	std::uniform_real_distribution<double> u(-3, 3);
	for (int t = 0; t < 10000; ++t) {
		VectorXd x(6);
		for (int j = 0; j < 6; ++j)
			x[j] = u(rng);
		ASSERT_EQ(contains(P, x), contains(Q, x));
	}
}

TEST(Polytope, BoundingBox)
{
	Box s = bounding_box(square(10, 30));
	EXPECT_NEAR(s.lo[0], 10, 1e-9);
	EXPECT_NEAR(s.hi[1], 30, 1e-9);
	Box t = bounding_box(triangle());
	EXPECT_NEAR(t.lo[0], 0, 1e-9);
	EXPECT_NEAR(t.lo[1], 0, 1e-9);
	EXPECT_NEAR(t.hi[0], 1, 1e-9);
	EXPECT_NEAR(t.hi[1], 1, 1e-9);
	Polytope half(-MatrixXd::Ones(1, 1), VectorXd::Zero(1));
	EXPECT_THROW(bounding_box(half), UnboundedError);
}

TEST(UnionFormat, RoundTrip)
{
	std::vector<Polytope> polys{square(10, 30), square(20, 40), triangle()};
	std::ostringstream out;
	write_union(out, polys, 2);
	std::istringstream in(out.str());
	auto back = read_union(in);
	ASSERT_EQ(back.size(), 3u);
	for (std::size_t i = 0; i < 3; ++i) {
		EXPECT_EQ(back[i].A, polys[i].A);
		EXPECT_EQ(back[i].b, polys[i].b);
	}
}

TEST(UnionFormat, Comments)
{
	std::istringstream in("# two squares\n2 1\n# first\n4\n-1 0 -10\n1 0 30 # right\n0 -1 -10\n0 1 30\n");
	auto polys = read_union(in);
	ASSERT_EQ(polys.size(), 1u);
	EXPECT_EQ(polys[0].facets(), 4);
	EXPECT_EQ(polys[0].b[1], 30.0);
}

TEST(UnionFormat, Malformed)
{
	auto bad = [](const std::string &text) {
		std::istringstream in(text);
		EXPECT_THROW(read_union(in), UnsupportedError) << text;
	};
	bad("");
	bad("# nothing\n");
	bad("2 1\n1\n1 0\n");            // wrong arity
	bad("2 1\n1\n0 0 1\n");          // zero row
	bad("2 2\n1\n1 0 1\n");          // missing polytope
	bad("2 1\n1\n1 0 1\n7\n");       // trailing data
	bad("0 1\n");
	bad("2 1\n1\n1 x 1\n");
}

TEST(UnionFormat, File)
{
	auto polys = read_union_file(TTC_DATA_DIR "/two_squares.poly");
	EXPECT_EQ(polys.size(), 2u);
	EXPECT_THROW(read_union_file(TTC_DATA_DIR "/missing.poly"), Error);
}
