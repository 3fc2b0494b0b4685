/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/polytope.hpp"

#include "ttc/errors.hpp"
#include "ttc/lp.hpp"

#include <cmath>
#include <limits>

namespace ttc {

Polytope::Polytope(Eigen::MatrixXd a, Eigen::VectorXd rhs)
: A(std::move(a)), b(std::move(rhs))
{
	if (A.rows() != b.size())
		throw ContractError("polytope: A and b disagree on the row count");
}

Polytope Polytope::box(const Eigen::VectorXd &lo, const Eigen::VectorXd &hi)
{
	const Eigen::Index n = lo.size();
	if (hi.size() != n)
		throw ContractError("box: bound dimensions differ");
	Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * n, n);
	Eigen::VectorXd b(2 * n);
	for (Eigen::Index j = 0; j < n; ++j) {
		A(2 * j, j) = 1.0;
		b[2 * j] = hi[j];
		A(2 * j + 1, j) = -1.0;
		b[2 * j + 1] = -lo[j];
	}
	return {std::move(A), std::move(b)};
}

Polytope build_polytope(const Cube &cube, const AtomMap &atoms, std::size_t dim)
{
	std::vector<std::pair<const LinearAtom *, bool>> rows;
	for (const auto &l : cube.literals) {
		if (l.input >= atoms.size())
			throw ContractError("cube literal refers to an unknown input");
		if (atoms.is_theory(l.input))
			rows.emplace_back(&atoms[l.input].atom, l.positive);
	}
	if (rows.empty())
		throw UnboundedError("unbounded region: cube has no theory literals");

	const auto n = static_cast<Eigen::Index>(dim);
	Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), n);
	Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
	for (std::size_t i = 0; i < rows.size(); ++i) {
		const auto &[atom, positive] = rows[i];
		double s = positive ? 1.0 : -1.0;
		auto r = static_cast<Eigen::Index>(i);
		for (const auto &[j, c] : atom->coeffs) {
			if (j >= dim)
				throw ContractError("atom variable outside the polytope dimension");
			A(r, static_cast<Eigen::Index>(j)) = s * c.value;
		}
		b[r] = s * atom->bound.value;
	}
	return {std::move(A), std::move(b)};
}

bool contains(const Polytope &P, const Eigen::VectorXd &x, const Tolerances &tol)
{
	if (x.size() != P.dim())
		throw ContractError("contains: point dimension " + std::to_string(x.size()) +
		                    " does not match polytope dimension " + std::to_string(P.dim()));
	for (Eigen::Index i = 0; i < P.facets(); ++i)
		if (P.A.row(i).dot(x) > P.b[i] + tol.contains * (1.0 + std::abs(P.b[i])))
			return false;
	return true;
}

ChebyshevBall chebyshev(const Polytope &P, const Tolerances &tol)
{
	const Eigen::Index m = P.facets(), n = P.dim();
	ChebyshevBall out;
	if (m == 0) {
		out.center = Eigen::VectorXd::Zero(n);
		out.radius = std::numeric_limits<double>::infinity();
		out.status = BallStatus::Unbounded;
		return out;
	}
	Eigen::MatrixXd A(m + 1, n + 1);
	Eigen::VectorXd b(m + 1);
	A.topLeftCorner(m, n) = P.A;
	A.topRightCorner(m, 1) = P.A.rowwise().norm();
	b.head(m) = P.b;
	A.row(m).setZero();
	A(m, n) = -1.0;
	b[m] = 0.0;
	Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
	c[n] = 1.0;

	LpResult r = solve_lp(A, b, c, Sense::Maximize, tol);
	switch (r.status) {
	case LpStatus::Infeasible:
		out.center = Eigen::VectorXd::Zero(n);
		out.radius = -1.0;
		out.status = BallStatus::Empty;
		return out;
	case LpStatus::Unbounded:
		out.center = Eigen::VectorXd::Zero(n);
		out.radius = std::numeric_limits<double>::infinity();
		out.status = BallStatus::Unbounded;
		return out;
	case LpStatus::Optimal:
		break;
	}
	out.center = r.x.head(n);
	out.radius = std::max(0.0, r.x[n]);
	out.status = out.radius <= tol.degenerate_radius ? BallStatus::Degenerate : BallStatus::Interior;
	return out;
}

Polytope remove_redundant(const Polytope &P, const Tolerances &tol)
{
	std::vector<char> keep(static_cast<std::size_t>(P.facets()), 1);
	const Eigen::Index n = P.dim();
	for (Eigen::Index i = 0; i < P.facets(); ++i) {
		Eigen::Index live = 0;
		for (char k : keep)
			live += k;
		Eigen::MatrixXd A(live, n);
		Eigen::VectorXd b(live);
		Eigen::Index r = 0;
		for (Eigen::Index j = 0; j < P.facets(); ++j) {
			if (!keep[static_cast<std::size_t>(j)])
				continue;
			A.row(r) = P.A.row(j);
			b[r] = j == i ? P.b[j] + 1.0 : P.b[j];
			++r;
		}
		LpResult res = solve_lp(A, b, P.A.row(i).transpose(), Sense::Maximize, tol);
		if (res.status == LpStatus::Optimal &&
		    res.value <= P.b[i] + tol.redundancy * (1.0 + std::abs(P.b[i])))
			keep[static_cast<std::size_t>(i)] = 0;
	}
	Eigen::Index live = 0;
	for (char k : keep)
		live += k;
	Eigen::MatrixXd A(live, n);
	Eigen::VectorXd b(live);
	Eigen::Index r = 0;
	for (Eigen::Index j = 0; j < P.facets(); ++j) {
		if (!keep[static_cast<std::size_t>(j)])
			continue;
		A.row(r) = P.A.row(j);
		b[r] = P.b[j];
		++r;
	}
	return {std::move(A), std::move(b)};
}

Box bounding_box(const Polytope &P, const Tolerances &tol)
{
	const Eigen::Index n = P.dim();
	Box box{Eigen::VectorXd(n), Eigen::VectorXd(n)};
	for (Eigen::Index k = 0; k < n; ++k) {
		Eigen::VectorXd c = Eigen::VectorXd::Unit(n, k);
		for (Sense s : {Sense::Maximize, Sense::Minimize}) {
			LpResult r = solve_lp(P.A, P.b, c, s, tol);
			if (r.status == LpStatus::Unbounded)
				throw UnboundedError("unbounded polytope: no finite bound on coordinate " +
				                     std::to_string(k));
			if (r.status == LpStatus::Infeasible)
				throw ContractError("bounding_box of an empty polytope");
			(s == Sense::Maximize ? box.hi : box.lo)[k] = r.value;
		}
	}
	return box;
}

} // namespace ttc
