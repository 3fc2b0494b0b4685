/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/circuit.hpp"
#include "ttc/config.hpp"
#include "ttc/cubes.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace ttc {

/* {x in R^n : A x <= b}. */
struct Polytope {
	Eigen::MatrixXd A;
	Eigen::VectorXd b;

	Polytope() = default;
	Polytope(Eigen::MatrixXd a, Eigen::VectorXd rhs);

	Eigen::Index dim() const { return A.cols(); }
	Eigen::Index facets() const { return A.rows(); }

	/* Axis-aligned box [lo, hi]. */
	static Polytope box(const Eigen::VectorXd &lo, const Eigen::VectorXd &hi);
};

/* One row per theory literal of the cube: positive a.x <= b gives (a, b),
 * negative gives (-a, -b). Boolean literals add nothing. Throws
 * UnboundedError if no theory literal remains. */
Polytope build_polytope(const Cube &cube, const AtomMap &atoms, std::size_t dim);

bool contains(const Polytope &P, const Eigen::VectorXd &x, const Tolerances &tol = default_tolerances());

enum class BallStatus { Interior, Degenerate, Empty, Unbounded };

struct ChebyshevBall {
	Eigen::VectorXd center;
	/* -1 when empty, +inf when unbounded */
	double radius = -1.0;
	BallStatus status = BallStatus::Empty;
};

/* Largest inscribed ball: max r s.t. a_i.x + |a_i| r <= b_i, r >= 0. */
ChebyshevBall chebyshev(const Polytope &P, const Tolerances &tol = default_tolerances());

/* Drops, one at a time in row order, every row implied by the rows still
 * present. The feasible set is unchanged. */
Polytope remove_redundant(const Polytope &P, const Tolerances &tol = default_tolerances());

struct Box {
	Eigen::VectorXd lo;
	Eigen::VectorXd hi;
	double volume() const { return (hi - lo).prod(); }
};

/* Tight axis-aligned bounds from 2n LPs. Throws UnboundedError. */
Box bounding_box(const Polytope &P, const Tolerances &tol = default_tolerances());

/* Union file: "n m", then per polytope a facet count f and f rows
 * "a_1 ... a_n b". '#' starts a comment. */
std::vector<Polytope> read_union(std::istream &in);
std::vector<Polytope> read_union_file(const std::string &path);
void write_union(std::ostream &out, const std::vector<Polytope> &polys, Eigen::Index dim);

} // namespace ttc
