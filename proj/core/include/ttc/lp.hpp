/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/config.hpp"

#include <Eigen/Dense>

namespace ttc {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

struct LpResult {
	LpStatus status = LpStatus::Infeasible;
	Eigen::VectorXd x;     // set when Optimal
	double value = 0.0;    // objective at x when Optimal
	int iterations = 0;
};

/* Optimizes c.x over {x free : A x <= b} with a dense two-phase tableau
 * simplex. Dantzig pricing, switching to Bland's rule after 10*m
 * consecutive degenerate pivots. Throws NumericalError after 50*(m+n)
 * pivots. */
LpResult solve_lp(const Eigen::MatrixXd &A, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                  Sense sense = Sense::Maximize, const Tolerances &tol = default_tolerances());

} // namespace ttc
