/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

namespace ttc {

/* Every numerical tolerance used by the geometric kernels. Absolute and
 * relative parts combine as tol * (1 + |rhs|) wherever a right-hand side is
 * involved. */
struct Tolerances {
	/* membership: a.x <= b + contains * (1 + |b|) */
	double contains = 1e-9;
	double lp_pivot = 1e-9;
	double lp_feasibility = 1e-7;
	/* inscribed radius at or below this marks the body degenerate */
	double degenerate_radius = 1e-8;
	double redundancy = 1e-7;
	/* shortest chord hit-and-run accepts before resampling a direction */
	double chord_min = 1e-12;
};

inline const Tolerances &default_tolerances()
{
	static const Tolerances tol{};
	return tol;
}

} // namespace ttc
