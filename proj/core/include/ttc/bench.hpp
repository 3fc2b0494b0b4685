/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/polytope.hpp"
#include "ttc/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ttc {

enum class Shape { Cube, Simplex };

struct BenchSpec {
	std::size_t n = 2;
	std::size_t m = 1;
	Shape shape = Shape::Cube;
	std::uint64_t seed = 0;
	/* no rotation; cubes then become boxes the exact oracle can handle */
	bool axis_aligned = false;
};

struct BenchInstance {
	std::string smt2;
	/* the polytopes exactly as written (coefficients after rounding) */
	std::vector<Polytope> polytopes;
	/* side lengths (cubes) or scale factors (simplices) */
	std::vector<double> sizes;
};

/* Or of m conjunctions over x0..x{n-1}. Cubes have sides in [0.5, 2],
 * simplices a scale in [0.5, 2]; each body is rotated by n random Givens
 * rotations (unless axis-aligned). The first center is uniform in
 * [-5, 5]^n, each later one sits half the previous diameter away in a
 * random direction. Coefficients carry 9 decimals. */
BenchInstance gen_instance(const BenchSpec &spec);

/* Exact volume of a union of boxes by inclusion-exclusion over non-empty
 * intersections. Refuses more than 20 boxes. */
double exact_box_union(const std::vector<Box> &boxes);

/* The box an axis-aligned polytope describes. Throws UnsupportedError for
 * rows with more than one nonzero entry and UnboundedError for a missing
 * side. */
Box box_of(const Polytope &P);

struct McEstimate {
	double estimate = 0.0;
	/* 99% normal-approximation confidence half-width */
	double half_width = 0.0;
	double region_volume = 0.0;
	std::size_t samples = 0;
	std::size_t hits = 0;
};

/* Hit-or-miss Monte Carlo over `region` (default: the joint bounding box). */
McEstimate grid_mc_union(const std::vector<Polytope> &polys, std::size_t samples, Rng &rng,
                         const std::optional<Box> &region = std::nullopt);

} // namespace ttc
