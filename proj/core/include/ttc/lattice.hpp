/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/config.hpp"
#include "ttc/polytope.hpp"
#include "ttc/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace ttc {

/* Largest supported precision: keys stay in int64 for coordinates up to
 * about 9.2 in magnitude at this setting, far more for smaller preci. */
inline constexpr int kMaxPrecision = 18;

/* Integer coordinates of a point of the lattice 10^-preci Z^n. Equality and
 * hashing look at the integers only. */
struct LatticePoint {
	std::vector<std::int64_t> k;

	Eigen::VectorXd embed(int preci) const;

	friend bool operator==(const LatticePoint &, const LatticePoint &) = default;
};

struct LatticePointHash {
	std::size_t operator()(const LatticePoint &p) const noexcept;
};

enum class LogBase { E, Two, Ten };

struct PrecisionReport {
	int preci = 0;
	double eta = 0.0;
	std::size_t total_facets = 0;    // r
	double gamma = 0.0;              // required radius
	std::vector<double> inscribed;   // per polytope
	double max_ratio = 1.0;
};

/* gamma = (16 n / eta) sqrt(log(4 r / eta)), r the total facet count;
 * preci = ceil(log10(max(1, max_i gamma / inscribed_i))). Throws
 * ContractError for a non-positive radius and NumericalError when the
 * precision would exceed kMaxPrecision. */
PrecisionReport precision_from_radii(Eigen::Index n, std::size_t total_facets,
                                     std::span<const double> inscribed, double eta,
                                     LogBase base = LogBase::E);

/* Same, computing each inscribed radius with chebyshev(). */
PrecisionReport get_precision(const std::vector<Polytope> &polys, double eta,
                              LogBase base = LogBase::E);

/* Unbiased randomized rounding of every coordinate to the lattice. */
LatticePoint round_to_lattice(const Eigen::VectorXd &x, int preci, Rng &rng);

struct SamplerConfig {
	/* rounding attempts per walk sample before walking on */
	int roundings = 8;
	/* failure window: error if more than 99% of this many attempts fail */
	std::size_t window = 1000;
	std::size_t burn_in = 10;
	/* hit-and-run steps per sample; 0 means the dimension */
	std::size_t walk_length = 0;
	Tolerances tol{};
};

/* N lattice points of P: hit-and-run sample, randomized rounding, accept
 * if the lattice point lies in P. Throws NumericalError("lattice too
 * coarse") when acceptance collapses. */
std::vector<LatticePoint> generate_samples(const Polytope &P, std::size_t N, int preci, Rng &rng,
                                           const SamplerConfig &cfg = {});

} // namespace ttc
