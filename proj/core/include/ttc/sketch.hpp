/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/lattice.hpp"
#include "ttc/polytope.hpp"
#include "ttc/rng.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ttc {

/* Poisson variate: sequential-search inversion for lambda <= 10, Hormann's
 * transformed rejection (PTRS) above. */
std::uint64_t poisson(double lambda, Rng &rng);

/* Sketch capacity: max(24 ln(24/delta) / ((1-e) e^2), 6 (ln(6/delta) + ln m))
 * with e = eps / 12. */
double thresh(double eps, double delta, std::size_t m);

/* Number of successes in `copies` fair coin flips. */
std::uint64_t binomial_half(std::uint64_t copies, Rng &rng);

/* Multiset X of lattice keys sampled at rate p = 2^-j.
 *
 * Masses handed to the sketch are volumes; one unit of volume counts as
 * 2^log2_unit units of sketch mass. With log2_unit = n preci log2(10) the
 * sketch counts lattice cells of side 10^-preci, which is the measure the
 * concentration argument is about. log2_unit = 0 counts raw volume. */
class Sketch {
public:
	using Map = std::unordered_map<LatticePoint, std::uint64_t, LatticePointHash>;

	Sketch(double thresh, int preci, double log2_unit = 0.0);

	double thresh() const { return thresh_; }
	int preci() const { return preci_; }
	double log2_unit() const { return log2_unit_; }
	int p_exponent() const { return j_; }
	/* 2^-j; underflows to 0 past j = 1074 */
	double p() const;
	std::uint64_t size() const { return size_; }
	const Map &keys() const { return keys_; }

	/* |X| / p, converted back to volume */
	double estimate() const;

	/* drops every copy of every key whose embedding lies in P; returns the
	 * number of copies removed */
	std::uint64_t remove_inside(const Polytope &P);
	/* keeps each copy with probability 1/2 and halves p */
	void thin(Rng &rng);
	void append(const std::vector<LatticePoint> &points);

private:
	double thresh_;
	int preci_;
	double log2_unit_;
	int j_ = 0;
	std::uint64_t size_ = 0;
	Map keys_;
};

struct ProcessRecord {
	std::uint64_t removed = 0;
	std::uint64_t drawn = 0;        // N_i
	int halvings = 0;
	std::uint64_t size_after = 0;
	int p_exponent = 0;
};

/* One iteration of the union loop for a body P of volume t (T = t in sketch
 * mass units):
 *   1. remove the keys of X inside P
 *   2. while p >= thresh / T: thin
 *   3. N = Poisson(T p); while N + |X| > thresh: thin, redraw N
 *   4. append N lattice samples of P
 * t = 0 leaves the sketch untouched. `rng` drives thinning and N, `sampler`
 * the lattice samples. */
ProcessRecord process_polytope(Sketch &s, const Polytope &P, double t, Rng &rng, Rng &sampler,
                               const SamplerConfig &cfg = {});

} // namespace ttc
