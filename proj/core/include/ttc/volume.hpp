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
#include <optional>
#include <vector>

namespace ttc {

/* Polytope, optionally intersected with a Euclidean ball. */
struct Body {
	Polytope P;
	std::optional<double> ball_radius;
	Eigen::VectorXd ball_center;   // empty means the origin
};

/* Hit-and-run chain over a Body. Keeps the slack vector b - A x up to date
 * so a step costs one matrix-vector product. */
class HitAndRunWalker {
public:
	HitAndRunWalker(const Body &body, Eigen::VectorXd start,
	                const Tolerances &tol = default_tolerances());

	const Eigen::VectorXd &point() const { return x_; }

	/* changes the ball radius; the current point must stay inside */
	void set_ball_radius(std::optional<double> radius) { ball_radius_ = radius; }

	/* one step along a uniformly random direction */
	void step(Rng &rng);
	/* one step along the given unit direction; false if the chord is pinched */
	bool step_along(const Eigen::VectorXd &d, Rng &rng);
	void walk(std::size_t steps, Rng &rng);

	std::uint64_t steps_taken() const { return steps_; }

private:
	const Body &body_;
	const Tolerances &tol_;
	std::optional<double> ball_radius_;
	Eigen::VectorXd x_;
	Eigen::VectorXd slack_;
	Eigen::VectorXd Ad_;
	Eigen::VectorXd d_;
	std::uint64_t steps_ = 0;

	void refresh_slack();
};

/* A single hit-and-run step from x. Throws NumericalError when 100 random
 * directions in a row give a chord shorter than tol.chord_min. */
Eigen::VectorXd hit_and_run_step(const Body &body, const Eigen::VectorXd &x, Rng &rng,
                                 const Tolerances &tol = default_tolerances());

/* Same with a fixed unit direction. */
Eigen::VectorXd hit_and_run_step(const Body &body, const Eigen::VectorXd &x,
                                 const Eigen::VectorXd &direction, Rng &rng,
                                 const Tolerances &tol = default_tolerances());

/* Run length of the multiphase estimator. Each phase starts with
 * N0 samples and doubles until the running ratio moves less than the
 * convergence tolerance between the estimate at N/2 and at N.
 *
 *   Fixed:   N0 = ceil(initial / eps^2),                        tol = eps / (2 l)
 *   Scaled:  N0 = max(min_samples, ceil(initial * l / eps^2)),  tol = eps / sqrt(l)
 *
 * where l is the number of phases. Fixed with initial = 400 is the textbook
 * rule; it needs millions of samples per phase beyond a few dimensions. */
struct VolumeConfig {
	enum class Schedule { Fixed, Scaled };
	Schedule schedule = Schedule::Scaled;
	double initial = 0.5;
	std::size_t min_samples = 4000;
	int max_doublings = 6;
	/* samples discarded at the start of each phase */
	std::size_t burn_in = 10;
	/* hit-and-run steps per sample; 0 means the dimension */
	std::size_t walk_length = 0;
	Tolerances tol{};
};

struct VolumeEstimate {
	double value = 0.0;
	std::size_t phases = 0;
	std::vector<std::size_t> samples_per_phase;
	std::vector<double> ratios;
	bool converged = true;
	std::uint64_t steps = 0;
};

/* Multiphase Monte Carlo volume: K_i = P cap Ball(c, r 2^{i/n}) for
 * i = 0..l with c, r the Chebyshev ball and r 2^{l/n} >= the distance from
 * c to the farthest bounding-box corner. vol(P) = vol(K_0) / prod ratio_i.
 *
 * Degenerate or empty polytopes give 0. Throws UnboundedError,
 * NonConvergenceError (with the estimate so far) after max_doublings. */
VolumeEstimate compute_volume(const Polytope &P, double eps, double delta, Rng &rng,
                              const VolumeConfig &cfg = {});

/* Volume of the n-ball of radius r, as a logarithm. */
double log_ball_volume(Eigen::Index n, double r);

} // namespace ttc
