/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/volume.hpp"

#include "ttc/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ttc {

namespace {

constexpr int kDirectionRetries = 100;
constexpr std::uint64_t kSlackRefresh = 64;

bool inside_ball(const Body &body, const Eigen::VectorXd &x, std::optional<double> radius,
                 const Tolerances &tol)
{
	if (!radius)
		return true;
	double r2 = body.ball_center.size() ? (x - body.ball_center).squaredNorm() : x.squaredNorm();
	return std::sqrt(r2) <= *radius * (1.0 + tol.contains) + tol.contains;
}

} // namespace

double log_ball_volume(Eigen::Index n, double r)
{
	double h = 0.5 * static_cast<double>(n);
	return h * std::log(std::numbers::pi) + static_cast<double>(n) * std::log(r) - std::lgamma(h + 1.0);
}

HitAndRunWalker::HitAndRunWalker(const Body &body, Eigen::VectorXd start, const Tolerances &tol)
: body_(body), tol_(tol), ball_radius_(body.ball_radius), x_(std::move(start))
{
	if (x_.size() != body_.P.dim())
		throw ContractError("walker start point has the wrong dimension");
	if (!contains(body_.P, x_, tol_) || !inside_ball(body_, x_, ball_radius_, tol_))
		throw ContractError("walker start point lies outside the body");
	refresh_slack();
	Ad_.resize(body_.P.facets());
	d_.resize(x_.size());
}

void HitAndRunWalker::refresh_slack()
{
	slack_ = body_.P.b - body_.P.A * x_;
}

bool HitAndRunWalker::step_along(const Eigen::VectorXd &d, Rng &rng)
{
	Ad_.noalias() = body_.P.A * d;
	double lo = -std::numeric_limits<double>::infinity();
	double hi = std::numeric_limits<double>::infinity();
	for (Eigen::Index i = 0; i < Ad_.size(); ++i) {
		double a = Ad_[i];
		double s = std::max(slack_[i], 0.0);
		if (a > 0.0)
			hi = std::min(hi, s / a);
		else if (a < 0.0)
			lo = std::max(lo, s / a);
	}
	if (ball_radius_) {
		double bd, q;
		if (body_.ball_center.size()) {
			Eigen::VectorXd y = x_ - body_.ball_center;
			bd = y.dot(d);
			q = y.squaredNorm() - *ball_radius_ * *ball_radius_;
		} else {
			bd = x_.dot(d);
			q = x_.squaredNorm() - *ball_radius_ * *ball_radius_;
		}
		double root = std::sqrt(std::max(bd * bd - q, 0.0));
		lo = std::max(lo, -bd - root);
		hi = std::min(hi, -bd + root);
	}
	if (std::isinf(lo) || std::isinf(hi))
		throw UnboundedError("hit-and-run chord is unbounded");
	if (!(hi - lo >= tol_.chord_min))
		return false;
	double t = uniform(rng, lo, hi);
	x_.noalias() += t * d;
	if (++steps_ % kSlackRefresh == 0)
		refresh_slack();
	else
		slack_.noalias() -= t * Ad_;
	return true;
}

void HitAndRunWalker::step(Rng &rng)
{
	for (int attempt = 0; attempt < kDirectionRetries; ++attempt) {
		for (Eigen::Index j = 0; j < d_.size(); ++j)
			d_[j] = standard_normal(rng);
		double norm = d_.norm();
		if (norm == 0.0)
			continue;
		d_ /= norm;
		if (step_along(d_, rng))
			return;
	}
	throw NumericalError("hit-and-run: chord pinched below " + std::to_string(tol_.chord_min) +
	                     " for " + std::to_string(kDirectionRetries) + " directions");
}

void HitAndRunWalker::walk(std::size_t steps, Rng &rng)
{
	for (std::size_t k = 0; k < steps; ++k)
		step(rng);
}

Eigen::VectorXd hit_and_run_step(const Body &body, const Eigen::VectorXd &x, Rng &rng,
                                 const Tolerances &tol)
{
	HitAndRunWalker w(body, x, tol);
	w.step(rng);
	return w.point();
}

Eigen::VectorXd hit_and_run_step(const Body &body, const Eigen::VectorXd &x,
                                 const Eigen::VectorXd &direction, Rng &rng,
                                 const Tolerances &tol)
{
	HitAndRunWalker w(body, x, tol);
	Eigen::VectorXd d = direction.normalized();
	if (!w.step_along(d, rng))
		throw NumericalError("hit-and-run: chord along the given direction is pinched");
	return w.point();
}

VolumeEstimate compute_volume(const Polytope &P, double eps, double delta, Rng &rng,
                              const VolumeConfig &cfg)
{
	if (!(eps > 0.0 && eps <= 1.0) || !(delta > 0.0 && delta <= 1.0))
		throw ContractError("compute_volume: eps and delta must lie in (0, 1]");
	const Tolerances &tol = cfg.tol;
	const Eigen::Index n = P.dim();
	VolumeEstimate est;

	ChebyshevBall ball = chebyshev(P, tol);
	if (ball.status == BallStatus::Empty || ball.status == BallStatus::Degenerate)
		return est;
	if (ball.status == BallStatus::Unbounded)
		throw UnboundedError("unbounded polytope: inscribed radius is infinite");
	Box box = bounding_box(P, tol);

	const Eigen::VectorXd &c = ball.center;
	const double r = ball.radius;
	double R2 = 0.0;
	for (Eigen::Index j = 0; j < n; ++j) {
		double a = box.hi[j] - c[j], b = box.lo[j] - c[j];
		R2 += std::max(a * a, b * b);
	}
	const double R = std::sqrt(R2);
	const auto dn = static_cast<double>(n);
	const auto phases = static_cast<std::size_t>(
		std::max(1.0, std::ceil(dn * std::log2(std::max(R / r, 1.0)) - 1e-12)));
	est.phases = phases;

	Body body{Polytope(P.A, P.b - P.A * c), std::nullopt, {}};
	HitAndRunWalker walker(body, Eigen::VectorXd::Zero(n), tol);
	const std::size_t walk = cfg.walk_length ? cfg.walk_length : static_cast<std::size_t>(n);

	const auto l = static_cast<double>(phases);
	double n0, conv;
	if (cfg.schedule == VolumeConfig::Schedule::Fixed) {
		n0 = std::ceil(cfg.initial / (eps * eps));
		conv = eps / (2.0 * l);
	} else {
		n0 = std::max(static_cast<double>(cfg.min_samples), std::ceil(cfg.initial * l / (eps * eps)));
		conv = eps / std::sqrt(l);
	}
	auto first = static_cast<std::size_t>(std::max(2.0, n0));
	first += first % 2;

	double log_vol = log_ball_volume(n, r);
	for (std::size_t i = 1; i <= phases; ++i) {
		const double inner = r * std::exp2(static_cast<double>(i - 1) / dn);
		const double inner2 = inner * inner;
		if (i == phases)
			walker.set_ball_radius(std::nullopt);
		else
			walker.set_ball_radius(r * std::exp2(static_cast<double>(i) / dn));
		walker.walk(cfg.burn_in * walk, rng);

		std::size_t taken = 0, hits = 0, target = first;
		double half = -1.0, ratio = 0.0;
		bool converged = false;
		for (int doublings = 0;; ++doublings) {
			while (taken < target) {
				walker.walk(walk, rng);
				hits += walker.point().squaredNorm() <= inner2;
				++taken;
				if (half < 0.0 && taken == target / 2)
					half = static_cast<double>(hits) / static_cast<double>(taken);
			}
			ratio = static_cast<double>(hits) / static_cast<double>(taken);
			if (ratio > 0.0 && std::abs(ratio - half) / ratio < conv) {
				converged = true;
				break;
			}
			if (doublings >= cfg.max_doublings)
				break;
			half = ratio;
			target *= 2;
		}
		if (ratio <= 0.0)
			throw NumericalError("volume phase " + std::to_string(i) + " saw no samples in the inner body");
		est.samples_per_phase.push_back(taken);
		est.ratios.push_back(ratio);
		est.converged = est.converged && converged;
		log_vol -= std::log(ratio);
	}
	est.value = std::exp(log_vol);
	est.steps = walker.steps_taken();
	if (!est.converged)
		throw NonConvergenceError("volume estimate did not converge after " +
		                          std::to_string(cfg.max_doublings) + " doublings",
		                          est.value);
	return est;
}

} // namespace ttc
