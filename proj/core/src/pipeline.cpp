/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/pipeline.hpp"

#include "ttc/errors.hpp"
#include "ttc/rng.hpp"
#include "ttc/sketch.hpp"

#include <chrono>
#include <cmath>
#include <future>

namespace ttc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b)
{
	return std::chrono::duration<double, std::milli>(b - a).count();
}

struct Prepared {
	Polytope P;
	bool live = false;
	double radius = 0.0;
};

struct VolumeResult {
	double value = 0.0;
	bool converged = true;
};

VolumeResult run_volume(const Polytope &P, std::size_t index, const RunOptions &opt, double eps,
                        double delta)
{
	Rng rng = derive_stream(opt.seed, StreamTag::Volume, index);
	try {
		return {compute_volume(P, eps, delta, rng, opt.volume).value, true};
	} catch (const NonConvergenceError &e) {
		return {e.best_estimate(), false};
	}
}

} // namespace

Decomposition decompose(const Formula &f, std::optional<std::size_t> cube_limit)
{
	Decomposition d;
	d.abstraction = abstract(f.root);
	d.cubes = enumerate_cubes(d.abstraction.circuit, cube_limit);
	for (const auto &c : d.cubes)
		d.polytopes.push_back(build_polytope(c, d.abstraction.atoms, f.vars.dimension()));
	return d;
}

RunReport estimate_polytopes(const std::vector<Polytope> &polys, const RunOptions &opt)
{
	const auto start = Clock::now();
	if (!(opt.eps > 0.0 && opt.eps <= 1.0))
		throw ContractError("epsilon must lie in (0, 1]");
	if (!(opt.delta > 0.0 && opt.delta <= 1.0))
		throw ContractError("delta must lie in (0, 1]");
	if (opt.jobs < 1)
		throw ContractError("jobs must be at least 1");
	if (polys.empty())
		throw UnsupportedError("no polytopes to estimate");
	const Eigen::Index dim = polys.front().dim();
	for (const auto &P : polys)
		if (P.dim() != dim)
			throw UnsupportedError("polytopes of different dimension");

	auto out_of_time = [&] {
		return opt.timeout_s && ms_between(start, Clock::now()) > *opt.timeout_s * 1000.0;
	};

	RunReport rep;
	rep.dim = static_cast<std::size_t>(dim);
	rep.m = polys.size();
	rep.eps = opt.eps;
	rep.delta = opt.delta;
	rep.seed = opt.seed;
	rep.thresh = thresh(opt.eps, opt.delta, polys.size());

	const double eps_v = opt.eps / 12.0;
	const double delta_v = opt.delta / (2.0 * static_cast<double>(polys.size()));

	std::vector<Prepared> prep(polys.size());
	std::vector<double> radii;
	std::size_t facets = 0;
	rep.polytopes.resize(polys.size());
	for (std::size_t i = 0; i < polys.size(); ++i) {
		if (out_of_time()) {
			rep.status = RunStatus::Timeout;
			rep.total_ms = ms_between(start, Clock::now());
			return rep;
		}
		PolytopeRecord &rec = rep.polytopes[i];
		rec.index = i;
		rec.facets_in = static_cast<std::size_t>(polys[i].facets());
		ChebyshevBall ball = chebyshev(polys[i], opt.volume.tol);
		if (ball.status == BallStatus::Unbounded)
			throw UnboundedError("unbounded polytope " + std::to_string(i + 1));
		if (ball.status != BallStatus::Interior) {
			rec.degenerate = true;
			rec.radius = std::max(0.0, ball.radius);
			continue;
		}
		prep[i].P = remove_redundant(polys[i], opt.volume.tol);
		bounding_box(prep[i].P, opt.volume.tol);
		prep[i].live = true;
		prep[i].radius = ball.radius;
		rec.radius = ball.radius;
		rec.facets = static_cast<std::size_t>(prep[i].P.facets());
		radii.push_back(ball.radius);
		facets += rec.facets;
	}
	rep.prepare_ms = ms_between(start, Clock::now());

	if (radii.empty()) {
		rep.warnings.push_back("dimension-deficient: every polytope is degenerate, volume 0");
		rep.total_ms = ms_between(start, Clock::now());
		return rep;
	}

	PrecisionReport pr = precision_from_radii(dim, facets, radii, opt.eps / 8.0, opt.log_base);
	rep.gamma = pr.gamma;
	rep.max_ratio = pr.max_ratio;
	rep.preci = opt.precision_override ? *opt.precision_override : pr.preci;
	if (rep.preci < 0 || rep.preci > kMaxPrecision)
		throw ContractError("precision must lie in [0, " + std::to_string(kMaxPrecision) + "]");

	const double log2_unit = opt.units == SketchUnits::Cells
		? static_cast<double>(dim) * rep.preci * std::log2(10.0) : 0.0;
	Sketch sketch(rep.thresh, rep.preci, log2_unit);
	Rng sketch_rng = derive_stream(opt.seed, StreamTag::Sketch);

	std::vector<std::future<VolumeResult>> pending(polys.size());
	std::size_t launched = 0;
	auto launch_ahead = [&](std::size_t upto) {
		for (; launched < polys.size() && launched <= upto; ++launched)
			if (prep[launched].live)
				pending[launched] = std::async(std::launch::async, run_volume,
				                               std::cref(prep[launched].P), launched,
				                               std::cref(opt), eps_v, delta_v);
	};

	for (std::size_t i = 0; i < polys.size(); ++i) {
		PolytopeRecord &rec = rep.polytopes[i];
		if (out_of_time()) {
			rep.status = RunStatus::Timeout;
			rep.estimate = sketch.estimate();
			rep.total_ms = ms_between(start, Clock::now());
			return rep;
		}
		if (!prep[i].live) {
			rec.sketch_size = sketch.size();
			rec.p_exponent = sketch.p_exponent();
			continue;
		}

		auto t0 = Clock::now();
		VolumeResult vol;
		if (opt.jobs > 1) {
			launch_ahead(i + opt.jobs - 1);
			vol = pending[i].get();
		} else {
			vol = run_volume(prep[i].P, i, opt, eps_v, delta_v);
		}
		auto t1 = Clock::now();
		rec.volume = vol.value;
		rec.volume_converged = vol.converged;
		rec.volume_ms = ms_between(t0, t1);
		if (!vol.converged)
			rep.warnings.push_back("volume of polytope " + std::to_string(i + 1) +
			                       " did not converge; using the best estimate");

		Rng sampler = derive_stream(opt.seed, StreamTag::Sampler, i);
		ProcessRecord pr_i = process_polytope(sketch, prep[i].P, vol.value, sketch_rng, sampler,
		                                      opt.sampler);
		rec.removed = pr_i.removed;
		rec.drawn = pr_i.drawn;
		rec.sketch_size = pr_i.size_after;
		rec.p_exponent = pr_i.p_exponent;
		rec.sample_ms = ms_between(t1, Clock::now());
	}
	rep.estimate = sketch.estimate();
	rep.total_ms = ms_between(start, Clock::now());
	return rep;
}

RunReport estimate_formula(const Formula &f, const RunOptions &opt)
{
	const auto start = Clock::now();
	Decomposition d = decompose(f, opt.cube_limit);
	const double enumerate_ms = ms_between(start, Clock::now());
	RunOptions rest = opt;
	if (opt.timeout_s)
		rest.timeout_s = std::max(0.0, *opt.timeout_s - enumerate_ms / 1000.0);
	if (d.polytopes.empty()) {
		RunReport rep;
		rep.dim = f.vars.dimension();
		rep.eps = opt.eps;
		rep.delta = opt.delta;
		rep.seed = opt.seed;
		rep.warnings.push_back("formula is unsatisfiable at the Boolean level, volume 0");
		rep.enumerate_ms = enumerate_ms;
		rep.total_ms = ms_between(start, Clock::now());
		return rep;
	}
	RunReport rep = estimate_polytopes(d.polytopes, rest);
	rep.enumerate_ms = enumerate_ms;
	rep.total_ms = ms_between(start, Clock::now());
	return rep;
}

double estimate_union(const std::vector<Polytope> &polys, double eps, double delta,
                      std::uint64_t seed)
{
	RunOptions opt;
	opt.eps = eps;
	opt.delta = delta;
	opt.seed = seed;
	return estimate_polytopes(polys, opt).estimate;
}

} // namespace ttc
