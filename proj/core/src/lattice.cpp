/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/lattice.hpp"

#include "ttc/errors.hpp"
#include "ttc/volume.hpp"

#include <boost/container_hash/hash.hpp>

#include <cmath>

namespace ttc {

namespace {

double pow10(int preci)
{
	double s = 1.0;
	for (int i = 0; i < preci; ++i)
		s *= 10.0;
	return s;
}

double log_in(double z, LogBase base)
{
	switch (base) {
	case LogBase::Two: return std::log2(z);
	case LogBase::Ten: return std::log10(z);
	case LogBase::E: break;
	}
	return std::log(z);
}

} // namespace

Eigen::VectorXd LatticePoint::embed(int preci) const
{
	double s = pow10(preci);
	Eigen::VectorXd x(static_cast<Eigen::Index>(k.size()));
	for (std::size_t j = 0; j < k.size(); ++j)
		x[static_cast<Eigen::Index>(j)] = static_cast<double>(k[j]) / s;
	return x;
}

std::size_t LatticePointHash::operator()(const LatticePoint &p) const noexcept
{
	return boost::hash_range(p.k.begin(), p.k.end());
}

PrecisionReport precision_from_radii(Eigen::Index n, std::size_t total_facets,
                                     std::span<const double> inscribed, double eta, LogBase base)
{
	if (!(eta > 0.0 && eta <= 1.0))
		throw ContractError("get_precision: eta must lie in (0, 1]");
	if (total_facets == 0)
		throw ContractError("get_precision: no facets");
	PrecisionReport rep;
	rep.eta = eta;
	rep.total_facets = total_facets;
	const double r = static_cast<double>(total_facets);
	rep.gamma = (16.0 * static_cast<double>(n) / eta) * std::sqrt(log_in(4.0 * r / eta, base));
	rep.max_ratio = 1.0;
	for (double g : inscribed) {
		if (!(g > 0.0))
			throw ContractError("get_precision: inscribed radius must be positive");
		rep.inscribed.push_back(g);
		rep.max_ratio = std::max(rep.max_ratio, rep.gamma / g);
	}
	double digits = std::ceil(std::log10(rep.max_ratio));
	if (digits > kMaxPrecision)
		throw NumericalError("required lattice precision " + std::to_string(static_cast<long>(digits)) +
		                     " exceeds the 64-bit key limit of " + std::to_string(kMaxPrecision) +
		                     " digits; an exact-integer build is needed for this input");
	rep.preci = static_cast<int>(std::max(0.0, digits));
	return rep;
}

PrecisionReport get_precision(const std::vector<Polytope> &polys, double eta, LogBase base)
{
	if (polys.empty())
		throw ContractError("get_precision: no polytopes");
	std::size_t facets = 0;
	std::vector<double> radii;
	for (const auto &P : polys) {
		facets += static_cast<std::size_t>(P.facets());
		radii.push_back(chebyshev(P).radius);
	}
	return precision_from_radii(polys.front().dim(), facets, radii, eta, base);
}

LatticePoint round_to_lattice(const Eigen::VectorXd &x, int preci, Rng &rng)
{
	if (preci < 0 || preci > kMaxPrecision)
		throw ContractError("round_to_lattice: precision out of range");
	double s = pow10(preci);
	LatticePoint p;
	p.k.resize(static_cast<std::size_t>(x.size()));
	for (Eigen::Index j = 0; j < x.size(); ++j) {
		double v = x[j] * s;
		if (!std::isfinite(v) || std::abs(v) >= 9.2e18)
			throw NumericalError("lattice coordinate overflows 64-bit keys");
		double fl = std::floor(v);
		double f = v - fl;
		auto k = static_cast<std::int64_t>(fl);
		if (uniform01(rng) < f)
			++k;
		p.k[static_cast<std::size_t>(j)] = k;
	}
	return p;
}

std::vector<LatticePoint> generate_samples(const Polytope &P, std::size_t N, int preci, Rng &rng,
                                           const SamplerConfig &cfg)
{
	std::vector<LatticePoint> out;
	if (N == 0)
		return out;
	ChebyshevBall ball = chebyshev(P, cfg.tol);
	if (ball.status != BallStatus::Interior)
		throw ContractError("generate_samples needs a full-dimensional bounded polytope");

	Body body{P, std::nullopt, {}};
	HitAndRunWalker walker(body, ball.center, cfg.tol);
	const std::size_t walk = cfg.walk_length ? cfg.walk_length : static_cast<std::size_t>(P.dim());
	walker.walk(cfg.burn_in * walk, rng);

	out.reserve(N);
	std::size_t attempts = 0, failures = 0;
	while (out.size() < N) {
		walker.walk(walk, rng);
		for (int t = 0; t < cfg.roundings; ++t) {
			LatticePoint k = round_to_lattice(walker.point(), preci, rng);
			bool ok = contains(P, k.embed(preci), cfg.tol);
			++attempts;
			failures += !ok;
			if (attempts == cfg.window) {
				if (static_cast<double>(failures) > 0.99 * static_cast<double>(cfg.window))
					throw NumericalError("lattice too coarse for body: " + std::to_string(failures) +
					                     " of " + std::to_string(cfg.window) +
					                     " rounded samples fell outside");
				attempts = failures = 0;
			}
			if (ok) {
				out.push_back(std::move(k));
				break;
			}
		}
	}
	return out;
}

} // namespace ttc
