/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/sketch.hpp"

#include "ttc/errors.hpp"

#include <cmath>

namespace ttc {

namespace {
constexpr int kMaxExponent = 16384;
}

double thresh(double eps, double delta, std::size_t m)
{
	if (!(eps > 0.0 && eps <= 1.0) || !(delta > 0.0 && delta <= 1.0))
		throw ContractError("thresh: eps and delta must lie in (0, 1]");
	if (m < 1)
		throw ContractError("thresh: need at least one polytope");
	const double e = eps / 12.0;
	double t1 = 24.0 * std::log(24.0 / delta) / ((1.0 - e) * e * e);
	double t2 = 6.0 * (std::log(6.0 / delta) + std::log(static_cast<double>(m)));
	return std::max(t1, t2);
}

Sketch::Sketch(double thresh, int preci, double log2_unit)
: thresh_(thresh), preci_(preci), log2_unit_(log2_unit)
{
	if (!(thresh > 0.0))
		throw ContractError("sketch threshold must be positive");
	if (!std::isfinite(log2_unit) || log2_unit < 0.0)
		throw ContractError("sketch unit must be finite and non-negative");
}

double Sketch::p() const
{
	return std::ldexp(1.0, -j_);
}

double Sketch::estimate() const
{
	return static_cast<double>(size_) * std::exp2(static_cast<double>(j_) - log2_unit_);
}

std::uint64_t Sketch::remove_inside(const Polytope &P)
{
	std::uint64_t removed = 0;
	for (auto it = keys_.begin(); it != keys_.end();) {
		if (contains(P, it->first.embed(preci_))) {
			removed += it->second;
			it = keys_.erase(it);
		} else {
			++it;
		}
	}
	size_ -= removed;
	return removed;
}

void Sketch::thin(Rng &rng)
{
	if (j_ >= kMaxExponent)
		throw NumericalError("sketch rate underflow");
	++j_;
	std::uint64_t total = 0;
	for (auto it = keys_.begin(); it != keys_.end();) {
		std::uint64_t kept = binomial_half(it->second, rng);
		if (kept == 0) {
			it = keys_.erase(it);
		} else {
			it->second = kept;
			total += kept;
			++it;
		}
	}
	size_ = total;
}

void Sketch::append(const std::vector<LatticePoint> &points)
{
	for (const auto &p : points)
		++keys_[p];
	size_ += points.size();
}

ProcessRecord process_polytope(Sketch &s, const Polytope &P, double t, Rng &rng, Rng &sampler,
                               const SamplerConfig &cfg)
{
	if (!(t >= 0.0) || !std::isfinite(t))
		throw ContractError("process_polytope: volume must be finite and non-negative");
	ProcessRecord rec;
	if (t == 0.0) {
		rec.size_after = s.size();
		rec.p_exponent = s.p_exponent();
		return rec;
	}
	rec.removed = s.remove_inside(P);
	// log2 of the mass T; p >= thresh / T  <=>  log2 T - j >= log2 thresh
	const double log2_mass = std::log2(t) + s.log2_unit();
	const double log2_thresh = std::log2(s.thresh());
	auto rate = [&] { return std::exp2(log2_mass - static_cast<double>(s.p_exponent())); };
	while (log2_mass - static_cast<double>(s.p_exponent()) >= log2_thresh) {
		s.thin(rng);
		++rec.halvings;
	}
	std::uint64_t N = poisson(rate(), rng);
	while (static_cast<double>(N + s.size()) > s.thresh()) {
		s.thin(rng);
		++rec.halvings;
		N = poisson(rate(), rng);
	}
	s.append(generate_samples(P, N, s.preci(), sampler, cfg));
	rec.drawn = N;
	rec.size_after = s.size();
	rec.p_exponent = s.p_exponent();
	return rec;
}

} // namespace ttc
