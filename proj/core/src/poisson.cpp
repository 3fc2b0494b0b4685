/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/errors.hpp"
#include "ttc/sketch.hpp"

#include <bit>
#include <cmath>

namespace ttc {

std::uint64_t poisson(double lambda, Rng &rng)
{
	if (!(lambda >= 0.0) || !std::isfinite(lambda))
		throw ContractError("poisson: lambda must be finite and non-negative");
	if (lambda == 0.0)
		return 0;

	if (lambda <= 10.0) {
		double u = uniform01(rng);
		double p = std::exp(-lambda);
		double F = p;
		std::uint64_t k = 0;
		while (u > F) {
			++k;
			p *= lambda / static_cast<double>(k);
			F += p;
			if (p == 0.0 && F < u)
				break; // tail lost to rounding; u sits in the last ulp
		}
		return k;
	}

	// PTRS, Hormann 1993
	const double log_lambda = std::log(lambda);
	const double b = 0.931 + 2.53 * std::sqrt(lambda);
	const double a = -0.059 + 0.02483 * b;
	const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
	const double v_r = 0.9277 - 3.6224 / (b - 2.0);
	for (;;) {
		double u = uniform01(rng) - 0.5;
		double v = uniform01(rng);
		double us = 0.5 - std::abs(u);
		double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
		if (us >= 0.07 && v <= v_r)
			return static_cast<std::uint64_t>(k);
		if (k < 0.0 || (us < 0.013 && v > us))
			continue;
		double s = std::log(v * inv_alpha / (a / (us * us) + b));
		double t = -lambda + k * log_lambda - std::lgamma(k + 1.0);
		if (s <= t)
			return static_cast<std::uint64_t>(k);
	}
}

std::uint64_t binomial_half(std::uint64_t copies, Rng &rng)
{
	std::uint64_t kept = 0;
	while (copies >= 64) {
		kept += static_cast<std::uint64_t>(std::popcount(rng()));
		copies -= 64;
	}
	if (copies > 0)
		kept += static_cast<std::uint64_t>(std::popcount(rng() & ((std::uint64_t{1} << copies) - 1)));
	return kept;
}

} // namespace ttc
