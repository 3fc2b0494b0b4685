/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/rng.hpp"

#include <boost/random/normal_distribution.hpp>

namespace ttc {

Rng derive_stream(std::uint64_t seed, StreamTag tag, std::uint64_t index)
{
	std::seed_seq seq{
		static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
		static_cast<std::uint32_t>(tag),
		static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
	};
	return Rng(seq);
}

double standard_normal(Rng &rng)
{
	static thread_local boost::random::normal_distribution<double> dist;
	return dist(rng);
}

} // namespace ttc
