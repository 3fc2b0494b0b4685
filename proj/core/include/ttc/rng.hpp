/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include <cstdint>
#include <random>

namespace ttc {

using Rng = std::mt19937_64;

/* Independent stream purposes; mixed into the seed so that, e.g., the volume
 * walk of polytope 3 never shares a stream with its lattice sampler. */
enum class StreamTag : std::uint32_t {
	Volume = 1,
	Sampler = 2,
	Sketch = 3,
	Oracle = 4,
	Generator = 5,
};

Rng derive_stream(std::uint64_t seed, StreamTag tag, std::uint64_t index = 0);

/* Uniform on [0,1) from the top 53 bits; portable across standard libraries. */
inline double uniform01(Rng &rng)
{
	return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng &rng, double lo, double hi)
{
	return lo + (hi - lo) * uniform01(rng);
}

/* Standard normal variate (ziggurat). */
double standard_normal(Rng &rng);

} // namespace ttc
