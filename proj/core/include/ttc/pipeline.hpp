/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/circuit.hpp"
#include "ttc/cubes.hpp"
#include "ttc/formula.hpp"
#include "ttc/lattice.hpp"
#include "ttc/polytope.hpp"
#include "ttc/volume.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ttc {

/* Measure the sketch counts in: lattice cells of side 10^-preci (default) or
 * raw volume. */
enum class SketchUnits { Cells, Volume };

struct RunOptions {
	double eps = 0.8;
	double delta = 0.2;
	std::uint64_t seed = 1;
	/* wall-clock budget, checked between polytopes */
	std::optional<double> timeout_s;
	/* volumes computed ahead of the sketch loop on this many threads */
	unsigned jobs = 1;
	std::optional<int> precision_override;
	LogBase log_base = LogBase::E;
	std::optional<std::size_t> cube_limit;
	SketchUnits units = SketchUnits::Cells;
	VolumeConfig volume{};
	SamplerConfig sampler{};
};

struct PolytopeRecord {
	std::size_t index = 0;
	std::size_t facets_in = 0;
	std::size_t facets = 0;
	double radius = 0.0;
	bool degenerate = false;
	double volume = 0.0;
	bool volume_converged = true;
	std::uint64_t removed = 0;
	std::uint64_t drawn = 0;
	std::uint64_t sketch_size = 0;
	int p_exponent = 0;
	double volume_ms = 0.0;
	double sample_ms = 0.0;
};

enum class RunStatus { Ok, Timeout };

struct RunReport {
	RunStatus status = RunStatus::Ok;
	double estimate = 0.0;
	std::size_t dim = 0;
	std::size_t m = 0;
	int preci = 0;
	double thresh = 0.0;
	double eps = 0.0;
	double delta = 0.0;
	std::uint64_t seed = 0;
	double gamma = 0.0;
	double max_ratio = 1.0;
	std::vector<PolytopeRecord> polytopes;
	std::vector<std::string> warnings;
	double enumerate_ms = 0.0;
	double prepare_ms = 0.0;
	double total_ms = 0.0;
};

/* The formula as a list of polytopes, one per enumerated cube. */
struct Decomposition {
	Abstraction abstraction;
	std::vector<Cube> cubes;
	std::vector<Polytope> polytopes;
};

Decomposition decompose(const Formula &f, std::optional<std::size_t> cube_limit = std::nullopt);

/* Union-volume estimate for a list of polytopes. Degenerate polytopes are
 * reported and skipped; an unbounded one raises UnboundedError. */
RunReport estimate_polytopes(const std::vector<Polytope> &polys, const RunOptions &opt);

/* decompose() followed by estimate_polytopes(). */
RunReport estimate_formula(const Formula &f, const RunOptions &opt);

/* Just the number. */
double estimate_union(const std::vector<Polytope> &polys, double eps, double delta,
                      std::uint64_t seed);

} // namespace ttc
