/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/circuit.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ttc {

struct CubeLiteral {
	InputId input = 0;
	bool positive = true;

	friend auto operator<=>(const CubeLiteral &, const CubeLiteral &) = default;
};

/* Conjunction of input literals, sorted by input id, one literal per input. */
struct Cube {
	std::vector<CubeLiteral> literals;

	bool satisfied_by(const std::vector<bool> &assignment) const;

	friend bool operator==(const Cube &, const Cube &) = default;
};

/* Literal over circuit inputs: 2 * input + (1 if the input is false). */
struct InputLit {
	std::uint32_t x = 0;

	static InputLit make(InputId v, bool value) { return InputLit{2 * v + (value ? 0u : 1u)}; }
	InputId var() const { return x >> 1; }
	bool value() const { return !(x & 1u); }
	InputLit operator~() const { return InputLit{x ^ 1u}; }

	friend auto operator<=>(InputLit, InputLit) = default;
};

/* CDCL search for total input assignments that drive the output to `target`
 * and satisfy every added clause. Every circuit node is a solver variable
 * tied to its fan-ins by the three AND clauses, so unit propagation is
 * forward and backward circuit implication and learnt clauses may mention
 * internal nodes. Branching justifies the output first: an AND node that is
 * false with both fan-ins open gets its first fan-in set false. When the
 * output is justified the remaining inputs are set false in ascending order. */
class CircuitSolver {
public:
	CircuitSolver(const Circuit &c, bool target);

	void add_clause(std::vector<InputLit> clause);

	/* A model as one value per input, or nullopt when none exists under the
	 * assumptions. The solver can be reused afterwards. */
	std::optional<std::vector<bool>> solve(std::span<const InputLit> assumptions = {});

	std::uint64_t conflicts() const { return conflicts_; }
	std::uint64_t decisions() const { return decisions_; }

private:
	static constexpr int kNoReason = -1;

	/* literals are AIGER codes: 2 * node + negated */
	using Code = std::uint32_t;

	const Circuit &c_;
	bool unsat_ = false;

	std::vector<std::vector<Code>> clauses_;
	std::vector<std::vector<int>> watches_;   // indexed by literal
	std::vector<std::int8_t> assigns_;        // per node: -1 unassigned, else value
	std::vector<int> level_;
	std::vector<int> reason_;
	std::vector<Code> trail_;
	std::vector<std::size_t> trail_lim_;
	std::size_t qhead_ = 0;
	std::vector<char> seen_;
	std::vector<std::uint32_t> stack_;

	std::uint64_t conflicts_ = 0;
	std::uint64_t decisions_ = 0;

	static Code code_of(InputLit l) { return 2 * (1 + l.var()) + (l.value() ? 0u : 1u); }

	int value(Code l) const
	{
		std::int8_t a = assigns_[l >> 1];
		return a < 0 ? -1 : (a != static_cast<std::int8_t>(l & 1u));
	}
	int decision_level() const { return static_cast<int>(trail_lim_.size()); }

	void enqueue(Code l, int reason);
	void backtrack(int level);
	int attach(std::vector<Code> clause);
	/* adds a clause at level 0; false if it makes the problem UNSAT */
	bool add_root_clause(std::vector<Code> clause);
	int propagate();
	std::pair<std::vector<Code>, int> analyze(int confl);
	std::optional<Code> pick_branch();
};

/* All cubes, in discovery order, of a DNF of the circuit: each cube is a
 * minimized implicant and the cubes jointly cover every model. Throws
 * TruncationError when more than `limit` cubes are found. */
std::vector<Cube> enumerate_cubes(const Circuit &c, std::optional<std::size_t> limit = std::nullopt);

/* Drops literals of the satisfying assignment in ascending input order while
 * the rest still implies the output. Throws ContractError if the
 * assignment does not satisfy the circuit. */
Cube minimize_cube(const Circuit &c, const std::vector<bool> &model);

/* True iff every total extension of the cube sets the output. */
bool is_implicant(const Circuit &c, const Cube &cube);

} // namespace ttc
