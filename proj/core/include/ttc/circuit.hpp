/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/formula.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ttc {

using InputId = std::uint32_t;

/* AIGER-style edge: 2 * node + complement bit. Node 0 is constant false,
 * nodes 1..I are inputs, the remaining nodes are AND gates in topological
 * order. */
struct Lit {
	std::uint32_t code = 0;

	static constexpr Lit make(std::uint32_t node, bool negated)
	{
		return Lit{2 * node + (negated ? 1u : 0u)};
	}
	constexpr std::uint32_t node() const { return code >> 1; }
	constexpr bool negated() const { return code & 1u; }
	constexpr Lit operator!() const { return Lit{code ^ 1u}; }

	friend constexpr auto operator<=>(Lit, Lit) = default;
};

inline constexpr Lit kFalseLit{0};
inline constexpr Lit kTrueLit{1};

enum class Ternary : std::uint8_t { False = 0, True = 1, Unknown = 2 };

inline Ternary ternary_of(bool b) { return b ? Ternary::True : Ternary::False; }

/* Immutable and-inverter graph with a single output. */
class Circuit {
public:
	std::size_t num_inputs() const { return num_inputs_; }
	std::size_t num_gates() const { return gates_.size(); }
	std::size_t num_nodes() const { return 1 + num_inputs_ + gates_.size(); }
	Lit output() const { return output_; }

	Lit input(InputId id) const { return Lit::make(1 + id, false); }
	bool is_input_node(std::uint32_t node) const
	{
		return node >= 1 && node <= num_inputs_;
	}
	InputId input_of_node(std::uint32_t node) const { return node - 1; }

	/* fan-ins of gate node; node must be a gate */
	const std::pair<Lit, Lit> &fanins(std::uint32_t node) const
	{
		return gates_[node - 1 - num_inputs_];
	}
	const std::vector<std::pair<Lit, Lit>> &gates() const { return gates_; }

	/* Three-valued simulation; returns one value per node. */
	std::vector<Ternary> simulate(std::span<const Ternary> inputs) const;
	void simulate(std::span<const Ternary> inputs, std::vector<Ternary> &nodes) const;

	static Ternary value_of(std::span<const Ternary> nodes, Lit l)
	{
		Ternary v = nodes[l.node()];
		if (v == Ternary::Unknown || !l.negated())
			return v;
		return v == Ternary::True ? Ternary::False : Ternary::True;
	}

	friend bool operator==(const Circuit &, const Circuit &) = default;

private:
	friend class CircuitBuilder;
	std::size_t num_inputs_ = 0;
	std::vector<std::pair<Lit, Lit>> gates_;
	Lit output_ = kFalseLit;
};

/* Builds a structurally hashed circuit. AND gates with constant, repeated or
 * complementary fan-ins are folded away instead of being created. */
class CircuitBuilder {
public:
	explicit CircuitBuilder(std::size_t num_inputs);

	Lit input(InputId id) const;
	Lit make_and(Lit a, Lit b);
	Lit make_or(Lit a, Lit b) { return !make_and(!a, !b); }
	Lit make_xor(Lit a, Lit b) { return make_and(!make_and(a, b), !make_and(!a, !b)); }
	Lit make_iff(Lit a, Lit b) { return !make_xor(a, b); }
	Lit make_implies(Lit a, Lit b) { return !make_and(a, !b); }
	Lit make_ite(Lit c, Lit t, Lit e) { return make_or(make_and(c, t), make_and(!c, e)); }

	Circuit finish(Lit output) &&;

private:
	Circuit c_;
	std::unordered_map<std::uint64_t, std::uint32_t> strash_;
};

/* What a circuit input stands for. */
struct InputBinding {
	enum class Kind { Theory, Boolean };
	Kind kind = Kind::Theory;
	LinearAtom atom;            // Theory: LE or LT only
	std::size_t bool_var = 0;   // Boolean

	friend bool operator==(const InputBinding &, const InputBinding &) = default;
};

/* Input id -> linear inequality (theory inputs) or Boolean variable. */
class AtomMap {
public:
	const InputBinding &operator[](InputId id) const { return bindings_.at(id); }
	std::size_t size() const { return bindings_.size(); }
	bool is_theory(InputId id) const
	{
		return bindings_.at(id).kind == InputBinding::Kind::Theory;
	}
	std::size_t num_theory_inputs() const;

	/* Truth value of every input at a real point (and Boolean valuation). */
	std::vector<bool> truths(std::span<const double> point, std::span<const char> bools = {}) const;

	void push(InputBinding b) { bindings_.push_back(std::move(b)); }

	friend bool operator==(const AtomMap &, const AtomMap &) = default;

private:
	std::vector<InputBinding> bindings_;
};

struct Abstraction {
	Circuit circuit;
	AtomMap atoms;
};

/* Boolean abstraction of a formula. Each distinct normalized atom and each
 * Boolean variable becomes one input, numbered by first occurrence in
 * pre-order; an equality a.x = b becomes the two inputs a.x <= b and
 * -a.x <= -b. No auxiliary variables are introduced. */
Abstraction abstract(const FormulaAst &f);

/* Two-valued evaluation under a total input assignment. */
bool eval_circuit(const Circuit &c, const std::vector<bool> &assignment);

/* ASCII AIGER ("aag") rendering with one output and no latches. */
std::string to_aiger_ascii(const Circuit &c);

} // namespace ttc
