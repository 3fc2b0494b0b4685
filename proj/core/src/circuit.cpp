/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/circuit.hpp"

#include "ttc/errors.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace ttc {

void Circuit::simulate(std::span<const Ternary> inputs, std::vector<Ternary> &v) const
{
	if (inputs.size() != num_inputs_)
		throw ContractError("simulation needs one value per circuit input");
	v.resize(num_nodes());
	v[0] = Ternary::False;
	for (std::size_t i = 0; i < num_inputs_; ++i)
		v[1 + i] = inputs[i];
	std::size_t node = 1 + num_inputs_;
	for (const auto &[a, b] : gates_) {
		Ternary x = value_of(v, a), y = value_of(v, b);
		if (x == Ternary::False || y == Ternary::False)
			v[node] = Ternary::False;
		else if (x == Ternary::True && y == Ternary::True)
			v[node] = Ternary::True;
		else
			v[node] = Ternary::Unknown;
		++node;
	}
}

std::vector<Ternary> Circuit::simulate(std::span<const Ternary> inputs) const
{
	std::vector<Ternary> v;
	simulate(inputs, v);
	return v;
}

CircuitBuilder::CircuitBuilder(std::size_t num_inputs)
{
	c_.num_inputs_ = num_inputs;
}

Lit CircuitBuilder::input(InputId id) const
{
	if (id >= c_.num_inputs_)
		throw ContractError("input id out of range");
	return c_.input(id);
}

Lit CircuitBuilder::make_and(Lit a, Lit b)
{
	if (a == kFalseLit || b == kFalseLit || a == !b)
		return kFalseLit;
	if (a == kTrueLit || a == b)
		return b;
	if (b == kTrueLit)
		return a;
	if (b < a)
		std::swap(a, b);
	std::uint64_t key = (std::uint64_t{a.code} << 32) | b.code;
	if (auto it = strash_.find(key); it != strash_.end())
		return Lit::make(it->second, false);
	auto node = static_cast<std::uint32_t>(c_.num_nodes());
	c_.gates_.emplace_back(a, b);
	strash_.emplace(key, node);
	return Lit::make(node, false);
}

Circuit CircuitBuilder::finish(Lit output) &&
{
	c_.output_ = output;
	return std::move(c_);
}

std::size_t AtomMap::num_theory_inputs() const
{
	std::size_t k = 0;
	for (const auto &b : bindings_)
		k += b.kind == InputBinding::Kind::Theory;
	return k;
}

std::vector<bool> AtomMap::truths(std::span<const double> point, std::span<const char> bools) const
{
	std::vector<bool> out(bindings_.size());
	for (std::size_t i = 0; i < bindings_.size(); ++i) {
		const auto &b = bindings_[i];
		if (b.kind == InputBinding::Kind::Theory)
			out[i] = b.atom.holds(point);
		else
			out[i] = b.bool_var < bools.size() && bools[b.bool_var];
	}
	return out;
}

namespace {

using AtomKey = std::tuple<int, std::vector<std::pair<VarIndex, double>>, double>;

AtomKey key_of(const LinearAtom &a)
{
	AtomKey k;
	std::get<0>(k) = static_cast<int>(a.rel);
	for (const auto &[j, c] : a.coeffs)
		std::get<1>(k).emplace_back(j, c.value);
	std::get<2>(k) = a.bound.value;
	return k;
}

LinearAtom as_le(const LinearAtom &a, bool flip)
{
	LinearAtom r;
	r.rel = Relation::LE;
	for (const auto &[j, c] : a.coeffs)
		r.coeffs.emplace(j, flip ? c.negated() : c);
	r.bound = flip ? a.bound.negated() : a.bound;
	return r;
}

class Abstractor {
public:
	Abstraction run(const FormulaAst &f)
	{
		collect(f);
		CircuitBuilder b(atoms_.size());
		Lit out = build(f, b);
		return Abstraction{std::move(b).finish(out), std::move(atoms_)};
	}

private:
	AtomMap atoms_;
	std::map<AtomKey, InputId> atom_inputs_;
	std::map<std::size_t, InputId> bool_inputs_;

	InputId atom_input(const LinearAtom &a)
	{
		auto [it, fresh] = atom_inputs_.emplace(key_of(a), static_cast<InputId>(atoms_.size()));
		if (fresh)
			atoms_.push(InputBinding{InputBinding::Kind::Theory, a, 0});
		return it->second;
	}

	void collect(const FormulaAst &f)
	{
		if (f.kind == NodeKind::Atom) {
			const LinearAtom &a = *f.atom;
			if (a.rel == Relation::EQ) {
				atom_input(as_le(a, false));
				atom_input(as_le(a, true));
			} else {
				atom_input(a);
			}
			return;
		}
		if (f.kind == NodeKind::BoolVar) {
			auto [it, fresh] = bool_inputs_.emplace(f.bool_var, static_cast<InputId>(atoms_.size()));
			if (fresh)
				atoms_.push(InputBinding{InputBinding::Kind::Boolean, {}, f.bool_var});
			return;
		}
		for (const auto &c : f.children)
			collect(c);
	}

	Lit build(const FormulaAst &f, CircuitBuilder &b)
	{
		switch (f.kind) {
		case NodeKind::ConstTrue: return kTrueLit;
		case NodeKind::ConstFalse: return kFalseLit;
		case NodeKind::BoolVar: return b.input(bool_inputs_.at(f.bool_var));
		case NodeKind::Atom: {
			const LinearAtom &a = *f.atom;
			if (a.rel == Relation::EQ)
				return b.make_and(b.input(atom_inputs_.at(key_of(as_le(a, false)))),
				                  b.input(atom_inputs_.at(key_of(as_le(a, true)))));
			return b.input(atom_inputs_.at(key_of(a)));
		}
		case NodeKind::Not: return !build(f.children[0], b);
		case NodeKind::And: {
			Lit acc = build(f.children[0], b);
			for (std::size_t i = 1; i < f.children.size(); ++i)
				acc = b.make_and(acc, build(f.children[i], b));
			return acc;
		}
		case NodeKind::Or: {
			Lit acc = build(f.children[0], b);
			for (std::size_t i = 1; i < f.children.size(); ++i)
				acc = b.make_or(acc, build(f.children[i], b));
			return acc;
		}
		case NodeKind::Implies:
			return b.make_implies(build(f.children[0], b), build(f.children[1], b));
		case NodeKind::Iff:
			return b.make_iff(build(f.children[0], b), build(f.children[1], b));
		case NodeKind::Xor:
			return b.make_xor(build(f.children[0], b), build(f.children[1], b));
		case NodeKind::Ite: {
			Lit c = build(f.children[0], b);
			Lit t = build(f.children[1], b);
			Lit e = build(f.children[2], b);
			return b.make_ite(c, t, e);
		}
		}
		throw ContractError("unknown formula node");
	}
};

} // namespace

Abstraction abstract(const FormulaAst &f)
{
	return Abstractor{}.run(f);
}

bool eval_circuit(const Circuit &c, const std::vector<bool> &assignment)
{
	if (assignment.size() != c.num_inputs())
		throw ContractError("assignment must give a value to every circuit input (got " +
		                    std::to_string(assignment.size()) + " of " +
		                    std::to_string(c.num_inputs()) + ")");
	std::vector<char> v(c.num_nodes());
	v[0] = 0;
	for (std::size_t i = 0; i < c.num_inputs(); ++i)
		v[1 + i] = assignment[i];
	auto val = [&](Lit l) { return static_cast<char>(v[l.node()] ^ (l.negated() ? 1 : 0)); };
	std::size_t node = 1 + c.num_inputs();
	for (const auto &[a, b] : c.gates())
		v[node++] = val(a) & val(b);
	return val(c.output());
}

std::string to_aiger_ascii(const Circuit &c)
{
	std::ostringstream os;
	std::size_t max_var = c.num_nodes() - 1;
	os << "aag " << max_var << ' ' << c.num_inputs() << " 0 1 " << c.num_gates() << '\n';
	for (std::size_t i = 0; i < c.num_inputs(); ++i)
		os << 2 * (i + 1) << '\n';
	os << c.output().code << '\n';
	std::size_t node = 1 + c.num_inputs();
	for (const auto &[a, b] : c.gates()) {
		// AIGER wants rhs0 >= rhs1
		std::uint32_t r0 = std::max(a.code, b.code), r1 = std::min(a.code, b.code);
		os << 2 * node << ' ' << r0 << ' ' << r1 << '\n';
		++node;
	}
	return os.str();
}

} // namespace ttc
