/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/formula.hpp"

#include "ttc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace ttc {

std::string format_decimal(double v)
{
	if (!std::isfinite(v))
		throw ContractError("cannot format a non-finite coefficient");
	if (v == 0.0)
		return "0";
	char buf[400];
	auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
	if (ec != std::errc{})
		throw ContractError("coefficient too long to format");
	return std::string(buf, end);
}

Coefficient Coefficient::of(double v)
{
	return {v, format_decimal(v)};
}

Coefficient Coefficient::negated() const
{
	if (value == 0.0)
		return {0.0, "0"};
	if (!text.empty() && text.front() == '-')
		return {-value, text.substr(1)};
	return {-value, "-" + text};
}

double LinearAtom::lhs(std::span<const double> x) const
{
	double s = 0.0;
	for (const auto &[j, c] : coeffs)
		s += c.value * x[j];
	return s;
}

bool LinearAtom::holds(std::span<const double> x) const
{
	double s = lhs(x);
	switch (rel) {
	case Relation::LE: return s <= bound.value;
	case Relation::LT: return s < bound.value;
	case Relation::EQ: return s == bound.value;
	}
	return false;
}

FormulaAst FormulaAst::constant(bool v)
{
	FormulaAst f;
	f.kind = v ? NodeKind::ConstTrue : NodeKind::ConstFalse;
	return f;
}

FormulaAst FormulaAst::variable(std::size_t index)
{
	FormulaAst f;
	f.kind = NodeKind::BoolVar;
	f.bool_var = index;
	return f;
}

FormulaAst FormulaAst::of_atom(LinearAtom a)
{
	FormulaAst f;
	f.kind = NodeKind::Atom;
	f.atom = std::move(a);
	return f;
}

FormulaAst FormulaAst::node(NodeKind kind, std::vector<FormulaAst> children)
{
	std::size_t want_min = 0, want_max = 0;
	switch (kind) {
	case NodeKind::And:
	case NodeKind::Or:
		want_min = 2; want_max = static_cast<std::size_t>(-1); break;
	case NodeKind::Not: want_min = want_max = 1; break;
	case NodeKind::Implies:
	case NodeKind::Iff:
	case NodeKind::Xor: want_min = want_max = 2; break;
	case NodeKind::Ite: want_min = want_max = 3; break;
	default:
		throw ContractError("FormulaAst::node called with a leaf kind");
	}
	if (children.size() < want_min || children.size() > want_max)
		throw ContractError("wrong number of children for formula node");
	FormulaAst f;
	f.kind = kind;
	f.children = std::move(children);
	return f;
}

std::optional<VarIndex> Declarations::real_index(const std::string &name) const
{
	auto it = std::find(reals.begin(), reals.end(), name);
	if (it == reals.end())
		return std::nullopt;
	return static_cast<VarIndex>(it - reals.begin());
}

std::optional<std::size_t> Declarations::bool_index(const std::string &name) const
{
	auto it = std::find(bools.begin(), bools.end(), name);
	if (it == bools.end())
		return std::nullopt;
	return static_cast<std::size_t>(it - bools.begin());
}

FormulaAst normalize_atom(RawRelation raw, const LinearTerm &term, const Coefficient &bound)
{
	Coefficient rhs = term.constant == 0.0
		? bound : Coefficient::of(bound.value - term.constant);

	std::map<VarIndex, Coefficient> coeffs;
	for (const auto &[j, c] : term.coeffs)
		if (c.value != 0.0)
			coeffs.emplace(j, c);

	if (coeffs.empty()) {
		double r = rhs.value;
		bool v = false;
		switch (raw) {
		case RawRelation::LT: v = 0.0 < r; break;
		case RawRelation::LE: v = 0.0 <= r; break;
		case RawRelation::EQ: v = 0.0 == r; break;
		case RawRelation::GE: v = 0.0 >= r; break;
		case RawRelation::GT: v = 0.0 > r; break;
		}
		return FormulaAst::constant(v);
	}

	LinearAtom a;
	switch (raw) {
	case RawRelation::LT: a.rel = Relation::LT; break;
	case RawRelation::LE: a.rel = Relation::LE; break;
	case RawRelation::EQ: a.rel = Relation::EQ; break;
	case RawRelation::GE: a.rel = Relation::LE; break;
	case RawRelation::GT: a.rel = Relation::LT; break;
	}
	bool flip = raw == RawRelation::GE || raw == RawRelation::GT;
	for (auto &[j, c] : coeffs)
		a.coeffs.emplace(j, flip ? c.negated() : c);
	a.bound = flip ? rhs.negated() : rhs;
	return FormulaAst::of_atom(std::move(a));
}

bool evaluate(const FormulaAst &f, std::span<const double> point, std::span<const char> bools)
{
	switch (f.kind) {
	case NodeKind::ConstTrue: return true;
	case NodeKind::ConstFalse: return false;
	case NodeKind::BoolVar:
		return f.bool_var < bools.size() && bools[f.bool_var];
	case NodeKind::Atom: return f.atom->holds(point);
	case NodeKind::Not: return !evaluate(f.children[0], point, bools);
	case NodeKind::And:
		return std::all_of(f.children.begin(), f.children.end(),
		                   [&](const FormulaAst &c) { return evaluate(c, point, bools); });
	case NodeKind::Or:
		return std::any_of(f.children.begin(), f.children.end(),
		                   [&](const FormulaAst &c) { return evaluate(c, point, bools); });
	case NodeKind::Implies:
		return !evaluate(f.children[0], point, bools) || evaluate(f.children[1], point, bools);
	case NodeKind::Iff:
		return evaluate(f.children[0], point, bools) == evaluate(f.children[1], point, bools);
	case NodeKind::Xor:
		return evaluate(f.children[0], point, bools) != evaluate(f.children[1], point, bools);
	case NodeKind::Ite:
		return evaluate(f.children[0], point, bools)
			? evaluate(f.children[1], point, bools)
			: evaluate(f.children[2], point, bools);
	}
	return false;
}

namespace {

std::string quote_symbol(const std::string &s)
{
	static const std::string extra = "~!@$%^&*_-+=<>.?/";
	bool simple = !s.empty() && !std::isdigit(static_cast<unsigned char>(s.front()));
	for (char ch : s)
		if (!std::isalnum(static_cast<unsigned char>(ch)) && extra.find(ch) == std::string::npos)
			simple = false;
	return simple ? s : "|" + s + "|";
}

std::string numeral(const Coefficient &c)
{
	std::string t = format_decimal(c.value);
	if (t.front() == '-')
		return "(- " + t.substr(1) + ")";
	return t;
}

void print(std::ostream &os, const FormulaAst &f, const Declarations &d)
{
	auto nary = [&](const char *op) {
		os << '(' << op;
		for (const auto &c : f.children) {
			os << ' ';
			print(os, c, d);
		}
		os << ')';
	};
	switch (f.kind) {
	case NodeKind::ConstTrue: os << "true"; return;
	case NodeKind::ConstFalse: os << "false"; return;
	case NodeKind::BoolVar: os << quote_symbol(d.bools.at(f.bool_var)); return;
	case NodeKind::And: nary("and"); return;
	case NodeKind::Or: nary("or"); return;
	case NodeKind::Not: nary("not"); return;
	case NodeKind::Implies: nary("=>"); return;
	case NodeKind::Iff: nary("="); return;
	case NodeKind::Xor: nary("xor"); return;
	case NodeKind::Ite: nary("ite"); return;
	case NodeKind::Atom: {
		const LinearAtom &a = *f.atom;
		const char *op = a.rel == Relation::LE ? "<=" : a.rel == Relation::LT ? "<" : "=";
		os << '(' << op << ' ';
		if (a.coeffs.size() > 1)
			os << "(+";
		for (const auto &[j, c] : a.coeffs) {
			if (a.coeffs.size() > 1)
				os << ' ';
			os << "(* " << numeral(c) << ' ' << quote_symbol(d.reals.at(j)) << ')';
		}
		if (a.coeffs.size() > 1)
			os << ')';
		os << ' ' << numeral(a.bound) << ')';
		return;
	}
	}
}

void collect(const FormulaAst &f, std::vector<LinearAtom> &out)
{
	if (f.kind == NodeKind::Atom) {
		if (std::find(out.begin(), out.end(), *f.atom) == out.end())
			out.push_back(*f.atom);
		return;
	}
	for (const auto &c : f.children)
		collect(c, out);
}

} // namespace

std::string to_smt2(const Formula &f)
{
	std::ostringstream os;
	os << "(set-logic QF_LRA)\n";
	for (const auto &r : f.vars.reals)
		os << "(declare-fun " << quote_symbol(r) << " () Real)\n";
	for (const auto &b : f.vars.bools)
		os << "(declare-fun " << quote_symbol(b) << " () Bool)\n";
	os << "(assert ";
	print(os, f.root, f.vars);
	os << ")\n(check-sat)\n(exit)\n";
	return os.str();
}

std::vector<LinearAtom> collect_atoms(const FormulaAst &f)
{
	std::vector<LinearAtom> out;
	collect(f, out);
	return out;
}

} // namespace ttc
