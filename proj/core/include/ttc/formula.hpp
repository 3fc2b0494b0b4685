/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ttc {

/* A real constant together with its decimal spelling. The spelling is the
 * source text when the value came straight from a numeral, otherwise the
 * shortest fixed-point text that reads back to the same double. */
struct Coefficient {
	double value = 0.0;
	std::string text = "0";

	static Coefficient of(double v);
	Coefficient negated() const;

	friend bool operator==(const Coefficient &a, const Coefficient &b)
	{
		return a.value == b.value;
	}
};

/* Shortest decimal (no exponent) that round-trips to v. */
std::string format_decimal(double v);

/* Relations as written in the source; normalization reduces them to
 * Relation. */
enum class RawRelation { LT, LE, EQ, GE, GT };
enum class Relation { LE, LT, EQ };

using VarIndex = std::size_t;

/* sum_j coeffs[j] * x_j  <rel>  bound, with at least one nonzero coefficient.
 * Zero coefficients are never stored. */
struct LinearAtom {
	std::map<VarIndex, Coefficient> coeffs;
	Coefficient bound;
	Relation rel = Relation::LE;

	double lhs(std::span<const double> x) const;
	bool holds(std::span<const double> x) const;

	friend bool operator==(const LinearAtom &, const LinearAtom &) = default;
};

/* Affine expression sum_j coeffs[j] * x_j + constant, the intermediate form of
 * arithmetic terms during parsing. */
struct LinearTerm {
	std::map<VarIndex, Coefficient> coeffs;
	double constant = 0.0;
	/* text of constant when it is a bare numeral */
	std::optional<std::string> constant_text;

	bool is_constant() const { return coeffs.empty(); }
};

enum class NodeKind {
	And, Or, Not, Implies, Iff, Xor, Ite, BoolVar, Atom, ConstTrue, ConstFalse
};

/* Boolean structure over linear atoms. And/Or have >= 2 children, Not one,
 * Implies/Iff/Xor two, Ite three (condition, then, else). */
struct FormulaAst {
	NodeKind kind = NodeKind::ConstTrue;
	std::vector<FormulaAst> children;
	std::size_t bool_var = 0;
	std::optional<LinearAtom> atom;

	static FormulaAst constant(bool v);
	static FormulaAst variable(std::size_t index);
	static FormulaAst of_atom(LinearAtom a);
	static FormulaAst node(NodeKind kind, std::vector<FormulaAst> children);

	friend bool operator==(const FormulaAst &, const FormulaAst &) = default;
};

struct Declarations {
	std::vector<std::string> reals;
	std::vector<std::string> bools;

	std::optional<VarIndex> real_index(const std::string &name) const;
	std::optional<std::size_t> bool_index(const std::string &name) const;
	std::size_t dimension() const { return reals.size(); }
};

/* A parsed problem: the conjunction of all assertions plus the symbol
 * tables the indices in the tree refer to. */
struct Formula {
	FormulaAst root;
	Declarations vars;
};

/* term <raw> bound, normalized: GE/GT flip sign, the term's constant moves to
 * the bound. A term with no variables folds to ConstTrue or ConstFalse. */
FormulaAst normalize_atom(RawRelation raw, const LinearTerm &term, const Coefficient &bound);

/* Truth of the formula at a real point; bools supplies pure Boolean
 * variables (missing entries read as false). */
bool evaluate(const FormulaAst &f, std::span<const double> point,
              std::span<const char> bools = {});

/* SMT-LIB2 rendering that parse_smt2 reads back to an identical tree. */
std::string to_smt2(const Formula &f);

/* Distinct atoms in pre-order of first occurrence. */
std::vector<LinearAtom> collect_atoms(const FormulaAst &f);

} // namespace ttc
