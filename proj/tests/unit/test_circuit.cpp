/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/circuit.hpp"
#include "ttc/errors.hpp"
#include "ttc/smtlib.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace ttc;

namespace {

Formula two_squares()
{
	return parse_smt2_file(TTC_DATA_DIR "/two_squares.smt2");
}

std::vector<bool> truths_at(const Abstraction &abs, double x, double y)
{
	double p[2] = {x, y};
	return abs.atoms.truths(p);
}

} // namespace

TEST(Circuit, TwoSquaresShape)
{
	Abstraction abs = abstract(two_squares().root);
	EXPECT_EQ(abs.circuit.num_inputs(), 8u);
	EXPECT_EQ(abs.atoms.num_theory_inputs(), 8u);
	// two 4-input ANDs (3 gates each) and the OR on top
	EXPECT_EQ(abs.circuit.num_gates(), 7u);
	EXPECT_TRUE(abs.circuit.output().negated());
}

TEST(Circuit, SingleAtom)
{
	Formula f = parse_smt2("(set-logic QF_LRA)(declare-fun x () Real)(assert (<= x 1))");
	Abstraction abs = abstract(f.root);
	EXPECT_EQ(abs.circuit.num_inputs(), 1u);
	EXPECT_EQ(abs.circuit.num_gates(), 0u);
	EXPECT_EQ(abs.circuit.output(), abs.circuit.input(0));
}

TEST(Circuit, XorTruthTable)
{
	Formula f = parse_smt2(
		"(set-logic QF_LRA)(declare-const a Bool)(declare-const b Bool)(assert (xor a b))");
	Abstraction abs = abstract(f.root);
	EXPECT_EQ(abs.circuit.num_gates(), 3u);
	for (int a = 0; a < 2; ++a)
		for (int b = 0; b < 2; ++b)
			EXPECT_EQ(eval_circuit(abs.circuit, {a == 1, b == 1}), (a != b));
}

TEST(Circuit, AndChain)
{
	CircuitBuilder cb(4);
	Lit out = cb.make_and(cb.make_and(cb.input(0), cb.input(1)),
	                      cb.make_and(cb.input(2), cb.input(3)));
	Circuit c = std::move(cb).finish(out);
	EXPECT_TRUE(eval_circuit(c, {true, true, true, true}));
	EXPECT_FALSE(eval_circuit(c, {true, true, false, true}));
	EXPECT_THROW(eval_circuit(c, {true, true}), ContractError);
}

TEST(Circuit, BuilderSimplifies)
{
	CircuitBuilder cb(2);
	Lit a = cb.input(0), b = cb.input(1);
	EXPECT_EQ(cb.make_and(a, kFalseLit), kFalseLit);
	EXPECT_EQ(cb.make_and(a, kTrueLit), a);
	EXPECT_EQ(cb.make_and(a, a), a);
	EXPECT_EQ(cb.make_and(a, !a), kFalseLit);
	Lit g1 = cb.make_and(a, b);
	Lit g2 = cb.make_and(b, a);
	EXPECT_EQ(g1, g2);
	Circuit c = std::move(cb).finish(g1);
	EXPECT_EQ(c.num_gates(), 1u);
}

TEST(Circuit, StructuralHashUnique)
{
	Formula f = parse_smt2(
		"(set-logic QF_LRA)(declare-fun x () Real)(declare-fun y () Real)"
		"(declare-const a Bool)"
		"(assert (or (and (<= x 1) (<= y 1)) (and (<= y 1) (<= x 1)) (ite a (<= x 1) (>= y 2))"
		" (= (<= x 1) a)))");
	Abstraction abs = abstract(f.root);
	std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
	const auto &gates = abs.circuit.gates();
	for (std::size_t i = 0; i < gates.size(); ++i) {
		auto [a, b] = gates[i];
		std::uint32_t node = static_cast<std::uint32_t>(1 + abs.circuit.num_inputs() + i);
		EXPECT_LT(a.node(), node);
		EXPECT_LT(b.node(), node);
		auto key = std::minmax(a.code, b.code);
		EXPECT_TRUE(seen.insert(key).second) << "duplicate gate " << i;
	}
}

TEST(Circuit, Idempotent)
{
	Formula f = two_squares();
	EXPECT_EQ(abstract(f.root).circuit, abstract(f.root).circuit);
	EXPECT_EQ(abstract(f.root).atoms, abstract(f.root).atoms);
}

TEST(Circuit, TwoSquaresPoints)
{
	Abstraction abs = abstract(two_squares().root);
	EXPECT_TRUE(eval_circuit(abs.circuit, truths_at(abs, 15, 15)));
	EXPECT_FALSE(eval_circuit(abs.circuit, truths_at(abs, 5, 5)));
	EXPECT_TRUE(eval_circuit(abs.circuit, truths_at(abs, 25, 25)));
	EXPECT_TRUE(eval_circuit(abs.circuit, truths_at(abs, 35, 35)));
	EXPECT_FALSE(eval_circuit(abs.circuit, truths_at(abs, 15, 35)));
}

TEST(Circuit, EqualityBecomesTwoInputs)
{
	Formula f = parse_smt2(
		"(set-logic QF_LRA)(declare-fun x () Real)(declare-fun y () Real)"
		"(assert (= (+ x y) 2))");
	Abstraction abs = abstract(f.root);
	ASSERT_EQ(abs.circuit.num_inputs(), 2u);
	EXPECT_EQ(abs.atoms[0].atom.rel, Relation::LE);
	EXPECT_EQ(abs.atoms[1].atom.rel, Relation::LE);
	EXPECT_EQ(abs.atoms[0].atom.bound.value, 2.0);
	EXPECT_EQ(abs.atoms[1].atom.bound.value, -2.0);
}

TEST(Circuit, SharedAtomsShareInputs)
{
	Formula f = parse_smt2(
		"(set-logic QF_LRA)(declare-fun x () Real)"
		"(assert (or (<= x 1) (and (<= x 1) (>= x 0)) (<= (* 2 x) 2)))");
	Abstraction abs = abstract(f.root);
	// x <= 1 and 2x <= 2 are different atoms syntactically
	EXPECT_EQ(abs.circuit.num_inputs(), 3u);
}

/* The abstraction under the atom truths at a point agrees with the formula. */
TEST(Circuit, SoundnessProperty)
{
	Formula f = parse_smt2(
		"(set-logic QF_LRA)(declare-fun x () Real)(declare-fun y () Real)"
		"(declare-const a Bool)"
		"(assert (or (and (>= x 10) (<= x 30) (>= y 10) (<= y 30))"
		"  (xor (< (+ x y) 50) a)"
		"  (ite (= x y) (>= y 5) (=> (> x 3) (not a)))"
		"  (and (>= x 20) (<= x 40) (>= y 20) (<= y 40))))");
	Abstraction abs = abstract(f.root);
	std::mt19937_64 rng(5);
	std::uniform_real_distribution<double> u(0.0, 50.0);
	for (int i = 0; i < 1000; ++i) {
		double p[2] = {u(rng), u(rng)};
		if (i % 10 == 0)
			p[1] = p[0];
		char bools[1] = {static_cast<char>(i % 2)};
		EXPECT_EQ(eval_circuit(abs.circuit, abs.atoms.truths(p, bools)), evaluate(f.root, p, bools))
			<< "point " << p[0] << "," << p[1];
	}
}

TEST(Circuit, TernarySimulation)
{
	Abstraction abs = abstract(two_squares().root);
	std::vector<Ternary> in(8, Ternary::Unknown);
	EXPECT_EQ(Circuit::value_of(abs.circuit.simulate(in), abs.circuit.output()), Ternary::Unknown);
	for (int i = 0; i < 4; ++i)
		in[i] = Ternary::True;
	EXPECT_EQ(Circuit::value_of(abs.circuit.simulate(in), abs.circuit.output()), Ternary::True);
}

TEST(Circuit, Aiger)
{
	Abstraction abs = abstract(two_squares().root);
	std::string aag = to_aiger_ascii(abs.circuit);
	EXPECT_EQ(aag.rfind("aag 15 8 0 1 7\n", 0), 0u) << aag;
}
