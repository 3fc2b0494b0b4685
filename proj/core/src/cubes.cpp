/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/cubes.hpp"

#include "ttc/errors.hpp"

#include <algorithm>

namespace ttc {

bool Cube::satisfied_by(const std::vector<bool> &assignment) const
{
	for (const auto &l : literals) {
		if (l.input >= assignment.size())
			throw ContractError("cube literal refers to an input outside the assignment");
		if (assignment[l.input] != l.positive)
			return false;
	}
	return true;
}

CircuitSolver::CircuitSolver(const Circuit &c, bool target)
: c_(c)
{
	std::size_t nodes = c.num_nodes();
	watches_.resize(2 * nodes);
	assigns_.assign(nodes, -1);
	level_.assign(nodes, 0);
	reason_.assign(nodes, kNoReason);
	seen_.assign(nodes, 0);

	add_root_clause({1u}); // node 0 is constant false
	for (std::size_t i = 0; i < c.num_gates(); ++i) {
		Code g = static_cast<Code>(2 * (1 + c.num_inputs() + i));
		auto [a, b] = c.gates()[i];
		add_root_clause({g ^ 1u, a.code});
		add_root_clause({g ^ 1u, b.code});
		add_root_clause({g, a.code ^ 1u, b.code ^ 1u});
	}
	Code out = c.output().code;
	add_root_clause({target ? out : out ^ 1u});
}

void CircuitSolver::enqueue(Code l, int reason)
{
	std::uint32_t v = l >> 1;
	assigns_[v] = (l & 1u) ? 0 : 1;
	level_[v] = decision_level();
	reason_[v] = reason;
	trail_.push_back(l);
}

void CircuitSolver::backtrack(int level)
{
	if (decision_level() <= level)
		return;
	std::size_t keep = trail_lim_[level];
	for (std::size_t i = keep; i < trail_.size(); ++i) {
		std::uint32_t v = trail_[i] >> 1;
		assigns_[v] = -1;
		reason_[v] = kNoReason;
	}
	trail_.resize(keep);
	trail_lim_.resize(level);
	qhead_ = std::min(qhead_, trail_.size());
}

int CircuitSolver::attach(std::vector<Code> clause)
{
	int idx = static_cast<int>(clauses_.size());
	if (clause.size() >= 2) {
		watches_[clause[0]].push_back(idx);
		watches_[clause[1]].push_back(idx);
	}
	clauses_.push_back(std::move(clause));
	return idx;
}

bool CircuitSolver::add_root_clause(std::vector<Code> clause)
{
	backtrack(0);
	if (unsat_)
		return false;
	std::sort(clause.begin(), clause.end());
	clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
	std::vector<Code> kept;
	for (std::size_t i = 0; i < clause.size(); ++i) {
		Code l = clause[i];
		if (i + 1 < clause.size() && clause[i + 1] == (l ^ 1u))
			return true; // tautology
		int v = value(l);
		if (v == 1)
			return true;
		if (v == -1)
			kept.push_back(l);
	}
	if (kept.empty()) {
		unsat_ = true;
		return false;
	}
	if (kept.size() == 1) {
		enqueue(kept[0], kNoReason);
		if (propagate() != kNoReason)
			unsat_ = true;
		return !unsat_;
	}
	attach(std::move(kept));
	return true;
}

void CircuitSolver::add_clause(std::vector<InputLit> clause)
{
	std::vector<Code> codes;
	codes.reserve(clause.size());
	for (auto l : clause) {
		if (l.var() >= c_.num_inputs())
			throw ContractError("clause literal refers to an unknown input");
		codes.push_back(code_of(l));
	}
	add_root_clause(std::move(codes));
}

int CircuitSolver::propagate()
{
	while (qhead_ < trail_.size()) {
		Code falsified = trail_[qhead_++] ^ 1u;
		auto &ws = watches_[falsified];
		std::size_t i = 0, j = 0;
		while (i < ws.size()) {
			int ci = ws[i++];
			auto &cl = clauses_[ci];
			if (cl[0] == falsified)
				std::swap(cl[0], cl[1]);
			if (value(cl[0]) == 1) {
				ws[j++] = ci;
				continue;
			}
			bool moved = false;
			for (std::size_t k = 2; k < cl.size(); ++k) {
				if (value(cl[k]) != 0) {
					std::swap(cl[1], cl[k]);
					watches_[cl[1]].push_back(ci);
					moved = true;
					break;
				}
			}
			if (moved)
				continue;
			ws[j++] = ci;
			if (value(cl[0]) == 0) {
				while (i < ws.size())
					ws[j++] = ws[i++];
				ws.resize(j);
				qhead_ = trail_.size();
				return ci;
			}
			enqueue(cl[0], ci);
		}
		ws.resize(j);
	}
	return kNoReason;
}

std::pair<std::vector<CircuitSolver::Code>, int> CircuitSolver::analyze(int confl)
{
	std::vector<Code> learnt{0u};
	int path = 0;
	bool have_p = false;
	Code p = 0;
	std::size_t idx = trail_.size();
	do {
		const auto &cl = clauses_[confl];
		for (std::size_t k = have_p ? 1 : 0; k < cl.size(); ++k) {
			Code q = cl[k];
			std::uint32_t v = q >> 1;
			if (!seen_[v] && level_[v] > 0) {
				seen_[v] = 1;
				if (level_[v] >= decision_level())
					++path;
				else
					learnt.push_back(q);
			}
		}
		do {
			--idx;
		} while (!seen_[trail_[idx] >> 1]);
		p = trail_[idx];
		have_p = true;
		confl = reason_[p >> 1];
		seen_[p >> 1] = 0;
		--path;
	} while (path > 0);
	learnt[0] = p ^ 1u;

	for (std::size_t k = 1; k < learnt.size(); ++k)
		seen_[learnt[k] >> 1] = 0;

	int bt = 0;
	if (learnt.size() > 1) {
		std::size_t best = 1;
		for (std::size_t k = 2; k < learnt.size(); ++k)
			if (level_[learnt[k] >> 1] > level_[learnt[best] >> 1])
				best = k;
		std::swap(learnt[1], learnt[best]);
		bt = level_[learnt[1] >> 1];
	}
	return {std::move(learnt), bt};
}

std::optional<CircuitSolver::Code> CircuitSolver::pick_branch()
{
	stack_.clear();
	std::uint32_t root = c_.output().code >> 1;
	stack_.push_back(root);
	seen_[root] = 1;
	std::optional<Code> pick;
	std::vector<std::uint32_t> visited;
	while (!stack_.empty() && !pick) {
		std::uint32_t node = stack_.back();
		stack_.pop_back();
		visited.push_back(node);
		if (node == 0 || c_.is_input_node(node))
			continue;
		auto [a, b] = c_.fanins(node);
		auto push = [&](Lit l) {
			if (!seen_[l.node()]) {
				seen_[l.node()] = 1;
				stack_.push_back(l.node());
			}
		};
		if (assigns_[node] == 1) {
			push(b);
			push(a);
		} else if (value(a.code) == 0) {
			push(a);
		} else if (value(b.code) == 0) {
			push(b);
		} else {
			// false with both fan-ins open: justify through the first
			pick = a.code ^ 1u;
		}
	}
	for (auto v : visited)
		seen_[v] = 0;
	for (auto v : stack_)
		seen_[v] = 0;
	if (pick)
		return pick;
	for (std::size_t v = 0; v < c_.num_inputs(); ++v) {
		std::uint32_t node = c_.input(static_cast<InputId>(v)).node();
		if (assigns_[node] < 0)
			return 2 * node + 1u;
	}
	return std::nullopt;
}

std::optional<std::vector<bool>> CircuitSolver::solve(std::span<const InputLit> assumptions)
{
	backtrack(0);
	if (unsat_)
		return std::nullopt;
	std::vector<Code> assume;
	for (auto a : assumptions) {
		if (a.var() >= c_.num_inputs())
			throw ContractError("assumption refers to an unknown input");
		assume.push_back(code_of(a));
	}

	for (;;) {
		int confl = propagate();
		if (confl >= 0) {
			++conflicts_;
			if (decision_level() == 0) {
				unsat_ = true;
				return std::nullopt;
			}
			auto [learnt, bt] = analyze(confl);
			backtrack(bt);
			if (learnt.size() == 1) {
				enqueue(learnt[0], kNoReason);
			} else {
				Code first = learnt[0];
				int ci = attach(std::move(learnt));
				enqueue(first, ci);
			}
			continue;
		}

		auto level = static_cast<std::size_t>(decision_level());
		if (level < assume.size()) {
			Code a = assume[level];
			int v = value(a);
			if (v == 0) {
				backtrack(0);
				return std::nullopt;
			}
			trail_lim_.push_back(trail_.size());
			if (v < 0)
				enqueue(a, kNoReason);
			continue;
		}

		auto branch = pick_branch();
		if (!branch) {
			std::vector<bool> model(c_.num_inputs());
			for (std::size_t i = 0; i < model.size(); ++i)
				model[i] = assigns_[c_.input(static_cast<InputId>(i)).node()] == 1;
			backtrack(0);
			return model;
		}
		++decisions_;
		trail_lim_.push_back(trail_.size());
		enqueue(*branch, kNoReason);
	}
}

namespace {

std::vector<InputLit> assumptions_of(std::span<const Ternary> in)
{
	std::vector<InputLit> out;
	for (std::size_t i = 0; i < in.size(); ++i)
		if (in[i] != Ternary::Unknown)
			out.push_back(InputLit::make(static_cast<InputId>(i), in[i] == Ternary::True));
	return out;
}

/* Implicant test for a partial input assignment; `negative` searches for a
 * completion that sets the output to false. */
bool implies_output(const Circuit &c, std::span<const Ternary> in,
                    std::vector<Ternary> &scratch, CircuitSolver &negative)
{
	c.simulate(in, scratch);
	Ternary out = Circuit::value_of(scratch, c.output());
	if (out != Ternary::Unknown)
		return out == Ternary::True;
	auto lits = assumptions_of(in);
	return !negative.solve(lits).has_value();
}

Cube minimize_with(const Circuit &c, const std::vector<bool> &model, CircuitSolver &negative)
{
	if (!eval_circuit(c, model))
		throw ContractError("minimize_cube needs a satisfying assignment");
	std::vector<Ternary> in(model.size());
	for (std::size_t i = 0; i < model.size(); ++i)
		in[i] = ternary_of(model[i]);
	std::vector<Ternary> scratch;
	for (std::size_t i = 0; i < in.size(); ++i) {
		Ternary saved = in[i];
		in[i] = Ternary::Unknown;
		if (!implies_output(c, in, scratch, negative))
			in[i] = saved;
	}
	Cube cube;
	for (std::size_t i = 0; i < in.size(); ++i)
		if (in[i] != Ternary::Unknown)
			cube.literals.push_back({static_cast<InputId>(i), in[i] == Ternary::True});
	return cube;
}

} // namespace

Cube minimize_cube(const Circuit &c, const std::vector<bool> &model)
{
	CircuitSolver negative(c, false);
	return minimize_with(c, model, negative);
}

bool is_implicant(const Circuit &c, const Cube &cube)
{
	std::vector<Ternary> in(c.num_inputs(), Ternary::Unknown);
	for (const auto &l : cube.literals) {
		if (l.input >= in.size())
			throw ContractError("cube literal refers to an unknown input");
		in[l.input] = ternary_of(l.positive);
	}
	CircuitSolver negative(c, false);
	std::vector<Ternary> scratch;
	return implies_output(c, in, scratch, negative);
}

std::vector<Cube> enumerate_cubes(const Circuit &c, std::optional<std::size_t> limit)
{
	CircuitSolver positive(c, true);
	CircuitSolver negative(c, false);
	std::vector<Cube> cubes;
	while (auto model = positive.solve()) {
		Cube cube = minimize_with(c, *model, negative);
		if (limit && cubes.size() >= *limit)
			throw TruncationError("cube enumeration exceeded the limit of " +
			                      std::to_string(*limit) + " cubes");
		std::vector<InputLit> block;
		for (const auto &l : cube.literals)
			block.push_back(InputLit::make(l.input, !l.positive));
		cubes.push_back(std::move(cube));
		positive.add_clause(std::move(block));
	}
	return cubes;
}

} // namespace ttc
