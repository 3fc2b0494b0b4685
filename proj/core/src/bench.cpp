/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/bench.hpp"

#include "ttc/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace ttc {

namespace {

/* 9-decimal text and the value it reads back as */
struct Printed {
	std::string text;
	double value;
	bool zero;
};

Printed print9(double v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.9f", v);
	double back = std::strtod(buf, nullptr);
	if (back == 0.0)
		return {"0.000000000", 0.0, true};
	return {buf, back, false};
}

std::string smt_number(const Printed &p)
{
	if (p.text.front() == '-')
		return "(- " + p.text.substr(1) + ")";
	return p.text;
}

Eigen::MatrixXd random_rotation(std::size_t n, Rng &rng)
{
	const auto N = static_cast<Eigen::Index>(n);
	Eigen::MatrixXd Q = Eigen::MatrixXd::Identity(N, N);
	if (n < 2)
		return Q;
	for (std::size_t k = 0; k < n; ++k) {
		auto i = static_cast<Eigen::Index>(rng() % n);
		auto j = static_cast<Eigen::Index>(rng() % (n - 1));
		if (j >= i)
			++j;
		double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
		double c = std::cos(theta), s = std::sin(theta);
		// left-multiply by the rotation in the (i, j) plane
		Eigen::RowVectorXd ri = Q.row(i), rj = Q.row(j);
		Q.row(i) = c * ri - s * rj;
		Q.row(j) = s * ri + c * rj;
	}
	return Q;
}

Eigen::VectorXd random_unit(std::size_t n, Rng &rng)
{
	Eigen::VectorXd d(static_cast<Eigen::Index>(n));
	do {
		for (Eigen::Index j = 0; j < d.size(); ++j)
			d[j] = standard_normal(rng);
	} while (d.norm() == 0.0);
	return d.normalized();
}

/* writes rows as an (and ...) term and returns the rounded polytope */
Polytope emit(std::ostringstream &os, const Eigen::MatrixXd &A, const Eigen::VectorXd &b)
{
	const Eigen::Index m = A.rows(), n = A.cols();
	Eigen::MatrixXd Ar = Eigen::MatrixXd::Zero(m, n);
	Eigen::VectorXd br(m);
	os << "  (and";
	for (Eigen::Index i = 0; i < m; ++i) {
		std::vector<std::string> terms;
		for (Eigen::Index j = 0; j < n; ++j) {
			Printed c = print9(A(i, j));
			if (c.zero)
				continue;
			Ar(i, j) = c.value;
			terms.push_back("(* " + smt_number(c) + " x" + std::to_string(j) + ")");
		}
		Printed rhs = print9(b[i]);
		br[i] = rhs.value;
		os << "\n    (<= ";
		if (terms.size() == 1) {
			os << terms[0];
		} else {
			os << "(+";
			for (const auto &t : terms)
				os << ' ' << t;
			os << ')';
		}
		os << ' ' << smt_number(rhs) << ')';
	}
	os << ')';
	return {std::move(Ar), std::move(br)};
}

} // namespace

BenchInstance gen_instance(const BenchSpec &spec)
{
	if (spec.n < 1 || spec.m < 1)
		throw ContractError("gen_instance: n and m must be at least 1");
	Rng rng = derive_stream(spec.seed, StreamTag::Generator);
	const std::size_t n = spec.n;
	const auto N = static_cast<Eigen::Index>(n);

	BenchInstance inst;
	std::ostringstream body;
	Eigen::VectorXd center(N);
	for (Eigen::Index j = 0; j < N; ++j)
		center[j] = uniform(rng, -5.0, 5.0);
	double prev_diameter = 0.0;

	for (std::size_t p = 0; p < spec.m; ++p) {
		if (p > 0)
			center += 0.5 * prev_diameter * random_unit(n, rng);
		Eigen::MatrixXd Q = spec.axis_aligned ? Eigen::MatrixXd::Identity(N, N)
		                                      : random_rotation(n, rng);
		Eigen::MatrixXd A;
		Eigen::VectorXd b;
		if (spec.shape == Shape::Cube) {
			Eigen::VectorXd side(N);
			for (Eigen::Index j = 0; j < N; ++j)
				side[j] = uniform(rng, 0.5, 2.0);
			// y = Q^T (x - c), |y_j| <= side_j / 2
			A.resize(2 * N, N);
			b.resize(2 * N);
			for (Eigen::Index j = 0; j < N; ++j) {
				Eigen::VectorXd q = Q.col(j);
				double qc = q.dot(center);
				A.row(2 * j) = q.transpose();
				b[2 * j] = side[j] / 2.0 + qc;
				A.row(2 * j + 1) = -q.transpose();
				b[2 * j + 1] = side[j] / 2.0 - qc;
			}
			prev_diameter = side.norm();
			inst.sizes.push_back(side.prod());
		} else {
			double f = uniform(rng, 0.5, 2.0);
			// y = Q^T (x - c) + g with g the centroid; y >= 0, sum y <= f
			double g = f / static_cast<double>(n + 1);
			A.resize(N + 1, N);
			b.resize(N + 1);
			for (Eigen::Index j = 0; j < N; ++j) {
				Eigen::VectorXd q = Q.col(j);
				A.row(j) = -q.transpose();
				b[j] = g - q.dot(center);
			}
			Eigen::VectorXd s = Q * Eigen::VectorXd::Ones(N);
			A.row(N) = s.transpose();
			b[N] = f - static_cast<double>(n) * g + s.dot(center);
			prev_diameter = n >= 2 ? f * std::sqrt(2.0) : f;
			inst.sizes.push_back(f);
		}
		if (p > 0)
			body << '\n';
		inst.polytopes.push_back(emit(body, A, b));
	}

	std::ostringstream os;
	os << "(set-logic QF_LRA)\n";
	for (std::size_t j = 0; j < n; ++j)
		os << "(declare-fun x" << j << " () Real)\n";
	if (spec.m == 1)
		os << "(assert\n" << body.str() << ")\n";
	else
		os << "(assert (or\n" << body.str() << "))\n";
	os << "(check-sat)\n(exit)\n";
	inst.smt2 = os.str();
	return inst;
}

namespace {

void union_dfs(const std::vector<Box> &boxes, std::size_t next, const Box &cur, int depth,
               double &sum)
{
	for (std::size_t i = next; i < boxes.size(); ++i) {
		Box x{cur.lo.cwiseMax(boxes[i].lo), cur.hi.cwiseMin(boxes[i].hi)};
		if (((x.hi - x.lo).array() <= 0.0).any())
			continue;
		sum += (depth % 2 == 0 ? 1.0 : -1.0) * x.volume();
		union_dfs(boxes, i + 1, x, depth + 1, sum);
	}
}

} // namespace

double exact_box_union(const std::vector<Box> &boxes)
{
	if (boxes.size() > 20)
		throw UnsupportedError("exact_box_union refuses more than 20 boxes");
	if (boxes.empty())
		return 0.0;
	const Eigen::Index n = boxes.front().lo.size();
	for (const auto &b : boxes)
		if (b.lo.size() != n || b.hi.size() != n)
			throw ContractError("exact_box_union: boxes of different dimension");
	double inf = std::numeric_limits<double>::infinity();
	Box all{Eigen::VectorXd::Constant(n, -inf), Eigen::VectorXd::Constant(n, inf)};
	double sum = 0.0;
	union_dfs(boxes, 0, all, 0, sum);
	return sum;
}

Box box_of(const Polytope &P)
{
	const Eigen::Index n = P.dim();
	double inf = std::numeric_limits<double>::infinity();
	Box box{Eigen::VectorXd::Constant(n, -inf), Eigen::VectorXd::Constant(n, inf)};
	for (Eigen::Index i = 0; i < P.facets(); ++i) {
		Eigen::Index col = -1;
		for (Eigen::Index j = 0; j < n; ++j) {
			if (P.A(i, j) == 0.0)
				continue;
			if (col >= 0)
				throw UnsupportedError("row " + std::to_string(i + 1) + " is not axis-aligned");
			col = j;
		}
		if (col < 0)
			throw UnsupportedError("row " + std::to_string(i + 1) + " has no nonzero coefficient");
		double bound = P.b[i] / P.A(i, col);
		if (P.A(i, col) > 0.0)
			box.hi[col] = std::min(box.hi[col], bound);
		else
			box.lo[col] = std::max(box.lo[col], bound);
	}
	for (Eigen::Index j = 0; j < n; ++j)
		if (std::isinf(box.lo[j]) || std::isinf(box.hi[j]))
			throw UnboundedError("box is unbounded along coordinate " + std::to_string(j));
	box.hi = box.hi.cwiseMax(box.lo);
	return box;
}

McEstimate grid_mc_union(const std::vector<Polytope> &polys, std::size_t samples, Rng &rng,
                         const std::optional<Box> &region)
{
	if (polys.empty())
		throw ContractError("grid_mc_union: no polytopes");
	if (samples == 0)
		throw ContractError("grid_mc_union: need at least one sample");
	Box box;
	if (region) {
		box = *region;
	} else {
		box = bounding_box(polys.front());
		for (std::size_t i = 1; i < polys.size(); ++i) {
			Box b = bounding_box(polys[i]);
			box.lo = box.lo.cwiseMin(b.lo);
			box.hi = box.hi.cwiseMax(b.hi);
		}
	}
	McEstimate out;
	out.region_volume = box.volume();
	if (!std::isfinite(out.region_volume))
		throw NumericalError("sampling box volume overflows");
	out.samples = samples;
	Eigen::VectorXd x(box.lo.size());
	for (std::size_t s = 0; s < samples; ++s) {
		for (Eigen::Index j = 0; j < x.size(); ++j)
			x[j] = uniform(rng, box.lo[j], box.hi[j]);
		for (const auto &P : polys) {
			if (contains(P, x)) {
				++out.hits;
				break;
			}
		}
	}
	double p = static_cast<double>(out.hits) / static_cast<double>(samples);
	out.estimate = p * out.region_volume;
	out.half_width = 2.576 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) * out.region_volume;
	return out;
}

} // namespace ttc
