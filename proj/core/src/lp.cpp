/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/lp.hpp"

#include "ttc/errors.hpp"

#include <limits>
#include <vector>

namespace ttc {

namespace {

using Table = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class PhaseResult { Optimal, Unbounded };

/* Rows 0..m-1 are constraints, row m is the objective (reduced costs, value
 * in the last column). */
class Tableau {
public:
	Tableau(Eigen::Index m, Eigen::Index cols, int cap, const Tolerances &tol)
	: T(Table::Zero(m + 1, cols + 1)), basis(m, -1), allowed(cols, 1),
	  m_(m), cols_(cols), cap_(cap), tol_(tol) {}

	Table T;
	std::vector<Eigen::Index> basis;
	std::vector<char> allowed;
	int iterations = 0;

	Eigen::Index rhs() const { return cols_; }

	void pivot(Eigen::Index r, Eigen::Index e)
	{
		T.row(r) /= T(r, e);
		for (Eigen::Index i = 0; i <= m_; ++i) {
			if (i == r)
				continue;
			double f = T(i, e);
			if (f != 0.0)
				T.row(i) -= f * T.row(r);
		}
		basis[r] = e;
	}

	PhaseResult run()
	{
		bool bland = false;
		int degenerate = 0;
		for (;;) {
			Eigen::Index e = -1;
			double best = -tol_.lp_pivot;
			for (Eigen::Index j = 0; j < cols_; ++j) {
				if (!allowed[j])
					continue;
				double z = T(m_, j);
				if (bland) {
					if (z < -tol_.lp_pivot) {
						e = j;
						break;
					}
				} else if (z < best) {
					best = z;
					e = j;
				}
			}
			if (e < 0)
				return PhaseResult::Optimal;

			Eigen::Index r = -1;
			double ratio = std::numeric_limits<double>::infinity();
			for (Eigen::Index i = 0; i < m_; ++i) {
				double a = T(i, e);
				if (a <= tol_.lp_pivot)
					continue;
				double q = std::max(T(i, rhs()), 0.0) / a;
				if (r < 0 || q < ratio - 1e-12 * (1.0 + ratio) ||
				    (q <= ratio + 1e-12 * (1.0 + ratio) && basis[i] < basis[r])) {
					ratio = std::min(ratio, q);
					r = i;
				}
			}
			if (r < 0)
				return PhaseResult::Unbounded;

			if (++iterations > cap_)
				throw NumericalError("simplex iteration cap of " + std::to_string(cap_) +
				                     " pivots exceeded");
			if (ratio <= 1e-12) {
				if (++degenerate > 10 * m_)
					bland = true;
			} else {
				degenerate = 0;
			}
			pivot(r, e);
		}
	}

	/* Loads max cost.x as the objective row, eliminating basic columns. */
	void set_objective(const Eigen::VectorXd &cost)
	{
		T.row(m_).setZero();
		for (Eigen::Index j = 0; j < cols_; ++j)
			T(m_, j) = -cost[j];
		for (Eigen::Index i = 0; i < m_; ++i) {
			double cb = cost[basis[i]];
			if (cb != 0.0)
				T.row(m_) += cb * T.row(i);
		}
	}

private:
	Eigen::Index m_, cols_;
	int cap_;
	const Tolerances &tol_;
};

} // namespace

LpResult solve_lp(const Eigen::MatrixXd &A, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                  Sense sense, const Tolerances &tol)
{
	const Eigen::Index m = A.rows(), n = A.cols();
	if (b.size() != m || c.size() != n)
		throw ContractError("solve_lp: dimension mismatch");
	if (!A.allFinite() || !b.allFinite() || !c.allFinite())
		throw ContractError("solve_lp: non-finite input");

	Eigen::VectorXd obj = sense == Sense::Maximize ? c : Eigen::VectorXd(-c);

	// columns: u (n), v (n) with x = u - v, slacks (m), artificials (k)
	std::vector<Eigen::Index> art_rows;
	for (Eigen::Index i = 0; i < m; ++i)
		if (b[i] < 0)
			art_rows.push_back(i);
	const Eigen::Index k = static_cast<Eigen::Index>(art_rows.size());
	const Eigen::Index cols = 2 * n + m + k;
	const int cap = static_cast<int>(50 * (m + n));

	Tableau tab(m, cols, cap, tol);
	Eigen::Index next_art = 2 * n + m;
	for (Eigen::Index i = 0; i < m; ++i) {
		double s = b[i] < 0 ? -1.0 : 1.0;
		tab.T.row(i).segment(0, n) = s * A.row(i);
		tab.T.row(i).segment(n, n) = -s * A.row(i);
		tab.T(i, 2 * n + i) = s;
		tab.T(i, tab.rhs()) = s * b[i];
		if (b[i] < 0) {
			tab.T(i, next_art) = 1.0;
			tab.basis[i] = next_art++;
		} else {
			tab.basis[i] = 2 * n + i;
		}
	}

	if (k > 0) {
		Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(cols);
		phase1.tail(k).setConstant(-1.0);
		tab.set_objective(phase1);
		tab.run();
		double scale = 1.0 + b.cwiseAbs().maxCoeff();
		if (tab.T(m, tab.rhs()) < -tol.lp_feasibility * scale) {
			LpResult r;
			r.status = LpStatus::Infeasible;
			r.iterations = tab.iterations;
			return r;
		}
		for (Eigen::Index i = 0; i < m; ++i) {
			if (tab.basis[i] < 2 * n + m)
				continue;
			for (Eigen::Index j = 0; j < 2 * n + m; ++j) {
				if (std::abs(tab.T(i, j)) > tol.lp_pivot) {
					tab.pivot(i, j);
					break;
				}
			}
		}
		for (Eigen::Index j = 2 * n + m; j < cols; ++j)
			tab.allowed[j] = 0;
	}

	Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(cols);
	phase2.segment(0, n) = obj;
	phase2.segment(n, n) = -obj;
	tab.set_objective(phase2);

	LpResult r;
	PhaseResult pr = tab.run();
	r.iterations = tab.iterations;
	if (pr == PhaseResult::Unbounded) {
		r.status = LpStatus::Unbounded;
		return r;
	}
	Eigen::VectorXd uv = Eigen::VectorXd::Zero(2 * n);
	for (Eigen::Index i = 0; i < m; ++i)
		if (tab.basis[i] < 2 * n)
			uv[tab.basis[i]] = tab.T(i, tab.rhs());
	r.status = LpStatus::Optimal;
	r.x = uv.head(n) - uv.tail(n);
	r.value = c.dot(r.x);
	return r;
}

} // namespace ttc
