/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include "ttc/errors.hpp"
#include "ttc/polytope.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ttc {

namespace {

struct Line {
	std::size_t number = 0;
	std::vector<std::string> tokens;
};

class LineReader {
public:
	explicit LineReader(std::istream &in) : in_(in) {}

	/* next line with at least one token, or false at end of input */
	bool next(Line &out)
	{
		std::string text;
		while (std::getline(in_, text)) {
			++number_;
			if (auto h = text.find('#'); h != std::string::npos)
				text.erase(h);
			std::istringstream ss(text);
			out.tokens.clear();
			for (std::string t; ss >> t;)
				out.tokens.push_back(t);
			if (!out.tokens.empty()) {
				out.number = number_;
				return true;
			}
		}
		return false;
	}

private:
	std::istream &in_;
	std::size_t number_ = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string &msg)
{
	throw UnsupportedError("polytope file, line " + std::to_string(line) + ": " + msg);
}

double number(const std::string &t, std::size_t line)
{
	double v = 0.0;
	const char *first = t.data();
	if (*first == '+')
		++first;
	auto [end, ec] = std::from_chars(first, t.data() + t.size(), v);
	if (ec != std::errc{} || end != t.data() + t.size() || !std::isfinite(v))
		fail(line, "'" + t + "' is not a finite number");
	return v;
}

long count(const std::string &t, std::size_t line, const char *what)
{
	long v = 0;
	auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
	if (ec != std::errc{} || end != t.data() + t.size() || v < 0)
		fail(line, std::string("expected a non-negative integer ") + what + ", got '" + t + "'");
	return v;
}

} // namespace

std::vector<Polytope> read_union(std::istream &in)
{
	LineReader reader(in);
	Line line;
	if (!reader.next(line))
		throw UnsupportedError("polytope file is empty");
	if (line.tokens.size() != 2)
		fail(line.number, "header must be 'n m'");
	long n = count(line.tokens[0], line.number, "dimension");
	long m = count(line.tokens[1], line.number, "polytope count");
	if (n < 1)
		fail(line.number, "dimension must be at least 1");
	if (m < 1)
		fail(line.number, "polytope count must be at least 1");

	std::vector<Polytope> out;
	for (long p = 0; p < m; ++p) {
		if (!reader.next(line))
			throw UnsupportedError("polytope file ends after " + std::to_string(p) + " of " +
			                       std::to_string(m) + " polytopes");
		if (line.tokens.size() != 1)
			fail(line.number, "expected a facet count");
		long f = count(line.tokens[0], line.number, "facet count");
		Eigen::MatrixXd A(f, n);
		Eigen::VectorXd b(f);
		for (long i = 0; i < f; ++i) {
			if (!reader.next(line))
				throw UnsupportedError("polytope file ends inside polytope " + std::to_string(p + 1));
			if (static_cast<long>(line.tokens.size()) != n + 1)
				fail(line.number, "row has " + std::to_string(line.tokens.size()) +
				                  " entries, expected " + std::to_string(n + 1));
			for (long j = 0; j < n; ++j)
				A(i, j) = number(line.tokens[static_cast<std::size_t>(j)], line.number);
			b[i] = number(line.tokens[static_cast<std::size_t>(n)], line.number);
			if (A.row(i).isZero(0.0))
				fail(line.number, "row has an all-zero normal");
		}
		out.emplace_back(std::move(A), std::move(b));
	}
	if (reader.next(line))
		fail(line.number, "unexpected data after the last polytope");
	return out;
}

std::vector<Polytope> read_union_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw UnsupportedError("cannot open polytope file '" + path + "'");
	return read_union(in);
}

void write_union(std::ostream &out, const std::vector<Polytope> &polys, Eigen::Index dim)
{
	char buf[64];
	out << dim << ' ' << polys.size() << '\n';
	for (const auto &P : polys) {
		if (P.dim() != dim)
			throw ContractError("write_union: polytope dimension differs from header");
		out << P.facets() << '\n';
		for (Eigen::Index i = 0; i < P.facets(); ++i) {
			for (Eigen::Index j = 0; j < dim; ++j) {
				std::snprintf(buf, sizeof buf, "%.17g", P.A(i, j));
				out << buf << ' ';
			}
			std::snprintf(buf, sizeof buf, "%.17g", P.b[i]);
			out << buf << '\n';
		}
	}
}

} // namespace ttc
