/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ttc {

/* Root of every error the library raises. */
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/* Malformed input text; carries the 1-based position of the offending token. */
class ParseError : public Error {
public:
	ParseError(const std::string &what, std::size_t line, std::size_t column)
	: Error(what + " at line " + std::to_string(line) + ", column " +
	        std::to_string(column))
	, line_(line), column_(column) {}

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/* Well-formed input outside the supported fragment (nonlinear terms,
 * quantifiers, other logics, undeclared symbols, malformed union files). */
class UnsupportedError : public Error {
public:
	using Error::Error;
};

/* A region whose volume is not finite. */
class UnboundedError : public Error {
public:
	using Error::Error;
};

/* Iteration caps, pinched chords and other floating-point breakdowns. */
class NumericalError : public Error {
public:
	using Error::Error;
};

/* The volume walk did not settle; best_estimate() is still usable. */
class NonConvergenceError : public NumericalError {
public:
	NonConvergenceError(const std::string &what, double best)
	: NumericalError(what), best_(best) {}
	double best_estimate() const { return best_; }

private:
	double best_;
};

/* Caller broke a documented precondition. */
class ContractError : public Error {
public:
	using Error::Error;
};

/* Cube enumeration produced more cubes than the caller allowed. */
class TruncationError : public Error {
public:
	using Error::Error;
};

/* Raised between polytopes once the wall-clock budget is spent. */
class TimeoutError : public Error {
public:
	using Error::Error;
};

} // namespace ttc
