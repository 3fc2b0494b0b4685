/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include "ttc/formula.hpp"

#include <string_view>

namespace ttc {

/* Reads the QF_LRA subset:
 *
 *   (set-logic QF_LRA) (set-info ...)
 *   (declare-fun <sym> () Real|Bool) (declare-const <sym> Real|Bool)
 *   (assert <term>) (check-sat) (exit)
 *
 * with terms built from and, or, not, =>, =, xor, ite, <, <=, >, >=, +, -,
 * *, /, let, numerals and decimals. The result is the conjunction of all
 * assertions (ConstTrue when there are none); let bindings are inlined.
 *
 * Throws ParseError on malformed text and UnsupportedError for anything
 * outside the fragment, including undeclared symbols and products of two
 * variables. */
Formula parse_smt2(std::string_view text);

/* Convenience wrapper reading a file. */
Formula parse_smt2_file(const std::string &path);

} // namespace ttc
