/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ttc::cli {

enum ExitCode : int {
	kOk = 0,
	kTimeout = 2,
	kUnsupported = 3,
	kNumerical = 4,
};

/* Runs the `ttc` command line; reports go to out, logs to err. */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ttc::cli
