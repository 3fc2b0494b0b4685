/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ttc authors
 */

#include <benchmark/benchmark.h>

/* the packaged benchmark_main archive is built with a different LTO version */
BENCHMARK_MAIN();
