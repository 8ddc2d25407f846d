// SPDX-License-Identifier: Apache-2.0
//
// me-ris: rate optimization toolkit for movable-element RIS links
// Copyright (C) 2026 The me-ris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <iosfwd>

namespace meris::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_config = 2;

/// Entry point of the me_ris tool. Subcommands: convergence, sweep-region,
/// sweep-power, single-run, selftest.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Worker count from ME_RIS_THREADS, defaulting to the machine parallelism.
unsigned thread_count_from_env();

} // namespace meris::cli
