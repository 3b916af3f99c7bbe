// SPDX-License-Identifier: Apache-2.0
//
// oamcap: electromagnetic capacity analysis of UCA-based OAM links
// Copyright (C) 2026 The oamcap authors
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

#include <ostream>
#include <string>
#include <vector>

namespace oamcap::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

/// Runs `oamcap <args...>` (program name excluded) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oamcap::cli
