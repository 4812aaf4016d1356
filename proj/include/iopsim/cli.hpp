// Copyright 2026 The iopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace iopsim::cli {

/// Exit codes: 0 all checks pass, 1 usage/config error, 2 a check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Entry point for `iopsim run|validate|selftest`. Reads IOPSIM_SEED from the
/// environment when --seed is absent.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iopsim::cli
