/*
Copyright 2026 The partrel Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>

#include "config.hpp"

namespace partrel_cli {

/// Executes one configuration. Reports go to `out`, diagnostics to `err`.
/// Returns 0 when every requested check passes, 1 on a failed check, 2 for
/// an inadmissible delta and 64 for input the library rejects.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace partrel_cli
