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

#include <iostream>

#include "config.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  const auto parsed = partrel_cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  if (parsed.print_config) {
    std::cout << partrel_cli::to_json(*parsed.config).dump(2) << "\n";
    return partrel_cli::kExitPass;
  }
  return partrel_cli::run(*parsed.config, std::cout, std::cerr);
}
