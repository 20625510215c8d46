// Copyright 2026 The Pentaform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Regenerates fixtures/ from the example constructors.
#include <iostream>

#include "fixture_catalog.hpp"
#include "pentaform/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: write_fixtures DIR\n";
    return 2;
  }
  for (const auto& [name, text] : pentaform::testing::fixture_catalog()) {
    pentaform::io::write_file(std::string(argv[1]) + "/" + name, text);
    std::cout << name << "\n";
  }
  return 0;
}
