// Copyright 2026 The gjcluster Authors
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

#include <string>
#include <vector>

#include "gj/words.hpp"
#include "test_util.hpp"

namespace gjtest {

/// The named fixtures shared across the suites. `table_depth` is how far
/// the exhaustive oracle scans them; `reduced` records whether the basic
/// engine applies directly.
struct Fixture {
  std::string name;
  gj::Alphabet alphabet;
  std::vector<gj::Word> bad;
  int table_depth;
};

inline std::vector<Fixture> standard_fixtures() {
  auto az = [] {
    std::vector<gj::Letter> ls;
    for (char c = 'A'; c <= 'Z'; ++c) ls.push_back(std::string(1, c));
    return gj::Alphabet::concrete(std::move(ls));
  };
  return {
      {"two-words", az(), ws({"PIPI", "CACA"}), 2},
      {"four-words", az(), ws({"PIPI", "CACA", "PICA", "CAPI"}), 2},
      {"sex-xe", abc("ESX"), ws({"SEX", "XE"}), 8},
      {"isolated-children", abc("BG"), ws({"GBG"}), 8},
      {"dreidel", gj::Alphabet::concrete({"G", "H", "N", "S"}),
       ws({"GGGG", "HHHH", "NNNN", "SSSS"}), 8},
      {"nested-pi", abc("IP"), ws({"PI", "PIPI"}), 8},
      {"nested-ca", abc("CA"), ws({"CA", "CACA"}), 8},
      {"overlap-ladder", abc("ACIT"),
       ws({"AC", "CA", "CACA", "ICAC", "TICA", "TIT", "TI"}), 6},
      {"bridged-gap", abc("AB"), ws({"B", "ABBA"}), 8},
  };
}

}  // namespace gjtest
