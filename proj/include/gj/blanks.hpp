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

#include "gj/rational.hpp"
#include "gj/words.hpp"

namespace gj {

/// A bad pattern whose blank positions match any single letter. The blank
/// token is declared by the caller, never hardcoded.
struct PatternWord {
  std::vector<Letter> tokens;  // letters and blanks
  Letter blank;

  int blank_count() const;
};

/// All d^{#blanks} concrete substitutions, in letter order.
std::vector<Word> expand_pattern(const PatternWord& p, const Alphabet& V);

/// F(s, t_1..t_k): the coefficient of s^n * prod t_p^{m_p} counts n-letter
/// words where pattern p matches at exactly m_p positions. Expanded items
/// may nest or coincide across patterns, so this runs on the generalized
/// engine; the marker of pattern p is named after its token list.
RationalFunction blanks_count(const Alphabet& V,
                              const std::vector<PatternWord>& patterns,
                              VarTable& vars);

/// Generating function of words matching no pattern anywhere: expansions
/// are reduced and fed to the basic avoidance engine (equal to
/// blanks_count at every t_p := 0, but much cheaper).
RationalFunction blanks_avoid(const Alphabet& V,
                              const std::vector<PatternWord>& patterns,
                              VarTable& vars);

/// The marker variable name used for a pattern by blanks_count.
std::string pattern_marker_name(const PatternWord& p);

}  // namespace gj
