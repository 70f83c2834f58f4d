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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gj/polynomial.hpp"

namespace gj {

// Letters are opaque tokens, so alphabets like {-2,-1,1,2} or multi
// character names work unchanged.
using Letter = std::string;
using Word = std::vector<Letter>;

/// `[A,B,C]`; the empty word renders as `[]`.
std::string render_word(const Word& w);
/// Parses the bracketed comma-separated form.
Word parse_word(const std::string& text);

/// Ordered alphabet, or a symbolic-size alphabet that carries only the
/// letters appearing in the bad words.
struct Alphabet {
  std::vector<Letter> letters;
  bool symbolic_size = false;

  int size() const { return static_cast<int>(letters.size()); }
  bool contains(const Letter& l) const;

  static Alphabet concrete(std::vector<Letter> ls);
  static Alphabet symbolic(std::vector<Letter> bad_letters);
};

/// Bad words with reducedness metadata. `reduced` is computed, not trusted.
struct BadSet {
  std::vector<Word> words;  // deduplicated, sorted by token order
  bool reduced = true;
};

BadSet make_badset(std::vector<Word> words);

bool is_factor(const Word& u, const Word& w);
bool is_proper_factor(const Word& u, const Word& w);

/// The |w|-1 proper nonempty prefixes.
std::vector<Word> heads(const Word& w);
/// The |w|-1 proper nonempty suffixes.
std::vector<Word> tails(const Word& w);
/// TAIL(u) intersect HEAD(v), ascending by length.
std::vector<Word> overlaps(const Word& u, const Word& v);
/// v with the prefix x removed; throws NotAPrefix.
Word chop(const Word& v, const Word& x);

/// Word weights: s^length, a product of per-letter variables x[v], or an
/// arbitrary polynomial weight per letter (e.g. symbolic probabilities
/// times a stopping variable).
class Weighting {
 public:
  static Weighting length(VarTable& vars);
  static Weighting letters(VarTable& vars, const Alphabet& alphabet);
  static Weighting custom(std::map<Letter, Polynomial> weights);

  Polynomial letter_weight(const Letter& l) const;
  Polynomial word_weight(const Word& w) const;

  bool letter_mode() const { return letter_mode_; }
  VarId length_var() const { return svar_; }

 private:
  bool letter_mode_ = false;
  bool custom_mode_ = false;
  VarId svar_{-1};
  std::map<Letter, VarId> xvars_;
  std::map<Letter, Polynomial> custom_;
};

/// Correlation polynomial u:v = sum over x in OVERLAP(u,v) of weight(v/x).
Polynomial correlation(const Word& u, const Word& v, const Weighting& wt);

/// Drops every word that has another member as a proper factor; the
/// avoidance language is unchanged.
BadSet reduce_badset(const BadSet& b);

/// The members of B with a nonempty overlap into v.
std::vector<Word> comp(const Word& v, const BadSet& b);

/// Occurrence counts of each member of B in w, by start position, aligned
/// with b.words.
std::vector<long> count_occurrences(const Word& w, const BadSet& b);

}  // namespace gj
