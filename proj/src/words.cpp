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

#include "gj/words.hpp"

#include <algorithm>
#include <sstream>

#include "gj/error.hpp"

namespace gj {

std::string render_word(const Word& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << "]";
  return os.str();
}

Word parse_word(const std::string& text) {
  std::size_t a = text.find('[');
  std::size_t b = text.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw Error("BadWordLiteral", "expected a bracketed word: " + text);
  Word w;
  std::string inner = text.substr(a + 1, b - a - 1);
  std::string tok;
  std::istringstream is(inner);
  while (std::getline(is, tok, ',')) {
    // Trim surrounding whitespace.
    std::size_t lo = tok.find_first_not_of(" \t");
    std::size_t hi = tok.find_last_not_of(" \t");
    if (lo == std::string::npos)
      throw Error("BadWordLiteral", "empty token in word: " + text);
    w.push_back(tok.substr(lo, hi - lo + 1));
  }
  return w;
}

bool Alphabet::contains(const Letter& l) const {
  return std::find(letters.begin(), letters.end(), l) != letters.end();
}

Alphabet Alphabet::concrete(std::vector<Letter> ls) {
  Alphabet a;
  a.letters = std::move(ls);
  for (std::size_t i = 0; i < a.letters.size(); ++i)
    for (std::size_t j = i + 1; j < a.letters.size(); ++j)
      if (a.letters[i] == a.letters[j])
        throw Error("BadAlphabet", "duplicate letter " + a.letters[i]);
  if (a.letters.empty()) throw Error("BadAlphabet", "alphabet is empty");
  return a;
}

Alphabet Alphabet::symbolic(std::vector<Letter> bad_letters) {
  std::sort(bad_letters.begin(), bad_letters.end());
  bad_letters.erase(std::unique(bad_letters.begin(), bad_letters.end()),
                    bad_letters.end());
  Alphabet a;
  a.letters = std::move(bad_letters);
  a.symbolic_size = true;
  return a;
}

BadSet make_badset(std::vector<Word> words) {
  for (const Word& w : words)
    if (w.empty()) throw Error("BadWordLiteral", "empty bad word");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  BadSet b;
  b.words = std::move(words);
  b.reduced = true;
  for (const Word& w : b.words) {
    for (const Word& u : b.words) {
      if (&u != &w && is_proper_factor(u, w)) {
        b.reduced = false;
        break;
      }
    }
    if (!b.reduced) break;
  }
  return b;
}

bool is_factor(const Word& u, const Word& w) {
  if (u.empty() || u.size() > w.size()) return u.empty();
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
    if (std::equal(u.begin(), u.end(), w.begin() + static_cast<long>(i)))
      return true;
  return false;
}

bool is_proper_factor(const Word& u, const Word& w) {
  return u != w && is_factor(u, w);
}

std::vector<Word> heads(const Word& w) {
  if (w.empty()) throw Error("BadWordLiteral", "heads of the empty word");
  std::vector<Word> out;
  for (std::size_t n = 1; n < w.size(); ++n)
    out.emplace_back(w.begin(), w.begin() + static_cast<long>(n));
  return out;
}

std::vector<Word> tails(const Word& w) {
  if (w.empty()) throw Error("BadWordLiteral", "tails of the empty word");
  std::vector<Word> out;
  for (std::size_t n = 1; n < w.size(); ++n)
    out.emplace_back(w.end() - static_cast<long>(n), w.end());
  return out;
}

std::vector<Word> overlaps(const Word& u, const Word& v) {
  std::vector<Word> out;
  // A member is a proper suffix of u and a proper prefix of v.
  for (std::size_t n = 1; n < u.size() && n < v.size(); ++n)
    if (std::equal(u.end() - static_cast<long>(n), u.end(), v.begin()))
      out.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
  return out;
}

Word chop(const Word& v, const Word& x) {
  if (x.size() > v.size() ||
      !std::equal(x.begin(), x.end(), v.begin()))
    throw Error("NotAPrefix",
                render_word(x) + " is not a prefix of " + render_word(v));
  return Word(v.begin() + static_cast<long>(x.size()), v.end());
}

Weighting Weighting::length(VarTable& vars) {
  Weighting w;
  w.letter_mode_ = false;
  w.svar_ = vars.intern("s");
  return w;
}

Weighting Weighting::letters(VarTable& vars, const Alphabet& alphabet) {
  if (alphabet.symbolic_size)
    throw Error("SymbolicAlphabet",
                "letter weights need a concrete alphabet");
  Weighting w;
  w.letter_mode_ = true;
  w.svar_ = vars.intern("s");
  for (const Letter& l : alphabet.letters)
    w.xvars_.emplace(l, vars.intern("x[" + l + "]"));
  return w;
}

Weighting Weighting::custom(std::map<Letter, Polynomial> weights) {
  Weighting w;
  w.custom_mode_ = true;
  w.custom_ = std::move(weights);
  return w;
}

Polynomial Weighting::letter_weight(const Letter& l) const {
  if (custom_mode_) {
    auto it = custom_.find(l);
    if (it == custom_.end())
      throw Error("BadAlphabet", "letter " + l + " has no assigned weight");
    return it->second;
  }
  if (!letter_mode_) return Polynomial::variable(svar_);
  auto it = xvars_.find(l);
  if (it == xvars_.end())
    throw Error("BadAlphabet", "letter " + l + " is not in the alphabet");
  return Polynomial::variable(it->second);
}

Polynomial Weighting::word_weight(const Word& w) const {
  if (!letter_mode_ && !custom_mode_) {
    return Polynomial::term(
        Monomial::var(svar_, static_cast<std::int32_t>(w.size())), BigInt(1));
  }
  Polynomial p(BigInt(1));
  for (const Letter& l : w) p = p * letter_weight(l);
  return p;
}

Polynomial correlation(const Word& u, const Word& v, const Weighting& wt) {
  Polynomial acc;
  for (const Word& x : overlaps(u, v)) acc += wt.word_weight(chop(v, x));
  return acc;
}

BadSet reduce_badset(const BadSet& b) {
  std::vector<Word> keep;
  for (const Word& w : b.words) {
    bool superfluous = false;
    for (const Word& u : b.words)
      if (u != w && is_proper_factor(u, w)) {
        superfluous = true;
        break;
      }
    if (!superfluous) keep.push_back(w);
  }
  return make_badset(std::move(keep));
}

std::vector<Word> comp(const Word& v, const BadSet& b) {
  std::vector<Word> out;
  for (const Word& u : b.words)
    if (!overlaps(u, v).empty()) out.push_back(u);
  return out;
}

std::vector<long> count_occurrences(const Word& w, const BadSet& b) {
  std::vector<long> counts(b.words.size(), 0);
  for (std::size_t k = 0; k < b.words.size(); ++k) {
    const Word& u = b.words[k];
    if (u.empty() || u.size() > w.size()) continue;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
      if (std::equal(u.begin(), u.end(), w.begin() + static_cast<long>(i)))
        ++counts[k];
  }
  return counts;
}

}  // namespace gj
