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

#include <doctest.h>

#include "gj/error.hpp"
#include "gj/series_engine.hpp"
#include "gj/symmetry.hpp"
#include "test_util.hpp"

using namespace gj;
using gjtest::w;
using gjtest::ws;

TEST_CASE("orbit computation") {
  Alphabet V = squarefree_alphabet(3);

  SUBCASE("squares split by root shape") {
    BadSet B = squarefree_badset(2, 3);
    auto orbits = badset_orbits(V, B, GroupKind::Symmetric);
    // {11,22,33} and the six doubled two-letter words.
    REQUIRE(orbits.size() == 2);
    std::size_t total = 0;
    for (const auto& o : orbits) total += o.size();
    CHECK(total == B.words.size());
    CHECK(orbits[0].size() + orbits[1].size() == 9);
  }
  SUBCASE("a symmetric pair forms one orbit") {
    Alphabet V2 = squarefree_alphabet(2);
    BadSet B = make_badset({{{"1"}, {"2"}}, {{"2"}, {"1"}}});
    auto orbits = badset_orbits(V2, B, GroupKind::Symmetric);
    CHECK(orbits.size() == 1);
    CHECK(orbits[0].size() == 2);
  }
  SUBCASE("non-invariant sets are rejected") {
    Alphabet V2 = squarefree_alphabet(2);
    BadSet B = make_badset({{{"1"}, {"2"}}});
    CHECK_THROWS_AS((void)badset_orbits(V2, B, GroupKind::Symmetric), Error);
  }
}

TEST_CASE("orbit-reduced solve equals the direct solve") {
  SUBCASE("doubled letters over two symbols") {
    Alphabet V = squarefree_alphabet(2);
    BadSet B = make_badset({{{"1"}, {"1"}}, {{"2"}, {"2"}}});
    VarTable v1, v2;
    SymClusterSystem sc =
        build_sym_cluster_system(V, B, GroupKind::Symmetric, Marking::Avoid, v1);
    CHECK(sc.representatives.size() == 1);  // one orbit instead of two
    RationalFunction direct = gj_avoid(V, B, v2);
    VarTable v3;
    CHECK(sym_gj_avoid(V, B, GroupKind::Symmetric, v3) == direct);
  }
  SUBCASE("memory-two squares over three symbols") {
    Alphabet V = squarefree_alphabet(3);
    BadSet B = squarefree_badset(2, 3);
    VarTable v1, v2;
    RationalFunction sym =
        sym_cluster_weight(V, B, GroupKind::Symmetric, Marking::Avoid, v1);
    RationalFunction direct =
        cluster_weight(V, B, MarkingSpec{Marking::Avoid, false}, v2);
    CHECK(sym == direct);
  }
  SUBCASE("uniform marking agrees too") {
    Alphabet V = squarefree_alphabet(2);
    BadSet B = make_badset({{{"1"}, {"1"}}, {{"2"}, {"2"}}});
    VarTable v1, v2;
    CHECK(sym_cluster_weight(V, B, GroupKind::Symmetric, Marking::Uniform, v1) ==
          cluster_weight(V, B, MarkingSpec{Marking::Uniform, false}, v2));
  }
}

TEST_CASE("signed permutations") {
  Alphabet V = Alphabet::concrete({"-1", "1"});

  SUBCASE("the orbit of [1,-1]") {
    BadSet B = make_badset({{{"1"}, {"-1"}}, {{"-1"}, {"1"}}});
    auto orbits = badset_orbits(V, B, GroupKind::Signed);
    CHECK(orbits.size() == 1);
    VarTable v1, v2;
    CHECK(sym_gj_avoid(V, B, GroupKind::Signed, v1) == gj_avoid(V, B, v2));
  }
  SUBCASE("two magnitudes") {
    Alphabet V2 = Alphabet::concrete({"-2", "-1", "1", "2"});
    // All doubled letters: invariant under signed permutations.
    BadSet B = make_badset({{{"1"}, {"1"}},
                            {{"-1"}, {"-1"}},
                            {{"2"}, {"2"}},
                            {{"-2"}, {"-2"}}});
    auto orbits = badset_orbits(V2, B, GroupKind::Signed);
    CHECK(orbits.size() == 1);
    VarTable v1, v2;
    CHECK(sym_gj_avoid(V2, B, GroupKind::Signed, v1) == gj_avoid(V2, B, v2));
  }
  SUBCASE("alphabets must be signed integers") {
    BadSet B = make_badset({{{"A"}}});
    CHECK_THROWS_AS(
        (void)badset_orbits(Alphabet::concrete({"A"}), B, GroupKind::Signed),
        Error);
  }
}

TEST_CASE("correlation multiset invariance") {
  Alphabet V = squarefree_alphabet(3);
  BadSet B = squarefree_badset(3, 3);
  auto orbits = badset_orbits(V, B, GroupKind::Symmetric);
  CHECK(correlation_multisets_invariant(B, orbits));

  SUBCASE("unknown count equals orbit count") {
    VarTable vars;
    SymClusterSystem sc =
        build_sym_cluster_system(V, B, GroupKind::Symmetric, Marking::Avoid, vars);
    CHECK(sc.representatives.size() == orbits.size());
    CHECK(orbits.size() < B.words.size());
  }
}
