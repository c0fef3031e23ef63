#include <catch2/catch_amalgamated.hpp>

#include "mereo/enumerate.hpp"
#include "mereo/equivalence.hpp"
#include "mereo/fixtures.hpp"

using namespace mereo;

TEST_CASE("induce_sum then induce_part is the identity on good models") {
  for (int n : {1, 3}) {
    EnumerationResult res = enumerate_mereo(n, /*collect=*/true);
    REQUIRE(!res.part_models.empty());
    for (const MereoStructure& m : res.part_models) {
      SumStructure s = induce_sum(m);
      CHECK(check_sum_axioms(s).all_hold());
      MereoStructure back = induce_part(s);
      CHECK(back.part == m.part);

      RoundtripReport rep = roundtrip_part(m);
      CHECK(rep.in_theory);
      CHECK(rep.equal);
      CHECK(!rep.part_difference);
    }
  }
}

TEST_CASE("induce_part then induce_sum is the identity on good models") {
  for (int n : {1, 3}) {
    EnumerationResult res = enumerate_sum(n, /*collect=*/true);
    REQUIRE(!res.sum_models.empty());
    for (const SumStructure& s : res.sum_models) {
      MereoStructure m = induce_part(s);
      CHECK(check_part_axioms(m).all_hold());
      SumStructure back = induce_sum(m);
      CHECK(back.sum == s.sum);

      RoundtripReport rep = roundtrip_sum(s);
      CHECK(rep.in_theory);
      CHECK(rep.equal);
      CHECK(!rep.sum_difference);
    }
  }
}

TEST_CASE("round-trip on a structure outside the theory reports honestly") {
  SumStructure s = witness("s2-fail").structure;
  RoundtripReport rep = roundtrip_sum(s);
  CHECK(!rep.in_theory);
  CHECK(!rep.equal);
  REQUIRE(rep.sum_difference);
  const Domain& d = s.domain;
  CHECK(d.label(rep.sum_difference->first) == "a");
  CHECK(rep.sum_difference->second == singleton(d.index_of("b")));
}

TEST_CASE("round-trip outside the theory: reflexivity is the load-bearing axiom") {
  // The reflexive basis breaks transitivity, yet the round-trip still
  // restores it: every element sums its own parts-set, so the induced
  // s-part relation coincides with the original order whenever the
  // relation is reflexive.
  MereoStructure reflexive = nontransitive_basis(true);
  RoundtripReport rep = roundtrip_part(reflexive);
  CHECK(!rep.in_theory);
  CHECK(rep.equal);

  // Without the diagonal, atoms overlap nothing, no collection containing
  // them is summed, and the round-trip loses pairs.
  MereoStructure bare = nontransitive_basis(false);
  RoundtripReport lost = roundtrip_part(bare);
  CHECK(!lost.in_theory);
  CHECK(!lost.equal);
  REQUIRE(lost.part_difference);
}

TEST_CASE("verify_bijection pairs the enumerated model lists") {
  for (int n : {1, 2, 3}) {
    auto part = enumerate_mereo(n, true);
    auto sum = enumerate_sum(n, true);
    BijectionResult b = verify_bijection(n, part.part_models, sum.sum_models);
    INFO(b.detail);
    CHECK(b.ok);
    CHECK(b.pairing.size() == part.part_models.size());
    // pairing is a permutation
    std::vector<bool> used(sum.sum_models.size(), false);
    for (size_t idx : b.pairing) {
      REQUIRE(idx < used.size());
      CHECK(!used[idx]);
      used[idx] = true;
    }
  }
}

TEST_CASE("verify_bijection rejects tampered lists") {
  auto part = enumerate_mereo(3, true);
  auto sum = enumerate_sum(3, true);
  REQUIRE(part.part_models.size() == 3);

  SECTION("dropped sum model") {
    auto fewer = sum.sum_models;
    fewer.pop_back();
    CHECK(!verify_bijection(3, part.part_models, fewer).ok);
  }
  SECTION("duplicated sum model") {
    auto dup = sum.sum_models;
    dup.back() = dup.front();
    CHECK(!verify_bijection(3, part.part_models, dup).ok);
  }
  SECTION("corrupted part model") {
    auto bad = part.part_models;
    bad.front().part.set(0, 1, !bad.front().part.at(0, 1));
    CHECK(!verify_bijection(3, bad, sum.sum_models).ok);
  }
  SECTION("wrong domain size") {
    auto res1 = enumerate_mereo(1, true);
    CHECK(!verify_bijection(3, res1.part_models, sum.sum_models).ok);
  }
}
