#include <catch2/catch_amalgamated.hpp>

#include "mereo/fixtures.hpp"
#include "mereo/parthood.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace mereo;

TEST_CASE("non-transitive basis: P3 fails with witness (6,5,3), rest hold") {
  MereoStructure m = nontransitive_basis(true);
  AxiomReport rep = check_part_axioms(m);
  CHECK(rep.holds(AxiomId::P1));
  CHECK(rep.holds(AxiomId::P2));
  CHECK(!rep.holds(AxiomId::P3));
  CHECK(rep.holds(AxiomId::P4));
  CHECK(rep.holds(AxiomId::P5));

  const AxiomVerdict* v = rep.find(AxiomId::P3);
  REQUIRE(v);
  REQUIRE(v->witness);
  CHECK(m.domain.label(v->witness->elem("x")) == "6");
  CHECK(m.domain.label(v->witness->elem("y")) == "5");
  CHECK(m.domain.label(v->witness->elem("z")) == "3");
  CHECK(part_witness_violates(m, AxiomId::P3, *v->witness));
}

TEST_CASE("variant axioms match on the basis") {
  MereoStructure m = nontransitive_basis(true);
  AxiomReport rep = check_part_axioms(m, {AxiomId::P4v, AxiomId::P5v});
  CHECK(rep.holds(AxiomId::P4v));
  CHECK(rep.holds(AxiomId::P5v));
}

TEST_CASE("overlap and disjointness") {
  MereoStructure m = nontransitive_basis(true);
  const Domain& d = m.domain;
  auto e = [&](const char* s) { return d.index_of(s); };
  CHECK(overlap_p(m, e("2"), e("3")));   // share part 4
  CHECK(overlap_p(m, e("3"), e("3")));   // reflexive overlap
  CHECK(!overlap_p(m, e("4"), e("6")));  // distinct atoms
  CHECK(disjoint_p(m, e("4"), e("6")));
  CHECK(!disjoint_p(m, e("2"), e("3")));
}

TEST_CASE("induced sums on the basis match the known triple") {
  MereoStructure m = nontransitive_basis(true);
  const Domain& d = m.domain;
  auto e = [&](const char* s) { return d.index_of(s); };
  CHECK(sum_induced_holds(m, e("3"), subset_of(d, {"4", "5"})));
  CHECK(sum_induced_holds(m, e("5"), subset_of(d, {"6", "7"})));
  CHECK(!sum_induced_holds(m, e("3"), subset_of(d, {"4", "5", "6", "7"})));
  CHECK(sum_induced_holds(m, e("1"), subset_of(d, {"3", "5"})));  // sums are not unique here
  CHECK(sum_induced_holds(m, e("3"), subset_of(d, {"3", "5"})));
}

TEST_CASE("dropping reflexivity changes the induced sums") {
  MereoStructure bare = nontransitive_basis(false);
  const Domain& d = bare.domain;
  CHECK(!sum_induced_holds(bare, d.index_of("3"), subset_of(d, {"4", "5"})));
}

TEST_CASE("induced sum relation agrees with the pointwise predicate") {
  MereoStructure m = nontransitive_basis(true);
  SumRelation sr = induced_sum_relation(m);
  for (int x = 0; x < m.domain.size(); ++x)
    for (Subset X : all_subsets(m.domain.size()))
      CHECK(sr.holds(x, X) == sum_induced_holds(m, x, X));
}

TEST_CASE("axiom subset selection") {
  MereoStructure m = nontransitive_basis(true);
  AxiomReport rep = check_part_axioms(m, {AxiomId::P1, AxiomId::P3});
  CHECK(rep.verdicts.size() == 2);
  CHECK(rep.holds(AxiomId::P1));
  CHECK(!rep.holds(AxiomId::P3));
  CHECK(rep.find(AxiomId::P2) == nullptr);
  CHECK_THROWS_AS(check_part_axioms(m, {AxiomId::S1}), Error);
}

TEST_CASE("random relations: part checkers agree with the naive oracle") {
  std::mt19937_64 rng(0xfeedf00dULL);
  for (int trial = 0; trial < 600; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    MereoStructure m = testutil::random_part(n, rng);
    AxiomReport rep = check_part_axioms(
        m, {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P4v, AxiomId::P5,
            AxiomId::P5v});
    CHECK(rep.holds(AxiomId::P1) == oracle::p1(m));
    CHECK(rep.holds(AxiomId::P2) == oracle::p2(m));
    CHECK(rep.holds(AxiomId::P3) == oracle::p3(m));
    CHECK(rep.holds(AxiomId::P4) == oracle::p4(m));
    CHECK(rep.holds(AxiomId::P4v) == oracle::p4(m));
    CHECK(rep.holds(AxiomId::P5) == oracle::p5(m));
    CHECK(rep.holds(AxiomId::P5v) == oracle::p5(m));
    // every failing verdict carries a replayable witness
    for (const AxiomVerdict& v : rep.verdicts)
      if (!v.holds) {
        REQUIRE(v.witness);
        CHECK(part_witness_violates(m, v.id, *v.witness));
      }
  }
}

TEST_CASE("random relations: induced sums agree with the naive oracle") {
  std::mt19937_64 rng(0xabcdefULL);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    MereoStructure m = testutil::random_part(n, rng);
    for (int x = 0; x < n; ++x)
      for (Subset X : all_subsets(n))
        CHECK(sum_induced_holds(m, x, X) == oracle::sums(m, x, oracle::to_set(X)));
  }
}
