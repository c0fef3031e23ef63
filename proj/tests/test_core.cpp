#include <catch2/catch_amalgamated.hpp>

#include "mereo/core.hpp"

using namespace mereo;

TEST_CASE("Subset basics") {
  Subset s;
  CHECK(s.empty());
  CHECK(s.count() == 0);
  s = s.with(2).with(0);
  CHECK(s.bits() == 0b101u);
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(s.count() == 2);
  CHECK(s.without(2) == Subset(0b001));
  CHECK(s.members() == std::vector<int>{0, 2});

  Subset t(0b111);
  CHECK(s.subset_of(t));
  CHECK(!t.subset_of(s));
  CHECK((s | Subset(0b010)) == t);
  CHECK((s & t) == s);
  CHECK(Subset(0b001) < Subset(0b010));

  int visited = 0, last = -1;
  s.for_each([&](int i) {
    ++visited;
    CHECK(i > last);  // ascending
    last = i;
  });
  CHECK(visited == 2);
}

TEST_CASE("singleton and full_mask") {
  CHECK(singleton(0) == Subset(1));
  CHECK(singleton(3) == Subset(8));
  CHECK(full_mask(0) == 0u);
  CHECK(full_mask(3) == 0b111u);
  CHECK(full_mask(64) == ~Mask{0});
}

TEST_CASE("all_subsets is ascending and complete") {
  std::vector<Mask> seen;
  for (Subset s : all_subsets(3)) seen.push_back(s.bits());
  REQUIRE(seen.size() == 8);
  for (size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == i);

  size_t nonempty = 0;
  for (Subset s : all_subsets(3, true)) {
    CHECK(!s.empty());
    ++nonempty;
  }
  CHECK(nonempty == 7);
}

TEST_CASE("Domain lookup and validation") {
  Domain d = make_domain({"a", "b", "c"});
  CHECK(d.size() == 3);
  CHECK(d.label(1) == "b");
  CHECK(d.find("c") == 2);
  CHECK(d.find("z") == -1);
  CHECK(d.index_of("a") == 0);
  CHECK_THROWS_AS(d.index_of("z"), Error);

  CHECK_THROWS_AS(make_domain({}), Error);
  CHECK_THROWS_AS(make_domain({"a", "a"}), Error);
  CHECK_THROWS_AS(make_domain({""}), Error);
  try {
    make_domain({});
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::empty_domain);
  }
  std::vector<std::string> wide;
  for (int i = 0; i < 65; ++i) wide.push_back("e" + std::to_string(i));
  try {
    make_domain(wide);
    FAIL("expected width_cap");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::width_cap);
  }
}

TEST_CASE("subset_of resolves names and rejects duplicates") {
  Domain d = make_domain({"a", "b", "c"});
  CHECK(subset_of(d, {"c", "a"}) == Subset(0b101));
  CHECK(subset_of(d, {}) == Subset());
  CHECK_THROWS_AS(subset_of(d, {"a", "a"}), Error);
  CHECK_THROWS_AS(subset_of(d, {"q"}), Error);
}

TEST_CASE("PartRelation storage") {
  PartRelation r(3);
  CHECK(!r.at(0, 1));
  r.set(0, 1);
  CHECK(r.at(0, 1));
  CHECK(!r.at(1, 0));
  r.set(0, 1, false);
  CHECK(!r.at(0, 1));
  r.set_below(2, 0b011);
  CHECK(r.below(2) == Subset(0b011));
  CHECK(r.at(0, 2));
  CHECK(r.at(1, 2));
  CHECK(!r.at(2, 2));

  PartRelation id = PartRelation::identity(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id.at(i, j) == (i == j));
  CHECK(id == PartRelation::identity(3));
  CHECK(!(id == r));
}

TEST_CASE("SumRelation storage") {
  SumRelation s(2);
  CHECK(!s.holds(0, Subset(0b01)));
  s.add(0, Subset(0b11));
  s.add(0, Subset(0b01));
  s.add(0, Subset(0b01));  // duplicate is a no-op
  CHECK(s.holds(0, Subset(0b01)));
  CHECK(s.holds(0, Subset(0b11)));
  CHECK(s.family(0) == std::vector<Mask>{0b01, 0b11});  // sorted
  CHECK(s.family(1).empty());
  CHECK(s.pair_count() == 2);
  s.remove(0, Subset(0b01));
  CHECK(!s.holds(0, Subset(0b01)));
  CHECK(s.pair_count() == 1);
  s.remove(0, Subset(0b01));  // absent is a no-op
  CHECK(s.pair_count() == 1);
}

TEST_CASE("structure constructors check dimensions") {
  Domain d = make_domain({"a", "b"});
  CHECK_THROWS_AS(MereoStructure(d, PartRelation(3)), Error);
  CHECK_THROWS_AS(SumStructure(d, SumRelation(1)), Error);
  MereoStructure m(d, PartRelation::identity(2));
  CHECK(m.domain.size() == 2);
  SumStructure s(d, SumRelation(2));
  CHECK(s.sum.size() == 2);
}
