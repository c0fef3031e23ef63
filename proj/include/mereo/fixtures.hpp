#pragma once
// The five hard-coded independence witnesses s1-fail .. s5-fail, plus the
// seven-element non-transitive part relation that s3-fail is induced from.
//
// Expected profiles record what the checkers actually report on each
// structure (every row is oracle-verified), not what the construction is
// advertised to show; s3-fail is the one place those two differ, see its
// note.

#include "equivalence.hpp"

namespace mereo {

struct WitnessFixture {
  std::string name;
  SumStructure structure;
  std::vector<std::pair<AxiomId, bool>> expected;  // axiom -> should hold
  std::string note;

  bool expects(AxiomId id) const {
    for (auto& [axiom, holds] : expected)
      if (axiom == id) return holds;
    throw Error(ErrorKind::bad_argument,
                std::string("no expectation recorded for ") + to_string(id));
  }
  std::vector<AxiomId> expected_ids() const {
    std::vector<AxiomId> out;
    for (auto& [axiom, holds] : expected) out.push_back(axiom);
    return out;
  }
};

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"s1-fail", "s2-fail", "s3-fail",
                                                 "s4-fail", "s5-fail"};
  return names;
}

/// Seven elements 1..7; strict pairs: reachability over the solid edges
/// 4-2, 6-2, 2-1, 3-1, 5-3, 4-3, 7-5 plus the single extra pair 6-5, which
/// is deliberately not closed (6 below 5 below 3, but 6 not below 3).
/// The reflexive flag exists because the overlap clause of the sum definition is
/// vacuously broken on an irreflexive relation: without the diagonal,
/// nothing is part of 4, so 3 would not even sum {4,5}.
inline MereoStructure nontransitive_basis(bool reflexive = true) {
  Domain d = make_domain({"1", "2", "3", "4", "5", "6", "7"});
  PartRelation r = reflexive ? PartRelation::identity(7) : PartRelation(7);
  // (x, y) meaning x below y, 1-based as labeled
  constexpr std::pair<int, int> pairs[] = {{4, 2}, {6, 2}, {2, 1}, {3, 1}, {5, 3},
                                           {4, 3}, {7, 5}, {6, 5}, {4, 1}, {6, 1},
                                           {5, 1}, {7, 1}, {7, 3}};
  for (auto [x, y] : pairs) r.set(x - 1, y - 1);
  return MereoStructure(std::move(d), std::move(r));
}

namespace detail {

inline SumStructure two_element_sum(std::initializer_list<std::pair<int, Mask>> pairs) {
  Domain d = make_domain({"a", "b"});
  SumRelation r(2);
  for (auto [x, X] : pairs) r.add(x, Subset(X));
  return SumStructure(std::move(d), std::move(r));
}

}  // namespace detail

inline WitnessFixture witness(const std::string& name) {
  using P = std::pair<AxiomId, bool>;
  if (name == "s1-fail") {
    return WitnessFixture{
        name,
        detail::two_element_sum({{0, 0b01}, {1, 0b10}}),
        {P{AxiomId::S1, false}, P{AxiomId::S2, true}, P{AxiomId::S3, true},
         P{AxiomId::S4, true}, P{AxiomId::S5, true}},
        "two singleton sums only; {a,b} has no sum"};
  }
  if (name == "s2-fail") {
    return WitnessFixture{
        name,
        detail::two_element_sum({{0, 0b01}, {0, 0b11}, {1, 0b10}, {1, 0b11}}),
        {P{AxiomId::S1, true}, P{AxiomId::S2, false}, P{AxiomId::S3, true},
         P{AxiomId::S4, true}, P{AxiomId::S5, true}},
        "a and b both sum {a,b}"};
  }
  if (name == "s3-fail") {
    return WitnessFixture{
        name,
        induce_sum(nontransitive_basis(true)),
        {P{AxiomId::S1, true}, P{AxiomId::S2, false}, P{AxiomId::S3, false},
         P{AxiomId::S4, true}, P{AxiomId::S5, true}},
        "sums induced from the seven-element non-transitive basis (reflexive "
        "closure; without the diagonal the overlap clause of the sum definition fails and 3 "
        "would not sum {4,5}). Intended as an S3-only counterexample, and S3 does "
        "fail (3 sums {4,5}, 5 sums {6,7}, 3 does not sum {4,5,6,7}); direct "
        "checking shows sum uniqueness breaks too: 1 and 3 both sum {3,5}. The "
        "profile above records the checker verdicts, S2 included."};
  }
  if (name == "s4-fail") {
    Domain d = make_domain({"a"});
    SumRelation r(1);
    r.add(0, Subset{});
    r.add(0, Subset(0b1));
    return WitnessFixture{
        name,
        SumStructure(std::move(d), std::move(r)),
        {P{AxiomId::S1, true}, P{AxiomId::S2, true}, P{AxiomId::S3, true},
         P{AxiomId::S4, false}, P{AxiomId::S5, true}},
        "a sums the empty collection, which contains nothing to s-overlap"};
  }
  if (name == "s5-fail") {
    return WitnessFixture{
        name,
        detail::two_element_sum({{0, 0b01}, {0, 0b11}, {1, 0b10}}),
        {P{AxiomId::S1, true}, P{AxiomId::S2, true}, P{AxiomId::S3, true},
         P{AxiomId::S4, true}, P{AxiomId::S5, false}, P{AxiomId::SSigma, true},
         P{AxiomId::SingletonSum, true}},
        "{b} is pre-dense in the s-parts of a, yet a does not sum {b}"};
  }
  throw Error(ErrorKind::bad_argument, "unknown fixture name: " + name);
}

inline std::vector<WitnessFixture> all_fixtures() {
  std::vector<WitnessFixture> out;
  for (const auto& n : fixture_names()) out.push_back(witness(n));
  return out;
}

}  // namespace mereo
