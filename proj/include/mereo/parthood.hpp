#pragma once
// P1-P5 (and the P4'/P5' variants) over a MereoStructure, plus the derived
// relations: overlap, disjointness, and the induced sum relation.
// Witness scans are lexicographic: elements ascending by index, subsets
// ascending by numeric value, roles in the axiom's own variable order.

#include "core.hpp"
#include "report.hpp"

namespace mereo {

/// True iff some z is part of both x and y.
inline bool overlap_p(const MereoStructure& m, int x, int y) {
  return !(m.part.below(x) & m.part.below(y)).empty();
}

inline bool disjoint_p(const MereoStructure& m, int x, int y) {
  return !overlap_p(m, x, y);
}

/// Sum predicate: every member of X is part of x, and every part of x overlaps some
/// member of X. The second clause loops over all of M, not just known parts.
inline bool sum_induced_holds(const MereoStructure& m, int x, Subset X) {
  if (!X.subset_of(m.part.below(x))) return false;
  const int n = m.domain.size();
  for (int a = 0; a < n; ++a) {
    if (!m.part.at(a, x)) continue;
    bool overlaps_some = false;
    X.for_each([&](int y) { overlaps_some = overlaps_some || overlap_p(m, a, y); });
    if (!overlaps_some) return false;
  }
  return true;
}

/// The sum predicate applied pointwise over every subset.
inline SumRelation induced_sum_relation(const MereoStructure& m) {
  const int n = m.domain.size();
  SumRelation r(n);
  for (int x = 0; x < n; ++x)
    for (Subset X : all_subsets(n))
      if (sum_induced_holds(m, x, X)) r.add(x, X);
  return r;
}

// Violation predicates; the checkers scan instances with these and witness
// revalidation replays the same predicates.

inline bool p1_violated(const MereoStructure& m, int x) { return !m.part.at(x, x); }

inline bool p2_violated(const MereoStructure& m, int x, int y) {
  return x != y && m.part.at(x, y) && m.part.at(y, x);
}

inline bool p3_violated(const MereoStructure& m, int x, int y, int z) {
  return m.part.at(x, y) && m.part.at(y, z) && !m.part.at(x, z);
}

/// P4 supplementation: x not-part-of y demands a part of x disjoint from y.
inline bool p4_violated(const MereoStructure& m, int x, int y) {
  if (m.part.at(x, y)) return false;
  const int n = m.domain.size();
  for (int z = 0; z < n; ++z)
    if (m.part.at(z, x) && (m.part.below(z) & m.part.below(y)).empty()) return false;
  return true;
}

/// P4' is P4 with disjointness spelled through the named predicate; separate code path.
inline bool p4v_violated(const MereoStructure& m, int x, int y) {
  if (m.part.at(x, y)) return false;
  const int n = m.domain.size();
  for (int z = 0; z < n; ++z)
    if (m.part.at(z, x) && disjoint_p(m, z, y)) return false;
  return true;
}

/// P5 unrestricted sum existence, with the sum predicate written out longhand.
inline bool p5_violated(const MereoStructure& m, Subset X) {
  const int n = m.domain.size();
  for (int x = 0; x < n; ++x) {
    if (!X.subset_of(m.part.below(x))) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!m.part.at(a, x)) continue;
      bool ov = false;
      X.for_each([&](int y) { ov = ov || !(m.part.below(a) & m.part.below(y)).empty(); });
      ok = ov;
    }
    if (ok) return false;
  }
  return true;
}

/// P5' goes through sum_induced_holds; separate code path.
inline bool p5v_violated(const MereoStructure& m, Subset X) {
  const int n = m.domain.size();
  for (int x = 0; x < n; ++x)
    if (sum_induced_holds(m, x, X)) return false;
  return true;
}

namespace detail {

inline AxiomVerdict check_p1(const MereoStructure& m) {
  for (int x = 0; x < m.domain.size(); ++x)
    if (p1_violated(m, x)) return AxiomVerdict::fail(AxiomId::P1, Witness{}.add("x", x));
  return AxiomVerdict::pass(AxiomId::P1);
}

inline AxiomVerdict check_p2(const MereoStructure& m) {
  const int n = m.domain.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p2_violated(m, x, y))
        return AxiomVerdict::fail(AxiomId::P2, Witness{}.add("x", x).add("y", y));
  return AxiomVerdict::pass(AxiomId::P2);
}

inline AxiomVerdict check_p3(const MereoStructure& m) {
  const int n = m.domain.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p3_violated(m, x, y, z))
          return AxiomVerdict::fail(AxiomId::P3, Witness{}.add("x", x).add("y", y).add("z", z));
  return AxiomVerdict::pass(AxiomId::P3);
}

inline AxiomVerdict check_p4(const MereoStructure& m, AxiomId id) {
  const int n = m.domain.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool bad = id == AxiomId::P4 ? p4_violated(m, x, y) : p4v_violated(m, x, y);
      if (bad) return AxiomVerdict::fail(id, Witness{}.add("x", x).add("y", y));
    }
  return AxiomVerdict::pass(id);
}

inline AxiomVerdict check_p5(const MereoStructure& m, AxiomId id) {
  for (Subset X : all_subsets(m.domain.size(), /*nonempty_only=*/true)) {
    bool bad = id == AxiomId::P5 ? p5_violated(m, X) : p5v_violated(m, X);
    if (bad) return AxiomVerdict::fail(id, Witness{}.add("X", X));
  }
  return AxiomVerdict::pass(id);
}

}  // namespace detail

inline std::vector<AxiomId> default_part_axioms() {
  return {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5};
}

inline AxiomReport check_part_axioms(const MereoStructure& m,
                                     const std::vector<AxiomId>& which = default_part_axioms()) {
  AxiomReport rep;
  for (AxiomId id : which) {
    switch (id) {
      case AxiomId::P1: rep.verdicts.push_back(detail::check_p1(m)); break;
      case AxiomId::P2: rep.verdicts.push_back(detail::check_p2(m)); break;
      case AxiomId::P3: rep.verdicts.push_back(detail::check_p3(m)); break;
      case AxiomId::P4:
      case AxiomId::P4v: rep.verdicts.push_back(detail::check_p4(m, id)); break;
      case AxiomId::P5:
      case AxiomId::P5v: rep.verdicts.push_back(detail::check_p5(m, id)); break;
      default:
        throw Error(ErrorKind::bad_argument,
                    std::string("not a parthood axiom: ") + to_string(id));
    }
  }
  return rep;
}

/// Replays a witness against the axiom's violation predicate.
inline bool part_witness_violates(const MereoStructure& m, AxiomId id, const Witness& w) {
  switch (id) {
    case AxiomId::P1: return p1_violated(m, w.elem("x"));
    case AxiomId::P2: return p2_violated(m, w.elem("x"), w.elem("y"));
    case AxiomId::P3: return p3_violated(m, w.elem("x"), w.elem("y"), w.elem("z"));
    case AxiomId::P4: return p4_violated(m, w.elem("x"), w.elem("y"));
    case AxiomId::P4v: return p4v_violated(m, w.elem("x"), w.elem("y"));
    case AxiomId::P5: return p5_violated(m, w.subset("X"));
    case AxiomId::P5v: return p5v_violated(m, w.subset("X"));
    default: throw Error(ErrorKind::bad_argument, "no parthood predicate for this id");
  }
}

}  // namespace mereo
