#pragma once
// The two induction maps between part structures and sum structures, the
// round-trip identity checks, and the explicit finite bijection between the
// two model classes at a fixed domain size.

#include <optional>
#include <utility>

#include "core.hpp"
#include "parthood.hpp"
#include "report.hpp"
#include "sum.hpp"

namespace mereo {

/// Part structure -> sum structure, by reading the sum definition pointwise.
inline SumStructure induce_sum(const MereoStructure& m) {
  return SumStructure(m.domain, induced_sum_relation(m));
}

/// Sum structure -> part structure, by reading the s-part definition pointwise.
inline MereoStructure induce_part(const SumStructure& s) {
  return MereoStructure(s.domain, induced_part_relation(s));
}

struct RoundtripReport {
  enum class Direction { part_first, sum_first };

  Direction direction;
  bool in_theory;  // the input satisfied its own axiom battery
  bool equal;

  // part_first: the relations being compared
  std::optional<PartRelation> original_part, reconstructed_part;
  // sum_first likewise
  std::optional<SumRelation> original_sum, reconstructed_sum;

  // first point of disagreement, scan order (x, y) / (x, X) ascending
  std::optional<std::pair<int, int>> part_difference;
  std::optional<std::pair<int, Subset>> sum_difference;
};

/// Compares the part relation with the one recovered through the induced sums.
inline RoundtripReport roundtrip_part(const MereoStructure& m) {
  RoundtripReport rep;
  rep.direction = RoundtripReport::Direction::part_first;
  rep.in_theory = check_part_axioms(m).all_hold();
  PartRelation back = induced_part_relation(induce_sum(m));
  rep.original_part = m.part;
  rep.reconstructed_part = back;
  rep.equal = (m.part == back);
  if (!rep.equal) {
    const int n = m.domain.size();
    for (int x = 0; x < n && !rep.part_difference; ++x)
      for (int y = 0; y < n; ++y)
        if (m.part.at(x, y) != back.at(x, y)) {
          rep.part_difference = {x, y};
          break;
        }
  }
  return rep;
}

/// Compares the sum relation with the sum definition taken over the induced part relation.
inline RoundtripReport roundtrip_sum(const SumStructure& s) {
  RoundtripReport rep;
  rep.direction = RoundtripReport::Direction::sum_first;
  rep.in_theory = check_sum_axioms(s).all_hold();
  SumStructure back = induce_sum(induce_part(s));
  rep.original_sum = s.sum;
  rep.reconstructed_sum = back.sum;
  rep.equal = (s.sum == back.sum);
  if (!rep.equal) {
    const int n = s.domain.size();
    for (int x = 0; x < n && !rep.sum_difference; ++x)
      for (Subset X : all_subsets(n))
        if (s.sum.holds(x, X) != back.sum.holds(x, X)) {
          rep.sum_difference = {x, X};
          break;
        }
  }
  return rep;
}

struct BijectionResult {
  bool ok = false;
  // pairing[i] = index into the sum-model list matched with part model i
  std::vector<size_t> pairing;
  std::string detail;  // first mismatch, human-readable
};

/// Checks that induce_sum maps the part-model list one-to-one onto the
/// sum-model list with induce_part as its inverse, and returns the pairing.
/// Both lists must enumerate models over domains of size n.
inline BijectionResult verify_bijection(int n, const std::vector<MereoStructure>& ms_models,
                                        const std::vector<SumStructure>& s_models) {
  BijectionResult out;
  if (ms_models.size() != s_models.size()) {
    out.detail = "list sizes differ: " + std::to_string(ms_models.size()) + " vs " +
                 std::to_string(s_models.size());
    return out;
  }
  for (size_t i = 0; i < ms_models.size(); ++i)
    if (ms_models[i].domain.size() != n) {
      out.detail = "part model " + std::to_string(i) + " has the wrong domain size";
      return out;
    }
  for (size_t j = 0; j < s_models.size(); ++j)
    if (s_models[j].domain.size() != n) {
      out.detail = "sum model " + std::to_string(j) + " has the wrong domain size";
      return out;
    }
  std::vector<bool> used(s_models.size(), false);
  for (size_t i = 0; i < ms_models.size(); ++i) {
    SumStructure image = induce_sum(ms_models[i]);
    bool found = false;
    for (size_t j = 0; j < s_models.size(); ++j) {
      if (used[j] || s_models[j].domain.size() != image.domain.size()) continue;
      if (s_models[j].sum == image.sum) {
        if (!(induce_part(s_models[j]).part == ms_models[i].part)) {
          out.detail = "induce_part does not invert induce_sum at part model " +
                       std::to_string(i);
          return out;
        }
        used[j] = true;
        out.pairing.push_back(j);
        found = true;
        break;
      }
    }
    if (!found) {
      out.detail = "no sum model matches the image of part model " + std::to_string(i);
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace mereo
