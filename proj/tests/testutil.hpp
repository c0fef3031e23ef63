// Shared helpers for the test suite: seeded random structures.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "mereo/core.hpp"

namespace testutil {

inline mereo::Domain domain_of(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return mereo::make_domain(std::move(labels));
}

// Arbitrary relation: each pair independently present; no axiom imposed.
inline mereo::MereoStructure random_part(int n, std::mt19937_64& rng) {
  mereo::PartRelation r(n);
  for (int y = 0; y < n; ++y)
    r.set_below(y, rng() & mereo::full_mask(n));
  return {domain_of(n), r};
}

// Arbitrary hybrid relation: each (element, subset) pair present with
// probability about one quarter.
inline mereo::SumStructure random_hybrid(int n, std::mt19937_64& rng) {
  mereo::SumRelation sr(n);
  for (int x = 0; x < n; ++x)
    for (mereo::Subset X : mereo::all_subsets(n))
      if ((rng() & 3) == 0) sr.add(x, X);
  return {domain_of(n), sr};
}

}  // namespace testutil
