#pragma once
// S1-S5 (with the S4o variant), SSigma, singleton-sum, and the derived
// theorems over a SumStructure; plus the derived relations: s-part (ingr),
// s-overlap/s-disjointness, Ingr sets, pre-density, Sigma families, and
// the defined sum predicate re-read through the induced part relation.
//
// Witness scans are lexicographic: elements ascending, subsets ascending by
// numeric value, family members in stored (ascending) order, roles in the
// axiom's variable order.

#include <random>

#include "core.hpp"
#include "parthood.hpp"
#include "report.hpp"

namespace mereo {

struct CheckOptions {
  bool strict_s1_in_x = false;     // literal reading: the sum must lie in X itself
  int ssigma_exhaustive_cap = 20;  // exhaustive subfamily sweep iff |Sigma(x)| <= cap,
                                   // hard-limited to 26 (the sweep costs 2^|Sigma(x)|)
  int ssigma_samples = 10000;      // random subfamilies in the fallback
  std::uint64_t ssigma_seed = 0x5eed5eedull;
};

/// s-part: x is an s-part of y iff some summed collection of y contains x.
inline bool part_induced(const SumStructure& s, int x, int y) {
  for (Mask X : s.sum.family(y))
    if (Subset(X).contains(x)) return true;
  return false;
}

/// The s-part relation pointwise: the matrix of part_induced.
inline PartRelation induced_part_relation(const SumStructure& s) {
  const int n = s.domain.size();
  PartRelation r(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (part_induced(s, x, y)) r.set(x, y);
  return r;
}

/// Ingr(x): the set of s-parts of x, computed from the s-part definition directly.
inline Subset ingr_set(const SumStructure& s, int x) {
  Subset out;
  for (int y = 0; y < s.domain.size(); ++y)
    if (part_induced(s, y, x)) out = out.with(y);
  return out;
}

/// Ingr(A): union of Ingr over the members of A; empty for empty A.
inline Subset ingr_set_family(const SumStructure& s, Subset A) {
  Subset out;
  A.for_each([&](int a) { out = out | ingr_set(s, a); });
  return out;
}

/// s-overlap: x and y sum collections sharing at least one object.
inline bool s_overlap(const SumStructure& s, int x, int y) {
  for (Mask X : s.sum.family(x))
    for (Mask Y : s.sum.family(y))
      if (X & Y) return true;
  return false;
}

/// s-disjointness from its own universal definition, not negation of s_overlap.
inline bool s_disjoint(const SumStructure& s, int x, int y) {
  for (Mask X : s.sum.family(x))
    for (Mask Y : s.sum.family(y))
      if (X & Y) return false;
  return true;
}

/// A pre-dense in B: every b in B s-overlaps some a in A. Vacuous for empty B.
inline bool pre_dense(const SumStructure& s, Subset A, Subset B) {
  bool ok = true;
  B.for_each([&](int b) {
    if (!ok) return;
    bool hit = false;
    A.for_each([&](int a) { hit = hit || s_overlap(s, a, b); });
    ok = hit;
  });
  return ok;
}

/// View of the stored family Sigma(x); never a recomputation.
struct SigmaFamily {
  int owner;
  const std::vector<Mask>& raw;

  size_t size() const { return raw.size(); }
  Subset at(size_t i) const { return Subset(raw[i]); }
  bool contains(Subset X) const {
    return std::binary_search(raw.begin(), raw.end(), X.bits());
  }
};

inline SigmaFamily sigma(const SumStructure& s, int x) { return {x, s.sum.family(x)}; }

/// The sum predicate evaluated over the induced part relation.
inline bool sum_wrt_induced(const SumStructure& s, int x, Subset X) {
  return sum_induced_holds(MereoStructure(s.domain, induced_part_relation(s)), x, X);
}

namespace detail {

/// Per-element Ingr masks via family fold; extensionally equal to ingr_set.
inline std::vector<Mask> ingr_masks(const SumStructure& s) {
  const int n = s.domain.size();
  std::vector<Mask> out(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (Mask X : s.sum.family(x)) out[static_cast<size_t>(x)] |= X;
  return out;
}

/// soverl[x] = mask of y with s_overlap(x, y); one quadratic precomputation.
inline std::vector<Mask> soverl_masks(const SumStructure& s) {
  const int n = s.domain.size();
  std::vector<Mask> out(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (s_overlap(s, x, y)) {
        out[static_cast<size_t>(x)] |= Mask{1} << y;
        out[static_cast<size_t>(y)] |= Mask{1} << x;
      }
  return out;
}

inline Subset ingr_family_from(const std::vector<Mask>& ingr, Subset A) {
  Mask m = 0;
  A.for_each([&](int a) { m |= ingr[static_cast<size_t>(a)]; });
  return Subset(m);
}

}  // namespace detail

// Violation predicates (definition-route, no cached state); checkers confirm their
// candidate witness against these before returning, and revalidation replays
// them.

inline bool s1_violated(const SumStructure& s, Subset X, bool strict_in_x) {
  if (X.empty()) return false;
  if (strict_in_x) {
    bool found = false;
    X.for_each([&](int x) { found = found || s.sum.holds(x, X); });
    return !found;
  }
  for (int x = 0; x < s.domain.size(); ++x)
    if (s.sum.holds(x, X)) return false;
  return true;
}

inline bool s2_violated(const SumStructure& s, int x, Subset X, int y) {
  return x != y && s.sum.holds(x, X) && s.sum.holds(y, X);
}

inline bool s3_violated(const SumStructure& s, int x, Subset X, int y, Subset Y) {
  return s.sum.holds(x, X) && s.sum.holds(y, Y) && Y.contains(x) && !s.sum.holds(y, X | Y);
}

inline bool s4_violated(const SumStructure& s, int x, Subset X, Subset Y, int y) {
  if (!s.sum.holds(x, X) || !s.sum.holds(x, Y) || !Y.contains(y)) return false;
  bool saved = false;
  X.for_each([&](int z) { saved = saved || s_overlap(s, z, y); });
  return !saved;
}

inline bool s4o_violated(const SumStructure& s, int x, Subset X, int y) {
  if (!s.sum.holds(x, X) || !part_induced(s, y, x)) return false;
  bool saved = false;
  X.for_each([&](int z) { saved = saved || s_overlap(s, y, z); });
  return !saved;
}

inline bool s5_violated(const SumStructure& s, int x, Subset X) {
  Subset ix = ingr_set(s, x);
  if (!pre_dense(s, X, ix)) return false;
  return !s.sum.holds(x, ix & ingr_set_family(s, X));
}

inline bool ssigma_violated(const SumStructure& s, int x, const SubsetFamily& A) {
  if (A.empty()) return false;
  Subset u;
  for (Subset a : A) {
    if (!s.sum.holds(x, a)) return false;  // not a subfamily of Sigma(x)
    u = u | a;
  }
  return !s.sum.holds(x, u);
}

inline bool singleton_sum_violated(const SumStructure& s, int x, int y) {
  return x != y && s.sum.holds(x, singleton(y));
}

namespace detail {

inline AxiomVerdict check_s1(const SumStructure& s, bool strict) {
  for (Subset X : all_subsets(s.domain.size(), /*nonempty_only=*/true))
    if (s1_violated(s, X, strict)) return AxiomVerdict::fail(AxiomId::S1, Witness{}.add("X", X));
  return AxiomVerdict::pass(AxiomId::S1);
}

inline AxiomVerdict check_s2(const SumStructure& s) {
  const int n = s.domain.size();
  for (int x = 0; x < n; ++x)
    for (Mask Xm : s.sum.family(x))
      for (int y = 0; y < n; ++y)
        if (s2_violated(s, x, Subset(Xm), y))
          return AxiomVerdict::fail(AxiomId::S2, Witness{}.add("x", x).add("X", Subset(Xm)).add("y", y));
  return AxiomVerdict::pass(AxiomId::S2);
}

inline AxiomVerdict check_s3(const SumStructure& s) {
  const int n = s.domain.size();
  for (int x = 0; x < n; ++x)
    for (Mask Xm : s.sum.family(x))
      for (int y = 0; y < n; ++y)
        for (Mask Ym : s.sum.family(y))
          if (Subset(Ym).contains(x) && !s.sum.holds(y, Subset(Xm | Ym))) {
            Witness w = Witness{}.add("x", x).add("X", Subset(Xm)).add("y", y).add("Y", Subset(Ym));
            if (s3_violated(s, x, Subset(Xm), y, Subset(Ym)))
              return AxiomVerdict::fail(AxiomId::S3, std::move(w));
          }
  return AxiomVerdict::pass(AxiomId::S3);
}

inline AxiomVerdict check_s4(const SumStructure& s) {
  const int n = s.domain.size();
  auto sov = soverl_masks(s);
  for (int x = 0; x < n; ++x) {
    const auto& fam = s.sum.family(x);
    for (Mask Xm : fam) {
      // mask of y rescued by some z in X
      Mask rescued = 0;
      Subset(Xm).for_each([&](int z) { rescued |= sov[static_cast<size_t>(z)]; });
      for (Mask Ym : fam) {
        Mask doomed = Ym & ~rescued;
        if (doomed) {
          int y = __builtin_ctzll(doomed);
          Witness w = Witness{}.add("x", x).add("X", Subset(Xm)).add("Y", Subset(Ym)).add("y", y);
          if (s4_violated(s, x, Subset(Xm), Subset(Ym), y))
            return AxiomVerdict::fail(AxiomId::S4, std::move(w));
        }
      }
    }
  }
  return AxiomVerdict::pass(AxiomId::S4);
}

inline AxiomVerdict check_s4o(const SumStructure& s) {
  const int n = s.domain.size();
  auto sov = soverl_masks(s);
  auto ingr = ingr_masks(s);
  for (int x = 0; x < n; ++x)
    for (Mask Xm : s.sum.family(x)) {
      Mask rescued = 0;
      Subset(Xm).for_each([&](int z) { rescued |= sov[static_cast<size_t>(z)]; });
      Mask doomed = ingr[static_cast<size_t>(x)] & ~rescued;
      if (doomed) {
        int y = __builtin_ctzll(doomed);
        Witness w = Witness{}.add("x", x).add("X", Subset(Xm)).add("y", y);
        if (s4o_violated(s, x, Subset(Xm), y))
          return AxiomVerdict::fail(AxiomId::S4o, std::move(w));
      }
    }
  return AxiomVerdict::pass(AxiomId::S4o);
}

inline AxiomVerdict check_s5(const SumStructure& s) {
  const int n = s.domain.size();
  auto sov = soverl_masks(s);
  auto ingr = ingr_masks(s);
  for (int x = 0; x < n; ++x) {
    Subset ix(ingr[static_cast<size_t>(x)]);
    for (Subset X : all_subsets(n)) {
      bool dense = true;
      ix.for_each([&](int b) { dense = dense && (X.bits() & sov[static_cast<size_t>(b)]); });
      if (!dense) continue;
      Subset target = ix & detail::ingr_family_from(ingr, X);
      if (!s.sum.holds(x, target)) {
        Witness w = Witness{}.add("x", x).add("X", X);
        if (s5_violated(s, x, X)) return AxiomVerdict::fail(AxiomId::S5, std::move(w));
      }
    }
  }
  return AxiomVerdict::pass(AxiomId::S5);
}

inline AxiomVerdict check_ssigma(const SumStructure& s, const CheckOptions& opt) {
  const int n = s.domain.size();
  bool sampled = false;
  for (int x = 0; x < n; ++x) {
    const auto& fam = s.sum.family(x);
    const size_t k = fam.size();
    auto family_of = [&](Mask idx) {
      SubsetFamily A;
      for (Mask m = idx; m; m &= m - 1) A.push_back(Subset(fam[__builtin_ctzll(m)]));
      return A;
    };
    if (k <= static_cast<size_t>(opt.ssigma_exhaustive_cap)) {
      if (k == 0) continue;
      if (k > 26)
        throw Error(ErrorKind::size_cap,
                    "closure family of " + std::to_string(k) +
                        " collections is too large for an exhaustive sweep; lower "
                        "ssigma_exhaustive_cap");
      // incremental unions over subfamily index masks, ascending
      std::vector<Mask> uni(size_t{1} << k, 0);
      for (Mask idx = 1; idx < (Mask{1} << k); ++idx) {
        uni[idx] = uni[idx & (idx - 1)] | fam[__builtin_ctzll(idx)];
        if (!s.sum.holds(x, Subset(uni[idx]))) {
          SubsetFamily A = family_of(idx);
          if (ssigma_violated(s, x, A)) {
            auto v = AxiomVerdict::fail(AxiomId::SSigma, Witness{}.add("x", x).add("A", std::move(A)));
            v.method = "exhaustive";
            return v;
          }
        }
      }
    } else {
      sampled = true;
      // pairwise unions decide closure completely (union-induction); random
      // larger subfamilies are kept as direct witnesses.
      for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j)
          if (!s.sum.holds(x, Subset(fam[i] | fam[j]))) {
            SubsetFamily A{Subset(fam[i]), Subset(fam[j])};
            if (ssigma_violated(s, x, A)) {
              auto v = AxiomVerdict::fail(AxiomId::SSigma, Witness{}.add("x", x).add("A", std::move(A)));
              v.method = "pairwise+sampled";
              return v;
            }
          }
      std::mt19937_64 rng(opt.ssigma_seed);
      for (int t = 0; t < opt.ssigma_samples; ++t) {
        SubsetFamily A;
        Mask u = 0;
        for (size_t i = 0; i < k; ++i)
          if (rng() & 1) {
            A.push_back(Subset(fam[i]));
            u |= fam[i];
          }
        if (A.empty()) continue;
        if (!s.sum.holds(x, Subset(u)) && ssigma_violated(s, x, A)) {
          auto v = AxiomVerdict::fail(AxiomId::SSigma, Witness{}.add("x", x).add("A", std::move(A)));
          v.method = "pairwise+sampled";
          return v;
        }
      }
    }
  }
  auto v = AxiomVerdict::pass(AxiomId::SSigma);
  v.method = sampled ? "pairwise+sampled" : "exhaustive";
  return v;
}

inline AxiomVerdict check_singleton_sum(const SumStructure& s) {
  const int n = s.domain.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (singleton_sum_violated(s, x, y))
        return AxiomVerdict::fail(AxiomId::SingletonSum, Witness{}.add("x", x).add("y", y));
  return AxiomVerdict::pass(AxiomId::SingletonSum);
}

}  // namespace detail

inline std::vector<AxiomId> default_sum_axioms() {
  return {AxiomId::S1, AxiomId::S2, AxiomId::S3, AxiomId::S4, AxiomId::S5};
}

inline AxiomReport check_sum_axioms(const SumStructure& s,
                                    const std::vector<AxiomId>& which = default_sum_axioms(),
                                    const CheckOptions& opt = {}) {
  AxiomReport rep;
  for (AxiomId id : which) {
    switch (id) {
      case AxiomId::S1: rep.verdicts.push_back(detail::check_s1(s, opt.strict_s1_in_x)); break;
      case AxiomId::S2: rep.verdicts.push_back(detail::check_s2(s)); break;
      case AxiomId::S3: rep.verdicts.push_back(detail::check_s3(s)); break;
      case AxiomId::S4: rep.verdicts.push_back(detail::check_s4(s)); break;
      case AxiomId::S4o: rep.verdicts.push_back(detail::check_s4o(s)); break;
      case AxiomId::S5: rep.verdicts.push_back(detail::check_s5(s)); break;
      case AxiomId::SSigma: rep.verdicts.push_back(detail::check_ssigma(s, opt)); break;
      case AxiomId::SingletonSum: rep.verdicts.push_back(detail::check_singleton_sum(s)); break;
      default:
        throw Error(ErrorKind::bad_argument, std::string("not a sum axiom: ") + to_string(id));
    }
  }
  return rep;
}

// Derived-theorem violation predicates.

inline bool induced_reflexive_violated(const SumStructure& s, int x) {
  return !part_induced(s, x, x);
}
inline bool induced_antisymmetric_violated(const SumStructure& s, int x, int y) {
  return x != y && part_induced(s, x, y) && part_induced(s, y, x);
}
inline bool induced_transitive_violated(const SumStructure& s, int x, int y, int z) {
  return part_induced(s, x, y) && part_induced(s, y, z) && !part_induced(s, x, z);
}
inline bool self_sum_violated(const SumStructure& s, int x) {
  return !s.sum.holds(x, singleton(x));
}
inline bool no_empty_sum_violated(const SumStructure& s, int x) {
  return s.sum.holds(x, Subset{});
}
inline bool sum_of_own_parts_violated(const SumStructure& s, int y) {
  Subset iy = ingr_set(s, y);
  return !pre_dense(s, singleton(y), iy) || !s.sum.holds(y, iy);
}
inline bool ingr_monotone_violated(const SumStructure& s, int x, Subset X) {
  Subset ix = ingr_set(s, x);
  return X.subset_of(ix) && !ingr_set_family(s, X).subset_of(ix);
}
inline bool sum_of_common_parts_violated(const SumStructure& s, int x, Subset X) {
  return s.sum.holds(x, X) && !s.sum.holds(x, ingr_set(s, x) & ingr_set_family(s, X));
}
inline bool summed_parts_included_violated(const SumStructure& s, int x, Subset X) {
  return s.sum.holds(x, X) && !ingr_set_family(s, X).subset_of(ingr_set(s, x));
}
inline bool sum_of_part_closure_violated(const SumStructure& s, int x, Subset X) {
  return s.sum.holds(x, X) != s.sum.holds(x, ingr_set_family(s, X));
}
inline bool pre_dense_sum_violated(const SumStructure& s, int x, Subset X) {
  Subset ix = ingr_set(s, x);
  return pre_dense(s, X, ix) && X.subset_of(ix) && !s.sum.holds(x, X);
}
inline bool ingr_union_sigma_violated(const SumStructure& s, int x) {
  Subset via_scan = ingr_set(s, x);  // per-element membership scan
  Mask folded = 0;                   // union of the stored family
  for (Mask X : s.sum.family(x)) folded |= X;
  return via_scan.bits() != folded;
}
inline bool s_overlap_equivalence_violated(const SumStructure& s, int x, int y) {
  bool by_def = s_overlap(s, x, y);
  bool via_ingr = !(ingr_set(s, x) & ingr_set(s, y)).empty();
  bool via_part = overlap_p(MereoStructure(s.domain, induced_part_relation(s)), x, y);
  return by_def != via_ingr || by_def != via_part;
}
inline bool s_disjoint_equivalence_violated(const SumStructure& s, int x, int y) {
  bool by_def = s_disjoint(s, x, y);
  bool via_ingr = (ingr_set(s, x) & ingr_set(s, y)).empty();
  bool via_part = disjoint_p(MereoStructure(s.domain, induced_part_relation(s)), x, y);
  return by_def != via_ingr || by_def != via_part;
}
inline bool sum_agreement_violated(const SumStructure& s, int x, Subset X) {
  return s.sum.holds(x, X) != sum_wrt_induced(s, x, X);
}

/// Partition failure of {Sigma(x)} over the non-empty subsets; the witness
/// shape depends on which clause broke (see roles).
inline bool sigma_partition_violated(const SumStructure& s, const Witness& w) {
  const bool has_x = w.find("x"), has_y = w.find("y"), has_X = w.find("X");
  if (has_x && has_y && has_X)  // two owners share X
    return w.elem("x") != w.elem("y") && s.sum.holds(w.elem("x"), w.subset("X")) &&
           s.sum.holds(w.elem("y"), w.subset("X"));
  if (has_x && has_X)  // block contains the empty subset
    return w.subset("X").empty() && s.sum.holds(w.elem("x"), w.subset("X"));
  if (has_x)  // empty block
    return s.sum.family(w.elem("x")).empty();
  if (has_X) {  // uncovered non-empty subset
    if (w.subset("X").empty()) return false;
    for (int x = 0; x < s.domain.size(); ++x)
      if (s.sum.holds(x, w.subset("X"))) return false;
    return true;
  }
  return false;
}

namespace detail {

inline AxiomVerdict check_sigma_partition(const SumStructure& s) {
  const int n = s.domain.size();
  for (int x = 0; x < n; ++x)
    if (s.sum.family(x).empty())
      return AxiomVerdict::fail(AxiomId::SigmaPartition, Witness{}.add("x", x));
  for (int x = 0; x < n; ++x)
    if (s.sum.holds(x, Subset{}))
      return AxiomVerdict::fail(AxiomId::SigmaPartition, Witness{}.add("x", x).add("X", Subset{}));
  for (int x = 0; x < n; ++x)
    for (Mask Xm : s.sum.family(x))
      for (int y = x + 1; y < n; ++y)
        if (s.sum.holds(y, Subset(Xm)))
          return AxiomVerdict::fail(AxiomId::SigmaPartition,
                                    Witness{}.add("x", x).add("y", y).add("X", Subset(Xm)));
  for (Subset X : all_subsets(n, /*nonempty_only=*/true)) {
    bool owned = false;
    for (int x = 0; x < n && !owned; ++x) owned = s.sum.holds(x, X);
    if (!owned) return AxiomVerdict::fail(AxiomId::SigmaPartition, Witness{}.add("X", X));
  }
  return AxiomVerdict::pass(AxiomId::SigmaPartition);
}

template <class Pred>
inline AxiomVerdict scan_elems(const SumStructure& s, AxiomId id, Pred bad) {
  for (int x = 0; x < s.domain.size(); ++x)
    if (bad(x)) return AxiomVerdict::fail(id, Witness{}.add("x", x));
  return AxiomVerdict::pass(id);
}

template <class Pred>
inline AxiomVerdict scan_pairs(const SumStructure& s, AxiomId id, Pred bad) {
  for (int x = 0; x < s.domain.size(); ++x)
    for (int y = 0; y < s.domain.size(); ++y)
      if (bad(x, y)) return AxiomVerdict::fail(id, Witness{}.add("x", x).add("y", y));
  return AxiomVerdict::pass(id);
}

template <class Pred>
inline AxiomVerdict scan_elem_subsets(const SumStructure& s, AxiomId id, Pred bad) {
  for (int x = 0; x < s.domain.size(); ++x)
    for (Subset X : all_subsets(s.domain.size()))
      if (bad(x, X)) return AxiomVerdict::fail(id, Witness{}.add("x", x).add("X", X));
  return AxiomVerdict::pass(id);
}

}  // namespace detail

/// The theorem battery; meaningful on S-models, informative elsewhere.
inline AxiomReport derived_theorem_suite(const SumStructure& s, const CheckOptions& opt = {}) {
  AxiomReport rep;
  auto add = [&](AxiomVerdict v) { rep.verdicts.push_back(std::move(v)); };

  add(detail::scan_elems(s, AxiomId::InducedReflexive,
                         [&](int x) { return induced_reflexive_violated(s, x); }));
  add(detail::scan_pairs(s, AxiomId::InducedAntisymmetric,
                         [&](int x, int y) { return induced_antisymmetric_violated(s, x, y); }));
  {
    const int n = s.domain.size();
    AxiomVerdict v = AxiomVerdict::pass(AxiomId::InducedTransitive);
    for (int x = 0; x < n && v.holds; ++x)
      for (int y = 0; y < n && v.holds; ++y)
        for (int z = 0; z < n && v.holds; ++z)
          if (induced_transitive_violated(s, x, y, z))
            v = AxiomVerdict::fail(AxiomId::InducedTransitive,
                                   Witness{}.add("x", x).add("y", y).add("z", z));
    add(std::move(v));
  }
  add(detail::scan_elems(s, AxiomId::SelfSum, [&](int x) { return self_sum_violated(s, x); }));
  add(detail::check_singleton_sum(s));
  add(detail::scan_elems(s, AxiomId::NoEmptySum,
                         [&](int x) { return no_empty_sum_violated(s, x); }));
  add(detail::scan_elems(s, AxiomId::SumOfOwnParts,
                         [&](int y) { return sum_of_own_parts_violated(s, y); }));
  add(detail::scan_elem_subsets(s, AxiomId::IngrMonotone,
                                [&](int x, Subset X) { return ingr_monotone_violated(s, x, X); }));
  add(detail::scan_elem_subsets(s, AxiomId::SumOfCommonParts, [&](int x, Subset X) {
    return sum_of_common_parts_violated(s, x, X);
  }));
  add(detail::scan_elem_subsets(s, AxiomId::SummedPartsIncluded, [&](int x, Subset X) {
    return summed_parts_included_violated(s, x, X);
  }));
  add(detail::scan_elem_subsets(s, AxiomId::SumOfPartClosure, [&](int x, Subset X) {
    return sum_of_part_closure_violated(s, x, X);
  }));
  add(detail::scan_elem_subsets(s, AxiomId::PreDenseSum, [&](int x, Subset X) {
    return pre_dense_sum_violated(s, x, X);
  }));
  add(detail::check_sigma_partition(s));
  add(detail::scan_elems(s, AxiomId::IngrUnionSigma,
                         [&](int x) { return ingr_union_sigma_violated(s, x); }));
  add(detail::check_ssigma(s, opt));
  add(detail::scan_pairs(s, AxiomId::SOverlapEquivalence, [&](int x, int y) {
    return s_overlap_equivalence_violated(s, x, y);
  }));
  add(detail::scan_pairs(s, AxiomId::SDisjointEquivalence, [&](int x, int y) {
    return s_disjoint_equivalence_violated(s, x, y);
  }));
  add(detail::scan_elem_subsets(s, AxiomId::SumAgreement, [&](int x, Subset X) {
    return sum_agreement_violated(s, x, X);
  }));
  return rep;
}

/// Replays a witness against the violation predicate for any sum-side id.
inline bool sum_witness_violates(const SumStructure& s, AxiomId id, const Witness& w,
                                 const CheckOptions& opt = {}) {
  switch (id) {
    case AxiomId::S1: return s1_violated(s, w.subset("X"), opt.strict_s1_in_x);
    case AxiomId::S2: return s2_violated(s, w.elem("x"), w.subset("X"), w.elem("y"));
    case AxiomId::S3:
      return s3_violated(s, w.elem("x"), w.subset("X"), w.elem("y"), w.subset("Y"));
    case AxiomId::S4:
      return s4_violated(s, w.elem("x"), w.subset("X"), w.subset("Y"), w.elem("y"));
    case AxiomId::S4o: return s4o_violated(s, w.elem("x"), w.subset("X"), w.elem("y"));
    case AxiomId::S5: return s5_violated(s, w.elem("x"), w.subset("X"));
    case AxiomId::SSigma: return ssigma_violated(s, w.elem("x"), w.family("A"));
    case AxiomId::SingletonSum: return singleton_sum_violated(s, w.elem("x"), w.elem("y"));
    case AxiomId::InducedReflexive: return induced_reflexive_violated(s, w.elem("x"));
    case AxiomId::InducedAntisymmetric:
      return induced_antisymmetric_violated(s, w.elem("x"), w.elem("y"));
    case AxiomId::InducedTransitive:
      return induced_transitive_violated(s, w.elem("x"), w.elem("y"), w.elem("z"));
    case AxiomId::SelfSum: return self_sum_violated(s, w.elem("x"));
    case AxiomId::NoEmptySum: return no_empty_sum_violated(s, w.elem("x"));
    case AxiomId::SumOfOwnParts: return sum_of_own_parts_violated(s, w.elem("x"));
    case AxiomId::IngrMonotone: return ingr_monotone_violated(s, w.elem("x"), w.subset("X"));
    case AxiomId::SumOfCommonParts:
      return sum_of_common_parts_violated(s, w.elem("x"), w.subset("X"));
    case AxiomId::SummedPartsIncluded:
      return summed_parts_included_violated(s, w.elem("x"), w.subset("X"));
    case AxiomId::SumOfPartClosure:
      return sum_of_part_closure_violated(s, w.elem("x"), w.subset("X"));
    case AxiomId::PreDenseSum: return pre_dense_sum_violated(s, w.elem("x"), w.subset("X"));
    case AxiomId::SigmaPartition: return sigma_partition_violated(s, w);
    case AxiomId::IngrUnionSigma: return ingr_union_sigma_violated(s, w.elem("x"));
    case AxiomId::SOverlapEquivalence:
      return s_overlap_equivalence_violated(s, w.elem("x"), w.elem("y"));
    case AxiomId::SDisjointEquivalence:
      return s_disjoint_equivalence_violated(s, w.elem("x"), w.elem("y"));
    case AxiomId::SumAgreement: return sum_agreement_violated(s, w.elem("x"), w.subset("X"));
    default: throw Error(ErrorKind::bad_argument, "no sum predicate for this id");
  }
}

}  // namespace mereo
