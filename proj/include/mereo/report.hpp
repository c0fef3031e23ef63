#pragma once
// Verdicts and witnesses. A witness records the violating instance with roles
// named after the axiom's own variables; holds == false iff a witness exists.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core.hpp"

namespace mereo {

enum class AxiomId {
  P1, P2, P3, P4, P4v, P5, P5v,
  S1, S2, S3, S4, S4o, S5, SSigma, SingletonSum,
  // derived theorems
  InducedReflexive, InducedAntisymmetric, InducedTransitive,
  SelfSum, NoEmptySum, SumOfOwnParts,
  IngrMonotone, SumOfCommonParts, SummedPartsIncluded, SumOfPartClosure,
  PreDenseSum, SigmaPartition, IngrUnionSigma,
  SOverlapEquivalence, SDisjointEquivalence, SumAgreement,
};

inline const char* to_string(AxiomId id) {
  switch (id) {
    case AxiomId::P1: return "P1";
    case AxiomId::P2: return "P2";
    case AxiomId::P3: return "P3";
    case AxiomId::P4: return "P4";
    case AxiomId::P4v: return "P4'";
    case AxiomId::P5: return "P5";
    case AxiomId::P5v: return "P5'";
    case AxiomId::S1: return "S1";
    case AxiomId::S2: return "S2";
    case AxiomId::S3: return "S3";
    case AxiomId::S4: return "S4";
    case AxiomId::S4o: return "S4o";
    case AxiomId::S5: return "S5";
    case AxiomId::SSigma: return "SSigma";
    case AxiomId::SingletonSum: return "singleton-sum";
    case AxiomId::InducedReflexive: return "induced-reflexive";
    case AxiomId::InducedAntisymmetric: return "induced-antisymmetric";
    case AxiomId::InducedTransitive: return "induced-transitive";
    case AxiomId::SelfSum: return "self-sum";
    case AxiomId::NoEmptySum: return "no-empty-sum";
    case AxiomId::SumOfOwnParts: return "sum-of-own-parts";
    case AxiomId::IngrMonotone: return "ingr-monotone";
    case AxiomId::SumOfCommonParts: return "sum-of-common-parts";
    case AxiomId::SummedPartsIncluded: return "summed-parts-included";
    case AxiomId::SumOfPartClosure: return "sum-of-part-closure";
    case AxiomId::PreDenseSum: return "pre-dense-sum";
    case AxiomId::SigmaPartition: return "sigma-partition";
    case AxiomId::IngrUnionSigma: return "ingr-union-sigma";
    case AxiomId::SOverlapEquivalence: return "s-overlap-equivalence";
    case AxiomId::SDisjointEquivalence: return "s-disjoint-equivalence";
    case AxiomId::SumAgreement: return "sum-agreement";
  }
  return "?";
}

/// Case-insensitive lookup; accepts a few shell-friendly aliases.
inline std::optional<AxiomId> axiom_from_string(std::string_view name) {
  std::string low;
  low.reserve(name.size());
  for (char c : name) low.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  static const std::vector<std::pair<std::string, AxiomId>> table = {
      {"p1", AxiomId::P1}, {"p2", AxiomId::P2}, {"p3", AxiomId::P3},
      {"p4", AxiomId::P4}, {"p4'", AxiomId::P4v}, {"p4p", AxiomId::P4v},
      {"p5", AxiomId::P5}, {"p5'", AxiomId::P5v}, {"p5p", AxiomId::P5v},
      {"s1", AxiomId::S1}, {"s2", AxiomId::S2}, {"s3", AxiomId::S3},
      {"s4", AxiomId::S4}, {"s4o", AxiomId::S4o}, {"s4circ", AxiomId::S4o},
      {"s5", AxiomId::S5}, {"ssigma", AxiomId::SSigma},
      {"singleton-sum", AxiomId::SingletonSum},
      {"induced-reflexive", AxiomId::InducedReflexive},
      {"induced-antisymmetric", AxiomId::InducedAntisymmetric},
      {"induced-transitive", AxiomId::InducedTransitive},
      {"self-sum", AxiomId::SelfSum},
      {"no-empty-sum", AxiomId::NoEmptySum},
      {"sum-of-own-parts", AxiomId::SumOfOwnParts},
      {"ingr-monotone", AxiomId::IngrMonotone},
      {"sum-of-common-parts", AxiomId::SumOfCommonParts},
      {"summed-parts-included", AxiomId::SummedPartsIncluded},
      {"sum-of-part-closure", AxiomId::SumOfPartClosure},
      {"pre-dense-sum", AxiomId::PreDenseSum},
      {"sigma-partition", AxiomId::SigmaPartition},
      {"ingr-union-sigma", AxiomId::IngrUnionSigma},
      {"s-overlap-equivalence", AxiomId::SOverlapEquivalence},
      {"s-disjoint-equivalence", AxiomId::SDisjointEquivalence},
      {"sum-agreement", AxiomId::SumAgreement},
  };
  for (const auto& [key, id] : table)
    if (key == low) return id;
  return std::nullopt;
}

using SubsetFamily = std::vector<Subset>;
using WitnessValue = std::variant<int, Subset, SubsetFamily>;

struct Witness {
  std::vector<std::pair<std::string, WitnessValue>> roles;

  Witness& add(std::string role, int elem) {
    roles.emplace_back(std::move(role), elem);
    return *this;
  }
  Witness& add(std::string role, Subset s) {
    roles.emplace_back(std::move(role), s);
    return *this;
  }
  Witness& add(std::string role, SubsetFamily f) {
    roles.emplace_back(std::move(role), std::move(f));
    return *this;
  }

  const WitnessValue* find(std::string_view role) const {
    for (const auto& [r, v] : roles)
      if (r == role) return &v;
    return nullptr;
  }
  int elem(std::string_view role) const { return std::get<int>(*find(role)); }
  Subset subset(std::string_view role) const { return std::get<Subset>(*find(role)); }
  const SubsetFamily& family(std::string_view role) const {
    return std::get<SubsetFamily>(*find(role));
  }
};

inline std::string format_subset(Subset s, const Domain& d) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ",";
    out += d.label(i);
    first = false;
  });
  return out + "}";
}

inline std::string format_witness(const Witness& w, const Domain& d) {
  std::string out;
  for (const auto& [role, value] : w.roles) {
    if (!out.empty()) out += " ";
    out += role + "=";
    if (std::holds_alternative<int>(value)) {
      out += d.label(std::get<int>(value));
    } else if (std::holds_alternative<Subset>(value)) {
      out += format_subset(std::get<Subset>(value), d);
    } else {
      out += "{";
      const auto& fam = std::get<SubsetFamily>(value);
      for (size_t i = 0; i < fam.size(); ++i) {
        if (i) out += ",";
        out += format_subset(fam[i], d);
      }
      out += "}";
    }
  }
  return out;
}

struct AxiomVerdict {
  AxiomId id;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::string method;              // non-empty when a checker used a fallback

  static AxiomVerdict pass(AxiomId id) { return {id, true, std::nullopt, {}}; }
  static AxiomVerdict fail(AxiomId id, Witness w) { return {id, false, std::move(w), {}}; }
};

/// "S5 FAILS, witness x=a X={b}" or "S1 holds".
inline std::string format_verdict(const AxiomVerdict& v, const Domain& d) {
  std::string out = to_string(v.id);
  if (v.holds) {
    out += " holds";
  } else {
    out += " FAILS";
    if (v.witness) out += ", witness " + format_witness(*v.witness, d);
  }
  if (!v.method.empty()) out += " [" + v.method + "]";
  return out;
}

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool all_hold() const {
    for (const auto& v : verdicts)
      if (!v.holds) return false;
    return true;
  }
  const AxiomVerdict* find(AxiomId id) const {
    for (const auto& v : verdicts)
      if (v.id == id) return &v;
    return nullptr;
  }
  bool holds(AxiomId id) const {
    const AxiomVerdict* v = find(id);
    return v && v->holds;
  }
};

}  // namespace mereo
