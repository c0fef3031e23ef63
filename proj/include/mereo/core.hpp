#pragma once
// Finite domains, subsets as machine words, and the two structure kinds.
// All logic is index-based; labels matter only at I/O boundaries.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mereo {

using Mask = std::uint64_t;

constexpr int max_width = 64;  // a Subset must fit one machine word

enum class ErrorKind {
  duplicate_label,
  empty_domain,
  width_cap,
  unknown_label,
  duplicate_member,
  duplicate_pair,
  dimension_mismatch,
  parse,
  size_cap,
  bad_argument,
};

/// Single error type for validation and parse failures; kind is stable API,
/// message is for humans. line/column are 1-based and 0 when not applicable.
struct Error : std::runtime_error {
  ErrorKind kind;
  int line = 0;
  int column = 0;
  Error(ErrorKind k, const std::string& msg, int ln = 0, int col = 0)
      : std::runtime_error(msg), kind(k), line(ln), column(col) {}
};

/// Subset of a domain, one bit per element index.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return __builtin_popcountll(bits_); }

  constexpr Subset with(int i) const { return Subset(bits_ | (Mask{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(Mask{1} << i)); }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator<(Subset a, Subset b) { return a.bits_ < b.bits_; }

  /// Visit member indices in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (Mask m = bits_; m; m &= m - 1) f(__builtin_ctzll(m));
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  Mask bits_ = 0;
};

constexpr Subset singleton(int i) { return Subset(Mask{1} << i); }

constexpr Mask full_mask(int n) {
  return n >= max_width ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Ordered list of distinct element names; index order is input order.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Mask full() const { return full_mask(size()); }

  /// Index of a label, or -1.
  int find(std::string_view name) const {
    for (size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return static_cast<int>(i);
    return -1;
  }

  /// Index of a label; throws unknown_label.
  int index_of(std::string_view name) const {
    int i = find(name);
    if (i < 0) throw Error(ErrorKind::unknown_label, "unknown label '" + std::string(name) + "'");
    return i;
  }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::vector<std::string> labels_;
};

inline Domain make_domain(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorKind::empty_domain, "domain must have at least one element");
  if (labels.size() > max_width)
    throw Error(ErrorKind::width_cap, "domain has " + std::to_string(labels.size()) +
                                          " elements; cap is " + std::to_string(max_width));
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw Error(ErrorKind::duplicate_label, "empty label");
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw Error(ErrorKind::duplicate_label, "duplicate label '" + labels[i] + "'");
  }
  return Domain(std::move(labels));
}

inline Subset subset_of(const Domain& d, const std::vector<std::string>& names) {
  Subset s;
  for (const auto& name : names) {
    int i = d.index_of(name);
    if (s.contains(i))
      throw Error(ErrorKind::duplicate_member, "duplicate member '" + name + "'");
    s = s.with(i);
  }
  return s;
}

/// All subsets of an n-element domain in ascending numeric order.
/// Safe for n = 64 (no 1 << 64); practical use is small n.
class SubsetRange {
 public:
  SubsetRange(int n, bool nonempty_only)
      : full_(full_mask(n)), first_(nonempty_only ? 1 : 0) {}

  class iterator {
   public:
    iterator(Mask cur, Mask full, bool done) : cur_(cur), full_(full), done_(done) {}
    Subset operator*() const { return Subset(cur_); }
    iterator& operator++() {
      if (cur_ == full_) done_ = true;
      else ++cur_;
      return *this;
    }
    friend bool operator!=(const iterator& a, const iterator& b) {
      return a.done_ != b.done_ || (!a.done_ && a.cur_ != b.cur_);
    }
    friend bool operator==(const iterator& a, const iterator& b) { return !(a != b); }

   private:
    Mask cur_;
    Mask full_;
    bool done_;
  };

  iterator begin() const { return iterator(first_, full_, first_ > full_); }
  iterator end() const { return iterator(0, full_, true); }

 private:
  Mask full_;
  Mask first_;
};

inline SubsetRange all_subsets(int n, bool nonempty_only = false) {
  return SubsetRange(n, nonempty_only);
}
inline SubsetRange all_subsets(const Domain& d, bool nonempty_only = false) {
  return SubsetRange(d.size(), nonempty_only);
}

/// n-by-n boolean matrix; at(x, y) means x is part of y.
/// Stored as one mask per column y: bit x of below(y) = x part-of y.
/// Arbitrary relations are expressible; no axiom is presumed.
class PartRelation {
 public:
  PartRelation() = default;
  explicit PartRelation(int n) : n_(n), below_(static_cast<size_t>(n), 0) {}

  int size() const { return n_; }
  bool at(int x, int y) const { return (below_[static_cast<size_t>(y)] >> x) & 1u; }
  void set(int x, int y, bool v = true) {
    Mask bit = Mask{1} << x;
    if (v) below_[static_cast<size_t>(y)] |= bit;
    else below_[static_cast<size_t>(y)] &= ~bit;
  }
  /// Parts of y as a subset mask.
  Subset below(int y) const { return Subset(below_[static_cast<size_t>(y)]); }
  void set_below(int y, Mask m) { below_[static_cast<size_t>(y)] = m; }

  static PartRelation identity(int n) {
    PartRelation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  friend bool operator==(const PartRelation&, const PartRelation&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> below_;
};

/// Hybrid relation between elements and subsets: family(x) holds every X with
/// x + X, in ascending numeric order. Arbitrary relations are expressible.
class SumRelation {
 public:
  SumRelation() = default;
  explicit SumRelation(int n) : n_(n), fam_(static_cast<size_t>(n)) {}

  int size() const { return n_; }

  bool holds(int x, Subset X) const {
    const auto& f = fam_[static_cast<size_t>(x)];
    return std::binary_search(f.begin(), f.end(), X.bits());
  }

  void add(int x, Subset X) {
    auto& f = fam_[static_cast<size_t>(x)];
    auto it = std::lower_bound(f.begin(), f.end(), X.bits());
    if (it == f.end() || *it != X.bits()) f.insert(it, X.bits());
  }

  void remove(int x, Subset X) {
    auto& f = fam_[static_cast<size_t>(x)];
    auto it = std::lower_bound(f.begin(), f.end(), X.bits());
    if (it != f.end() && *it == X.bits()) f.erase(it);
  }

  /// Sorted subset masks X with x + X.
  const std::vector<Mask>& family(int x) const { return fam_[static_cast<size_t>(x)]; }

  size_t pair_count() const {
    size_t c = 0;
    for (const auto& f : fam_) c += f.size();
    return c;
  }

  friend bool operator==(const SumRelation&, const SumRelation&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Mask>> fam_;
};

struct MereoStructure {
  Domain domain;
  PartRelation part;

  MereoStructure() = default;
  MereoStructure(Domain d, PartRelation p) : domain(std::move(d)), part(std::move(p)) {
    if (domain.size() != part.size())
      throw Error(ErrorKind::dimension_mismatch, "domain/relation size mismatch");
  }
};

struct SumStructure {
  Domain domain;
  SumRelation sum;

  SumStructure() = default;
  SumStructure(Domain d, SumRelation s) : domain(std::move(d)), sum(std::move(s)) {
    if (domain.size() != sum.size())
      throw Error(ErrorKind::dimension_mismatch, "domain/relation size mismatch");
  }
};

}  // namespace mereo
