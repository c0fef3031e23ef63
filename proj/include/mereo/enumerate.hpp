#pragma once
// Exhaustive enumeration of part models (P1-P5) and sum models (S1-S5) on
// small labeled domains, with deterministic parallel search and post-hoc
// isomorphism counting.
//
// Part search walks labeled strict partial orders directly: element k is
// attached to the prefix 0..k-1 by choosing (D, U) with D the strict
// down-set and U the strict up-set of k, so P1-P3 hold by construction and
// only P4/P5 are filtered at the leaves. Sum search uses the fact that S1
// (existential read over the whole domain) plus S2 make the relation the
// graph of a total function sigma on non-empty subsets, with sigma({x}) = x
// forced; partial assignments are pruned by necessary S3 instances and the
// survivors are re-checked by the full unpruned axiom battery.
//
// Determinism: the search space is partitioned into tasks in canonical
// order, each task's output goes to its own slot, and slots are merged by
// task index, so counts and model lists are identical for any thread count.

#include <array>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "equivalence.hpp"

namespace mereo {

enum class Theory { part, sum };

inline const char* to_string(Theory t) { return t == Theory::part ? "part" : "sum"; }

struct EnumerationResult {
  int n = 0;
  Theory theory = Theory::part;
  std::uint64_t labeled_count = 0;
  std::optional<std::uint64_t> iso_count;  // filled by canonical_count callers
  std::vector<MereoStructure> part_models;
  std::vector<SumStructure> sum_models;
  bool via_bijection = false;  // sum result served through the part search
  double elapsed_seconds = 0.0;
  unsigned threads_used = 1;
};

namespace detail {

inline Domain letter_domain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return make_domain(labels);
}

// strict below/above masks per element of the placed prefix
struct PosetState {
  std::array<Mask, 8> sb{}, sa{};
};

/// Extends the prefix order from k placed elements to limit, visiting every
/// admissible (D, U) choice in ascending D-then-U order; calls at_leaf on
/// each state with limit elements placed.
template <class AtLeaf>
inline void poset_walk(const PosetState& st, int k, int limit, AtLeaf&& at_leaf) {
  if (k == limit) {
    at_leaf(st);
    return;
  }
  const Mask prefix = (Mask{1} << k) - 1;
  for (Mask D = 0; D <= prefix; ++D) {
    Mask au = prefix & ~D;
    bool down_ok = true;
    for (Mask t = D; t && down_ok; t &= t - 1) {
      int d = __builtin_ctzll(t);
      down_ok = (st.sb[static_cast<size_t>(d)] & ~D) == 0;  // D transitively closed
      au &= st.sa[static_cast<size_t>(d)];                  // above k implies above d
    }
    if (!down_ok) continue;
    Mask U = 0;
    while (true) {
      bool up_ok = true;
      for (Mask t = U; t && up_ok; t &= t - 1)
        up_ok = (st.sa[static_cast<size_t>(__builtin_ctzll(t))] & ~U) == 0;
      if (up_ok) {
        PosetState nx = st;
        nx.sb[static_cast<size_t>(k)] = D;
        nx.sa[static_cast<size_t>(k)] = U;
        for (Mask t = D; t; t &= t - 1)
          nx.sa[static_cast<size_t>(__builtin_ctzll(t))] |= Mask{1} << k;
        for (Mask t = U; t; t &= t - 1)
          nx.sb[static_cast<size_t>(__builtin_ctzll(t))] |= Mask{1} << k;
        poset_walk(nx, k + 1, limit, at_leaf);
      }
      if (U == au) break;
      U = (U - au) & au;  // next submask of au, ascending
    }
  }
}

/// P4/P5 filter on a completed strict order (P1-P3 hold by construction);
/// emits the reflexively closed below-mask table of every surviving model.
template <class Emit>
inline void poset_leaf(const PosetState& st, int n, std::uint64_t& count, Emit&& emit) {
  const Mask full = full_mask(n);
  std::array<Mask, 8> below{};
  bool top = false;
  for (int y = 0; y < n; ++y) {
    below[static_cast<size_t>(y)] = st.sb[static_cast<size_t>(y)] | (Mask{1} << y);
    top = top || below[static_cast<size_t>(y)] == full;
  }
  if (!top) return;  // P5 at X = M needs a greatest element
  std::array<Mask, 8> ov{};
  for (int y = 0; y < n; ++y) {
    Mask m = 0;
    for (int x = 0; x < n; ++x)
      if (below[static_cast<size_t>(x)] & below[static_cast<size_t>(y)]) m |= Mask{1} << x;
    ov[static_cast<size_t>(y)] = m;
  }
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (!(below[static_cast<size_t>(y)] >> x & 1) &&
          !(below[static_cast<size_t>(x)] & ~ov[static_cast<size_t>(y)]))
        return;  // P4: x not below y, yet every part of x meets y
  for (Mask X = 1; X <= full; ++X) {
    Mask ovX = 0;
    for (Mask t = X; t; t &= t - 1) ovX |= ov[static_cast<size_t>(__builtin_ctzll(t))];
    bool summed = false;
    for (int x = 0; x < n && !summed; ++x)
      summed = (X & ~below[static_cast<size_t>(x)]) == 0 &&
               (below[static_cast<size_t>(x)] & ~ovX) == 0;
    if (!summed) return;  // P5 fails at X
  }
  ++count;
  emit(below);
}

/// Runs tasks 0..m-1 on the requested thread count; each task writes only
/// its own slot, so the merged result is independent of scheduling.
template <class Task>
inline unsigned run_tasks(size_t m, unsigned threads, Task&& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, m ? m : 1));
  if (threads <= 1) {
    for (size_t i = 0; i < m; ++i) task(i);
    return 1;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < m; i = next.fetch_add(1)) task(i);
    });
  for (auto& th : pool) th.join();
  return threads;
}

}  // namespace detail

/// All labeled part models on n elements, each exactly once.
inline EnumerationResult enumerate_mereo(int n, bool collect = false, unsigned threads = 0) {
  if (n < 1 || n > 7)
    throw Error(ErrorKind::size_cap, "part enumeration supports 1 <= n <= 7");
  auto t0 = std::chrono::steady_clock::now();
  EnumerationResult res;
  res.n = n;
  res.theory = Theory::part;

  Domain dom = detail::letter_domain(n);
  auto materialize = [&](std::vector<MereoStructure>& sink,
                         const std::array<Mask, 8>& below) {
    PartRelation r(n);
    for (int y = 0; y < n; ++y) r.set_below(y, below[static_cast<size_t>(y)]);
    sink.emplace_back(dom, std::move(r));
  };

  const int fd = n >= 6 ? 4 : (n >= 4 ? 3 : 0);  // frontier depth for task split
  if (fd == 0) {
    std::uint64_t count = 0;
    detail::poset_walk(detail::PosetState{}, 0, n, [&](const detail::PosetState& st) {
      detail::poset_leaf(st, n, count,
                         [&](const auto& below) { if (collect) materialize(res.part_models, below); });
    });
    res.labeled_count = count;
    res.threads_used = 1;
  } else {
    std::vector<detail::PosetState> frontier;
    detail::poset_walk(detail::PosetState{}, 0, fd,
                       [&](const detail::PosetState& st) { frontier.push_back(st); });
    std::vector<std::uint64_t> counts(frontier.size(), 0);
    std::vector<std::vector<MereoStructure>> buckets(frontier.size());
    res.threads_used = detail::run_tasks(frontier.size(), threads, [&](size_t i) {
      detail::poset_walk(frontier[i], fd, n, [&](const detail::PosetState& st) {
        detail::poset_leaf(st, n, counts[i],
                           [&](const auto& below) { if (collect) materialize(buckets[i], below); });
      });
    });
    for (size_t i = 0; i < frontier.size(); ++i) {
      res.labeled_count += counts[i];
      for (auto& m : buckets[i]) res.part_models.push_back(std::move(m));
    }
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

namespace detail {

/// Necessary S3 instances decidable once sigma(V) = v is fixed, given sigma
/// on all strict non-empty submasks of V (assigned earlier in ascending
/// order). Returns false when the partial assignment is already doomed.
inline bool sigma_prune_ok(const std::array<int, 16>& sigma, Mask V, int v) {
  // instance with the first summed collection equal to V itself:
  // v summing V and lying in Y forces sigma(Y) to repeat v
  for (Mask Y = (V - 1) & V; Y; Y = (Y - 1) & V)
    if (Y >> v & 1 && sigma[Y] != v) return false;
  // both collections strict submasks covering V
  for (Mask X = (V - 1) & V; X; X = (X - 1) & V) {
    const Mask rest = V & ~X;
    for (Mask W = X;; W = (W - 1) & X) {
      const Mask Y = rest | W;
      if (Y != V && Y != 0) {
        if (Y >> sigma[X] & 1 && sigma[Y] != v) return false;
        if (X >> sigma[Y] & 1 && sigma[X] != v) return false;
      }
      if (W == 0) break;
    }
  }
  return true;
}

template <class Leaf>
inline void sigma_dfs(std::array<int, 16>& sigma, const std::vector<Mask>& order,
                      size_t pos, int n, Leaf&& leaf) {
  if (pos == order.size()) {
    leaf(sigma);
    return;
  }
  const Mask V = order[pos];
  if ((V & (V - 1)) == 0) {  // singleton: value forced by x + {x}
    sigma[V] = __builtin_ctzll(V);
    if (sigma_prune_ok(sigma, V, sigma[V])) sigma_dfs(sigma, order, pos + 1, n, leaf);
    return;
  }
  for (int v = 0; v < n; ++v) {
    sigma[V] = v;
    if (sigma_prune_ok(sigma, V, v)) sigma_dfs(sigma, order, pos + 1, n, leaf);
  }
}

}  // namespace detail

/// All labeled sum models on n elements; direct search for n <= 4, the
/// part-model bijection beyond (flagged on the result).
inline EnumerationResult enumerate_sum(int n, bool collect = false, unsigned threads = 0) {
  if (n < 1 || n > 7)
    throw Error(ErrorKind::size_cap, "sum enumeration supports 1 <= n <= 7");
  auto t0 = std::chrono::steady_clock::now();
  EnumerationResult res;
  res.n = n;
  res.theory = Theory::sum;

  if (n > 4) {
    EnumerationResult ms = enumerate_mereo(n, collect, threads);
    res.labeled_count = ms.labeled_count;
    res.via_bijection = true;
    res.threads_used = ms.threads_used;
    if (collect)
      for (const auto& m : ms.part_models) res.sum_models.push_back(induce_sum(m));
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  Domain dom = detail::letter_domain(n);
  std::vector<Mask> subsets;
  for (Mask X = 1; X <= full_mask(n); ++X) subsets.push_back(X);

  auto leaf_check = [&](const std::array<int, 16>& sigma, std::uint64_t& count,
                        std::vector<SumStructure>* sink) {
    SumRelation r(n);
    for (Mask X : subsets) r.add(sigma[X], Subset(X));
    SumStructure s(dom, std::move(r));
    if (check_sum_axioms(s).all_hold()) {  // unpruned S1-S5 battery
      ++count;
      if (sink) sink->push_back(std::move(s));
    }
  };

  // tasks = complete assignments of the first two non-singleton subsets
  size_t prefix_end = subsets.size();
  if (n > 2) {
    int nonsingleton = 0;
    for (size_t i = 0; i < subsets.size(); ++i) {
      if (subsets[i] & (subsets[i] - 1)) ++nonsingleton;
      if (nonsingleton == 2) {
        prefix_end = i + 1;
        break;
      }
    }
  }
  const std::vector<Mask> head(subsets.begin(), subsets.begin() + static_cast<long>(prefix_end));
  const std::vector<Mask> rest(subsets.begin() + static_cast<long>(prefix_end), subsets.end());

  std::vector<std::array<int, 16>> tasks;
  {
    std::array<int, 16> sigma{};
    sigma.fill(-1);
    detail::sigma_dfs(sigma, head, 0, n,
                      [&](const std::array<int, 16>& filled) { tasks.push_back(filled); });
  }
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  std::vector<std::vector<SumStructure>> buckets(tasks.size());
  res.threads_used = detail::run_tasks(tasks.size(), threads, [&](size_t i) {
    std::array<int, 16> sigma = tasks[i];
    detail::sigma_dfs(sigma, rest, 0, n, [&](const std::array<int, 16>& filled) {
      leaf_check(filled, counts[i], collect ? &buckets[i] : nullptr);
    });
  });
  for (size_t i = 0; i < tasks.size(); ++i) {
    res.labeled_count += counts[i];
    for (auto& s : buckets[i]) res.sum_models.push_back(std::move(s));
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// Orbit count under relabeling: minimal serialized form over all n!
/// permutations, then distinct-key count.
inline std::uint64_t canonical_count(const std::vector<MereoStructure>& models) {
  std::set<std::vector<Mask>> keys;
  for (const auto& m : models) {
    const int n = m.domain.size();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<Mask> best;
    do {
      std::vector<Mask> key(static_cast<size_t>(n), 0);
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
          if (m.part.at(x, y))
            key[static_cast<size_t>(perm[static_cast<size_t>(y)])] |=
                Mask{1} << perm[static_cast<size_t>(x)];
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    keys.insert(best);
  }
  return keys.size();
}

inline std::uint64_t canonical_count(const std::vector<SumStructure>& models) {
  std::set<std::vector<std::vector<Mask>>> keys;
  for (const auto& s : models) {
    const int n = s.domain.size();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    auto apply = [&](Mask X) {
      Mask out = 0;
      for (Mask t = X; t; t &= t - 1)
        out |= Mask{1} << perm[static_cast<size_t>(__builtin_ctzll(t))];
      return out;
    };
    std::vector<std::vector<Mask>> best;
    do {
      std::vector<std::vector<Mask>> key(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) {
        auto& row = key[static_cast<size_t>(perm[static_cast<size_t>(x)])];
        for (Mask X : s.sum.family(x)) row.push_back(apply(X));
        std::sort(row.begin(), row.end());
      }
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    keys.insert(best);
  }
  return keys.size();
}

}  // namespace mereo
