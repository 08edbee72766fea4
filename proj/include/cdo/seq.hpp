#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cdo/error.hpp"
#include "cdo/graph.hpp"

namespace cdo {

// Range arg-max over a fixed array, constant probes per query. The classic
// "RMQ" here selects the maximum (the min variant is the same structure over
// negated values). Ties resolve to the smallest index.
class RangeMaxIndex {
 public:
  explicit RangeMaxIndex(std::vector<Dist> values);

  // Index j in [a, b] with values[j] maximal, smallest such j.
  std::size_t query(std::size_t a, std::size_t b) const;

  std::size_t size() const { return values_.size(); }
  Dist value(std::size_t i) const { return values_[i]; }

  // Number of internal array probes performed by queries so far. Used to
  // check that the per-query cost is a constant independent of size().
  std::uint64_t probes() const { return probes_; }

 private:
  std::size_t combine(std::size_t x, std::size_t y) const;

  std::vector<Dist> values_;
  std::vector<std::vector<std::uint32_t>> table_;  // table_[j][i] = argmax over [i, i + 2^j)
  std::vector<std::uint8_t> floor_log_;
  mutable std::uint64_t probes_ = 0;
};

// Least common ancestor via Euler tour + depth range-min. Nodes are ids in
// [0, N); parent[root] == root.
class EulerLca {
 public:
  EulerLca(const std::vector<int>& parent, const std::vector<int>& depth);

  int query(int x, int y) const;
  int root() const { return root_; }
  int depth(int x) const { return depth_[static_cast<std::size_t>(x)]; }
  int node_count() const { return static_cast<int>(depth_.size()); }

 private:
  int root_ = -1;
  std::vector<int> depth_;
  std::vector<int> first_;
  std::vector<int> euler_;
  std::optional<RangeMaxIndex> rmq_;  // over negated euler depths
};

// Dynamic ordered set over a bounded integer universe with strict
// predecessor / successor queries. Backed by a balanced tree; the contract
// only requires ordered-set semantics, not a particular time bound.
class OrderedKeySet {
 public:
  explicit OrderedKeySet(int universe);

  void insert(int x);
  void erase(int x);  // KeyNotFound if absent
  bool contains(int x) const;
  std::optional<int> pred(int x) const;  // max { y in S : y < x }
  std::optional<int> succ(int x) const;  // min { y in S : y > x }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  std::vector<int> to_sorted_vector() const { return {keys_.begin(), keys_.end()}; }

 private:
  void check(int x) const;

  int universe_;
  std::set<int> keys_;
};

}  // namespace cdo
