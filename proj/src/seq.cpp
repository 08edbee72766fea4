#include "cdo/seq.hpp"

#include <algorithm>
#include <string>

namespace cdo {

RangeMaxIndex::RangeMaxIndex(std::vector<Dist> values) : values_(std::move(values)) {
  if (values_.empty()) throw EmptyInputError("range-max over an empty array");
  std::size_t n = values_.size();
  floor_log_.assign(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) floor_log_[i] = static_cast<std::uint8_t>(floor_log_[i / 2] + 1);
  std::size_t levels = static_cast<std::size_t>(floor_log_[n]) + 1;
  table_.assign(levels, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 1; j < levels; ++j) {
    std::size_t half = std::size_t{1} << (j - 1);
    for (std::size_t i = 0; i + (std::size_t{1} << j) <= n; ++i) {
      std::size_t a = table_[j - 1][i];
      std::size_t b = table_[j - 1][i + half];
      // larger value wins, ties to the smaller index
      table_[j][i] = static_cast<std::uint32_t>(
          (values_[b] > values_[a] || (values_[b] == values_[a] && b < a)) ? b : a);
    }
  }
}

std::size_t RangeMaxIndex::combine(std::size_t x, std::size_t y) const {
  probes_ += 2;  // two value reads
  if (values_[y] > values_[x]) return y;
  if (values_[y] < values_[x]) return x;
  return std::min(x, y);
}

std::size_t RangeMaxIndex::query(std::size_t a, std::size_t b) const {
  if (a > b || b >= values_.size()) {
    throw InvalidRangeError("range [" + std::to_string(a) + ", " + std::to_string(b) + "] invalid");
  }
  std::size_t j = floor_log_[b - a + 1];
  probes_ += 2;  // two table reads
  std::size_t left = table_[j][a];
  std::size_t right = table_[j][b + 1 - (std::size_t{1} << j)];
  return combine(left, right);
}

EulerLca::EulerLca(const std::vector<int>& parent, const std::vector<int>& depth) {
  std::size_t n = parent.size();
  if (n == 0) throw EmptyInputError("empty tree");
  if (depth.size() != n) throw NotATreeError("parent/depth size mismatch");
  std::vector<std::vector<int>> children(n);
  for (std::size_t v = 0; v < n; ++v) {
    int p = parent[v];
    if (p < 0 || static_cast<std::size_t>(p) >= n) throw NotATreeError("parent out of range");
    if (p == static_cast<int>(v)) {
      if (root_ >= 0) throw NotATreeError("multiple roots");
      root_ = static_cast<int>(v);
    } else {
      children[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
    }
  }
  if (root_ < 0) throw NotATreeError("no root");
  if (depth[static_cast<std::size_t>(root_)] != 0) throw NotATreeError("root depth must be 0");

  depth_ = depth;
  first_.assign(n, -1);
  euler_.reserve(2 * n);
  // Iterative DFS; child order as given, so tours are deterministic.
  std::vector<std::pair<int, std::size_t>> stack;
  stack.emplace_back(root_, 0);
  std::size_t visited = 0;
  while (!stack.empty()) {
    auto& [u, next_child] = stack.back();
    std::size_t ui = static_cast<std::size_t>(u);
    if (next_child == 0) {
      first_[ui] = static_cast<int>(euler_.size());
      euler_.push_back(u);
      ++visited;
    }
    if (next_child < children[ui].size()) {
      int c = children[ui][next_child];
      ++next_child;
      if (depth[static_cast<std::size_t>(c)] != depth[ui] + 1) {
        throw NotATreeError("depth inconsistent with parent");
      }
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().first);
    }
  }
  if (visited != n) throw NotATreeError("unreachable nodes (forest or cycle)");

  std::vector<Dist> neg(euler_.size());
  for (std::size_t i = 0; i < euler_.size(); ++i) {
    neg[i] = -static_cast<Dist>(depth_[static_cast<std::size_t>(euler_[i])]);
  }
  rmq_.emplace(std::move(neg));
}

int EulerLca::query(int x, int y) const {
  std::size_t n = depth_.size();
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
    throw InvalidRangeError("lca node out of range");
  }
  int a = first_[static_cast<std::size_t>(x)];
  int b = first_[static_cast<std::size_t>(y)];
  if (a > b) std::swap(a, b);
  std::size_t pos = rmq_->query(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return euler_[pos];
}

OrderedKeySet::OrderedKeySet(int universe) : universe_(universe) {
  if (universe < 0) throw InvalidRangeError("universe must be nonnegative");
}

void OrderedKeySet::check(int x) const {
  if (x < 0 || x >= universe_) {
    throw InvalidRangeError("key " + std::to_string(x) + " outside universe [0, " +
                            std::to_string(universe_) + ")");
  }
}

void OrderedKeySet::insert(int x) {
  check(x);
  keys_.insert(x);
}

void OrderedKeySet::erase(int x) {
  check(x);
  auto it = keys_.find(x);
  if (it == keys_.end()) throw KeyNotFoundError("key " + std::to_string(x) + " not in set");
  keys_.erase(it);
}

bool OrderedKeySet::contains(int x) const {
  check(x);
  return keys_.count(x) > 0;
}

std::optional<int> OrderedKeySet::pred(int x) const {
  check(x);
  auto it = keys_.lower_bound(x);
  if (it == keys_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::optional<int> OrderedKeySet::succ(int x) const {
  check(x);
  auto it = keys_.upper_bound(x);
  if (it == keys_.end()) return std::nullopt;
  return *it;
}

}  // namespace cdo
