#include "cdo/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace cdo {

Graph::Graph(VertexId n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidVertexError("vertex count must be nonnegative");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidVertexError("edge endpoint out of range");
    }
    if (e.w < 1) throw InvalidRangeError("edge weight must be >= 1");
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
  }
}

std::vector<Dist> Graph::shortest_paths(VertexId source) const {
  if (source < 0 || source >= n_) {
    throw InvalidVertexError("source " + std::to_string(source) + " out of range");
  }
  std::vector<Dist> dist(static_cast<std::size_t>(n_), kUnreachable);
  using Item = std::pair<Dist, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[static_cast<std::size_t>(source)] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(u)]) continue;
    for (const Arc& a : adj_[static_cast<std::size_t>(u)]) {
      Dist nd = d + a.w;
      Dist& cur = dist[static_cast<std::size_t>(a.to)];
      if (!reachable(cur) || nd < cur) {
        cur = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return dist;
}

Coloring::Coloring(ColorId sigma, std::vector<ColorId> color_of)
    : sigma_(sigma), color_of_(std::move(color_of)) {
  if (sigma < 1) throw InvalidRangeError("palette size must be >= 1");
  members_.assign(static_cast<std::size_t>(sigma), {});
  for (std::size_t v = 0; v < color_of_.size(); ++v) {
    ColorId c = color_of_[v];
    if (c < 0 || c >= sigma) throw RangeError("color id out of range");
    members_[static_cast<std::size_t>(c)].push_back(static_cast<VertexId>(v));
  }
}

void Coloring::recolor(VertexId v, ColorId c) {
  if (v < 0 || v >= n()) throw InvalidVertexError("vertex out of range");
  if (c < 0 || c >= sigma_) throw RangeError("color id out of range");
  ColorId old = color_of_[static_cast<std::size_t>(v)];
  if (old == c) return;
  auto& olds = members_[static_cast<std::size_t>(old)];
  olds.erase(std::lower_bound(olds.begin(), olds.end(), v));
  auto& news = members_[static_cast<std::size_t>(c)];
  news.insert(std::lower_bound(news.begin(), news.end(), v), v);
  color_of_[static_cast<std::size_t>(v)] = c;
}

MultiSourceResult multi_source_shortest_paths(const Graph& g, const std::vector<VertexId>& sources) {
  std::size_t n = static_cast<std::size_t>(g.n());
  MultiSourceResult r;
  r.dist.assign(n, kUnreachable);
  r.witness.assign(n, -1);
  // Priority is (distance, source id), so each vertex settles on the
  // smallest-id source among its nearest ones.
  using Item = std::pair<std::pair<Dist, VertexId>, VertexId>;  // ((d, witness), vertex)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (VertexId s : sources) {
    if (s < 0 || s >= g.n()) throw InvalidVertexError("source out of range");
    std::size_t si = static_cast<std::size_t>(s);
    if (r.dist[si] == 0 && r.witness[si] <= s && r.witness[si] >= 0) continue;
    r.dist[si] = 0;
    if (r.witness[si] < 0 || s < r.witness[si]) r.witness[si] = s;
    pq.push({{0, r.witness[si]}, s});
  }
  while (!pq.empty()) {
    auto [key, u] = pq.top();
    pq.pop();
    auto [d, w] = key;
    std::size_t ui = static_cast<std::size_t>(u);
    if (d != r.dist[ui] || w != r.witness[ui]) continue;
    for (const Graph::Arc& a : g.adj(u)) {
      Dist nd = d + a.w;
      std::size_t xi = static_cast<std::size_t>(a.to);
      if (!reachable(r.dist[xi]) || nd < r.dist[xi] ||
          (nd == r.dist[xi] && w < r.witness[xi])) {
        r.dist[xi] = nd;
        r.witness[xi] = w;
        pq.push({{nd, w}, a.to});
      }
    }
  }
  return r;
}

DistResult brute_nearest(const Graph& g, const Coloring& col, VertexId v, ColorId c) {
  if (v < 0 || v >= g.n()) throw InvalidVertexError("vertex out of range");
  if (c < 0 || c >= col.sigma()) throw NoSuchColorError("color id out of range");
  const std::vector<VertexId>& vc = col.members(c);
  if (vc.empty()) throw NoSuchColorError("color " + std::to_string(c) + " has no members");
  MultiSourceResult ms = multi_source_shortest_paths(g, vc);
  std::size_t vi = static_cast<std::size_t>(v);
  DistResult out;
  out.distance = ms.dist[vi];
  if (reachable(out.distance)) out.witness = ms.witness[vi];
  return out;
}

std::vector<int> component_ids(const Graph& g) {
  std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (const Graph::Arc& a : g.adj(u)) {
        if (comp[static_cast<std::size_t>(a.to)] < 0) {
          comp[static_cast<std::size_t>(a.to)] = next;
          stack.push_back(a.to);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<int> comp = component_ids(g);
  int count = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(count));
  for (VertexId v = 0; v < g.n(); ++v) {
    out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  }
  return out;
}

}  // namespace cdo
