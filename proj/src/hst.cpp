#include "cdo/hst.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "cdo/dist_kernels.hpp"
#include "cdo/rng.hpp"

namespace cdo {

namespace {

std::vector<int> compute_depths(const std::vector<Hst::Node>& nodes, int root) {
  std::vector<int> depth(nodes.size(), -1);
  std::vector<int> stack{root};
  depth[static_cast<std::size_t>(root)] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int c : nodes[static_cast<std::size_t>(u)].children) {
      depth[static_cast<std::size_t>(c)] = depth[static_cast<std::size_t>(u)] + 1;
      stack.push_back(c);
    }
  }
  return depth;
}

std::vector<int> parents_of(const std::vector<Hst::Node>& nodes) {
  std::vector<int> parent(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) parent[i] = nodes[i].parent;
  return parent;
}

}  // namespace

Hst::Hst(std::vector<Node> nodes, int root, VertexId graph_n)
    : nodes_(std::move(nodes)),
      root_(root),
      lca_(parents_of(nodes_), compute_depths(nodes_, root)) {
  leaf_map_.assign(static_cast<std::size_t>(graph_n), -1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].vertex >= 0) {
      leaf_map_[static_cast<std::size_t>(nodes_[i].vertex)] = static_cast<int>(i);
      leaf_vertices_.push_back(nodes_[i].vertex);
    }
  }
  std::sort(leaf_vertices_.begin(), leaf_vertices_.end());
}

int Hst::leaf_of(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= leaf_map_.size()) {
    throw InvalidVertexError("vertex out of range");
  }
  return leaf_map_[static_cast<std::size_t>(v)];
}

Dist Hst::ultra_dist(VertexId x, VertexId y) const {
  int lx = leaf_of(x);
  int ly = leaf_of(y);
  if (lx < 0 || ly < 0) throw InvalidVertexError("vertex is not a leaf of this tree");
  return delta(lca(lx, ly));
}

void Hst::validate() const {
  for (int x = 0; x < node_count(); ++x) {
    const Node& nd = nodes_[static_cast<std::size_t>(x)];
    bool leaf = nd.vertex >= 0;
    if (leaf != nd.children.empty()) throw Error("leaf/children mismatch");
    if (leaf && nd.delta != 0) throw Error("leaf with nonzero label");
    if (!leaf && node_count() > 1 && nd.delta <= 0) {
      throw Error("internal node with nonpositive label");
    }
    if (x != root_ && nd.delta >= delta(nd.parent)) {
      throw Error("labels must strictly decrease leaf-ward");
    }
    if (x == root_ && nd.parent != root_) throw Error("root parent must be itself");
  }
}

// ---------------------------------------------------------------------------
// Candidate construction: randomly-shifted hierarchical clustering.
// ---------------------------------------------------------------------------

Hst build_hst_candidate(const std::vector<VertexId>& comp_vertices,
                        const std::vector<std::vector<Dist>>& dist_in_comp, VertexId graph_n,
                        std::uint64_t seed) {
  std::size_t nw = comp_vertices.size();
  std::vector<Hst::Node> nodes;
  if (nw == 1) {
    nodes.push_back({0, 0, comp_vertices[0], {}});
    return Hst(std::move(nodes), 0, graph_n);
  }

  Dist dmin = 0, dmax = 0;
  bool first = true;
  for (std::size_t i = 0; i < nw; ++i) {
    for (std::size_t j = i + 1; j < nw; ++j) {
      Dist d = dist_in_comp[i][j];
      if (first || d < dmin) dmin = d;
      if (first || d > dmax) dmax = d;
      first = false;
    }
  }

  // Scale ladder 2^t * dmin, one random center permutation per scale. A
  // vertex joins the first permuted center within the scale radius,
  // refining its cluster from the next coarser scale.
  std::vector<Dist> scales{dmin};
  while (scales.back() < dmax) scales.push_back(scales.back() * 2);
  int top = static_cast<int>(scales.size()) - 1;

  Rng rng(seed);
  std::vector<std::vector<int>> cluster(scales.size(), std::vector<int>(nw));
  std::vector<int> parent_cluster(nw, 0);  // a single cluster above the top scale
  std::vector<std::size_t> perm(nw);
  for (int t = top; t >= 0; --t) {
    for (std::size_t i = 0; i < nw; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::unordered_map<std::int64_t, int> ids;
    for (std::size_t v = 0; v < nw; ++v) {
      std::size_t center = v;
      for (std::size_t x : perm) {
        if (dist_in_comp[v][x] <= scales[static_cast<std::size_t>(t)]) {
          center = x;
          break;
        }
      }
      std::int64_t key =
          static_cast<std::int64_t>(parent_cluster[v]) * static_cast<std::int64_t>(nw) +
          static_cast<std::int64_t>(center);
      auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
      cluster[static_cast<std::size_t>(t)][v] = it->second;
    }
    parent_cluster = cluster[static_cast<std::size_t>(t)];
  }

  auto diameter = [&](const std::vector<std::size_t>& set) {
    Dist d = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        d = std::max(d, dist_in_comp[set[i]][set[j]]);
      }
    }
    return d;
  };

  // Recursive assembly. Scales where a cluster does not split are skipped;
  // children whose label ties the parent's are spliced so labels strictly
  // decrease leaf-ward.
  auto build = [&](auto&& self, const std::vector<std::size_t>& set, int t_max) -> int {
    if (set.size() == 1) {
      nodes.push_back({-1, 0, comp_vertices[set[0]], {}});
      return static_cast<int>(nodes.size() - 1);
    }
    std::vector<std::vector<std::size_t>> parts;
    int child_level = -1;
    for (int t = t_max; t >= 0; --t) {
      parts.clear();
      std::unordered_map<int, std::size_t> slot;
      for (std::size_t v : set) {
        int c = cluster[static_cast<std::size_t>(t)][v];
        auto [it, inserted] = slot.emplace(c, parts.size());
        if (inserted) parts.emplace_back();
        parts[it->second].push_back(v);
      }
      if (parts.size() >= 2) {
        child_level = t - 1;
        break;
      }
    }
    if (parts.size() < 2) {  // never split down to scale 0: break into singletons
      parts.clear();
      for (std::size_t v : set) parts.push_back({v});
      child_level = -1;
    }
    nodes.push_back({-1, diameter(set), -1, {}});
    int me = static_cast<int>(nodes.size() - 1);
    std::vector<int> kids;
    for (const auto& part : parts) kids.push_back(self(self, part, child_level));
    for (std::size_t i = 0; i < kids.size();) {  // splice label ties
      int kid = kids[i];
      if (nodes[static_cast<std::size_t>(kid)].vertex < 0 &&
          nodes[static_cast<std::size_t>(kid)].delta == nodes[static_cast<std::size_t>(me)].delta) {
        std::vector<int> grand = nodes[static_cast<std::size_t>(kid)].children;
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i));
        kids.insert(kids.end(), grand.begin(), grand.end());
        nodes[static_cast<std::size_t>(kid)].children.clear();
        nodes[static_cast<std::size_t>(kid)].vertex = -2;  // detached placeholder
      } else {
        ++i;
      }
    }
    nodes[static_cast<std::size_t>(me)].children = kids;
    for (int kid : kids) nodes[static_cast<std::size_t>(kid)].parent = me;
    return me;
  };

  std::vector<std::size_t> all(nw);
  for (std::size_t i = 0; i < nw; ++i) all[i] = i;
  int root = build(build, all, top);
  nodes[static_cast<std::size_t>(root)].parent = root;

  // Compact away spliced placeholders.
  std::vector<int> remap(nodes.size(), -1);
  std::vector<Hst::Node> packed;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].vertex == -2) continue;
    remap[i] = static_cast<int>(packed.size());
    packed.push_back(nodes[i]);
  }
  for (Hst::Node& nd : packed) {
    nd.parent = remap[static_cast<std::size_t>(nd.parent)];
    for (int& c : nd.children) c = remap[static_cast<std::size_t>(c)];
  }
  return Hst(std::move(packed), remap[static_cast<std::size_t>(root)], graph_n);
}

// ---------------------------------------------------------------------------
// Cover construction.
// ---------------------------------------------------------------------------

UltrametricCover build_cover(const Graph& g, int k, double distortion, std::uint64_t seed,
                             const CoverBuildOptions& opts) {
  if (distortion < 1.0) throw InvalidDistortionError("distortion must be >= 1");
  if (k < 1) throw InvalidKError("stretch parameter must be >= 1");
  if (g.n() < 1) throw InvalidVertexError("graph must be nonempty");

  UltrametricCover cover;
  cover.distortion = distortion;
  cover.k = k;
  cover.comp_id = component_ids(g);
  cover.home.assign(static_cast<std::size_t>(g.n()), -1);

  std::vector<std::vector<VertexId>> comps = components(g);
  cover.component_trees.assign(comps.size(), {});
  std::vector<std::vector<Dist>> table = all_pairs_distances(g);

  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::vector<VertexId>& w = comps[ci];
    std::size_t nw = w.size();
    std::vector<std::vector<Dist>> local(nw, std::vector<Dist>(nw));
    for (std::size_t i = 0; i < nw; ++i) {
      for (std::size_t j = 0; j < nw; ++j) {
        local[i][j] = table[static_cast<std::size_t>(w[i])][static_cast<std::size_t>(w[j])];
      }
    }

    // Only the upper side needs checking: labels are cluster diameters, so
    // the induced ultrametric dominates the input metric by construction.
    auto good_set = [&](const Hst& tree, const std::vector<std::size_t>& cand) {
      std::vector<char> ok(cand.size(), 0);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(cand.size()); ++idx) {
        std::size_t v = cand[static_cast<std::size_t>(idx)];
        int leaf_v = tree.leaf_of(w[v]);
        bool fine = true;
        for (std::size_t x = 0; x < nw && fine; ++x) {
          if (x == v) continue;
          Dist rho = tree.delta(tree.lca(leaf_v, tree.leaf_of(w[x])));
          if (static_cast<double>(rho) > distortion * static_cast<double>(local[v][x])) {
            fine = false;
          }
        }
        ok[static_cast<std::size_t>(idx)] = fine ? 1 : 0;
      }
      std::vector<std::size_t> u;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (ok[i]) u.push_back(cand[i]);
      }
      return u;
    };

    std::vector<std::size_t> unassigned(nw);
    for (std::size_t i = 0; i < nw; ++i) unassigned[i] = i;

    for (std::uint64_t round = 0; !unassigned.empty(); ++round) {
      std::size_t target = std::max<std::size_t>(
          1, static_cast<std::size_t>(
                 std::floor(std::pow(static_cast<double>(unassigned.size()),
                                     1.0 - 1.0 / static_cast<double>(k)) +
                            1e-9)));

      std::size_t best_size = 0;
      std::uint64_t best_sub = 0;
      std::uint64_t chosen_sub = 0;
      bool accepted = false;
      for (int attempt = 0; attempt < opts.attempt_budget; ++attempt) {
        std::uint64_t sub = mix_seed(mix_seed(seed, 0x5eed0000ULL + ci), round,
                                     static_cast<std::uint64_t>(attempt));
        Hst tree = build_hst_candidate(w, local, g.n(), sub);
        std::vector<std::size_t> u = good_set(tree, unassigned);
        if (u.size() >= target) {
          chosen_sub = sub;
          accepted = true;
          break;
        }
        if (u.size() > best_size) {
          best_size = u.size();
          best_sub = sub;
        }
      }
      if (!accepted) {
        if (best_size == 0) {
          throw RetryBudgetExceededError("no usable ultrametric after " +
                                         std::to_string(opts.attempt_budget) + " attempts");
        }
        chosen_sub = best_sub;
      }

      Hst tree = build_hst_candidate(w, local, g.n(), chosen_sub);
      std::vector<std::size_t> u = good_set(tree, unassigned);
      int tree_idx = static_cast<int>(cover.trees.size());
      cover.trees.push_back(std::move(tree));
      cover.component_trees[ci].push_back(tree_idx);
      std::vector<char> taken(nw, 0);
      for (std::size_t v : u) {
        cover.home[static_cast<std::size_t>(w[v])] = tree_idx;
        taken[v] = 1;
      }
      std::vector<std::size_t> rest;
      for (std::size_t v : unassigned) {
        if (!taken[v]) rest.push_back(v);
      }
      unassigned = std::move(rest);
    }
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Nearest colored ancestor index (per tree).
// ---------------------------------------------------------------------------

ColoredAncestorIndex::ColoredAncestorIndex(const Hst* tree, ColorId sigma) : tree_(tree) {
  // DFS preorder numbering of the leaves. Preorder keeps every subtree's
  // leaves contiguous, which the pred/succ argument below relies on.
  lambda_by_vertex_.assign(tree_->leaf_vertices().empty()
                               ? 0
                               : static_cast<std::size_t>(tree_->leaf_vertices().back()) + 1,
                           -1);
  std::vector<int> stack{tree_->root()};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (tree_->is_leaf(x)) {
      VertexId v = tree_->vertex_at(x);
      if (static_cast<std::size_t>(v) >= lambda_by_vertex_.size()) {
        lambda_by_vertex_.resize(static_cast<std::size_t>(v) + 1, -1);
      }
      lambda_by_vertex_[static_cast<std::size_t>(v)] = static_cast<int>(vertex_by_lambda_.size());
      vertex_by_lambda_.push_back(v);
      continue;
    }
    const auto& kids = tree_->children(x);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  sets_.assign(static_cast<std::size_t>(sigma),
               OrderedKeySet(static_cast<int>(vertex_by_lambda_.size())));
}

int ColoredAncestorIndex::lambda(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= lambda_by_vertex_.size() ||
      lambda_by_vertex_[static_cast<std::size_t>(v)] < 0) {
    throw InvalidVertexError("vertex is not a leaf of this tree");
  }
  return lambda_by_vertex_[static_cast<std::size_t>(v)];
}

void ColoredAncestorIndex::add(VertexId v, ColorId c) {
  sets_[static_cast<std::size_t>(c)].insert(lambda(v));
}

void ColoredAncestorIndex::remove(VertexId v, ColorId c) {
  sets_[static_cast<std::size_t>(c)].erase(lambda(v));
}

ColoredAncestorIndex::Hit ColoredAncestorIndex::nearest_colored_ancestor(VertexId v,
                                                                         ColorId c) const {
  int lam = lambda(v);
  const OrderedKeySet& s = sets_[static_cast<std::size_t>(c)];
  int leaf = tree_->leaf_of(v);
  if (s.contains(lam)) return {leaf, v};
  std::optional<int> p = s.pred(lam);
  std::optional<int> q = s.succ(lam);
  if (!p && !q) {
    throw NoSuchColorInTreeError("no leaf of color " + std::to_string(c) + " in this tree");
  }
  int best_node = -1;
  VertexId best_witness = -1;
  if (p) {
    best_node = tree_->lca(leaf, tree_->leaf_of(vertex_by_lambda_[static_cast<std::size_t>(*p)]));
    best_witness = vertex_by_lambda_[static_cast<std::size_t>(*p)];
  }
  if (q) {
    VertexId wq = vertex_by_lambda_[static_cast<std::size_t>(*q)];
    int nq = tree_->lca(leaf, tree_->leaf_of(wq));
    if (best_node < 0 || tree_->depth(nq) > tree_->depth(best_node)) {
      best_node = nq;
      best_witness = wq;
    }
  }
  return {best_node, best_witness};
}

// ---------------------------------------------------------------------------
// Recolorable oracle.
// ---------------------------------------------------------------------------

RecolorableOracle::RecolorableOracle(const Graph& g, const Coloring& col, int k,
                                     double distortion, RecolorVariant variant,
                                     std::uint64_t seed, const CoverBuildOptions& opts)
    : g_(&g),
      coloring_(col),
      variant_(variant),
      cover_(build_cover(g, k, distortion, seed, opts)) {
  idx_.reserve(cover_.trees.size());
  for (const Hst& t : cover_.trees) idx_.emplace_back(&t, col.sigma());
  if (variant_ == RecolorVariant::FastQuery) {
    for (std::size_t ti = 0; ti < cover_.trees.size(); ++ti) {
      for (VertexId v : cover_.trees[ti].leaf_vertices()) {
        idx_[ti].add(v, coloring_.color_of(v));
      }
    }
  } else {
    for (VertexId v = 0; v < g.n(); ++v) {
      idx_[static_cast<std::size_t>(cover_.home[static_cast<std::size_t>(v)])].add(
          v, coloring_.color_of(v));
    }
  }
}

void RecolorableOracle::recolor(VertexId v, ColorId c) {
  if (v < 0 || v >= g_->n()) throw InvalidVertexError("vertex out of range");
  if (c < 0 || c >= coloring_.sigma()) throw RangeError("color id out of range");
  ColorId old = coloring_.color_of(v);
  if (old == c) return;
  if (variant_ == RecolorVariant::FastQuery) {
    for (int ti : cover_.component_trees[static_cast<std::size_t>(
             cover_.comp_id[static_cast<std::size_t>(v)])]) {
      idx_[static_cast<std::size_t>(ti)].remove(v, old);
      idx_[static_cast<std::size_t>(ti)].add(v, c);
    }
  } else {
    int ti = cover_.home[static_cast<std::size_t>(v)];
    idx_[static_cast<std::size_t>(ti)].remove(v, old);
    idx_[static_cast<std::size_t>(ti)].add(v, c);
  }
  coloring_.recolor(v, c);
}

RecolorableOracle::Estimate RecolorableOracle::query_home_tree(VertexId v, ColorId c) const {
  int ti = cover_.home[static_cast<std::size_t>(v)];
  const ColoredAncestorIndex& idx = idx_[static_cast<std::size_t>(ti)];
  if (!idx.has_color(c)) {
    throw NoSuchColorError("no vertex of color " + std::to_string(c) +
                           " in the component of vertex " + std::to_string(v));
  }
  ColoredAncestorIndex::Hit hit = idx.nearest_colored_ancestor(v, c);
  return {cover_.trees[static_cast<std::size_t>(ti)].delta(hit.node), hit.witness};
}

RecolorableOracle::Estimate RecolorableOracle::query_all_trees(VertexId v, ColorId c) const {
  bool found = false;
  Estimate best{0, -1};
  for (int ti : cover_.component_trees[static_cast<std::size_t>(
           cover_.comp_id[static_cast<std::size_t>(v)])]) {
    const ColoredAncestorIndex& idx = idx_[static_cast<std::size_t>(ti)];
    if (!idx.has_color(c)) continue;
    ColoredAncestorIndex::Hit hit = idx.nearest_colored_ancestor(v, c);
    Dist est = cover_.trees[static_cast<std::size_t>(ti)].delta(hit.node);
    if (!found || est < best.estimate) {
      best = {est, hit.witness};
      found = true;
    }
  }
  if (!found) {
    throw NoSuchColorError("no vertex of color " + std::to_string(c) +
                           " in the component of vertex " + std::to_string(v));
  }
  return best;
}

RecolorableOracle::Estimate RecolorableOracle::query(VertexId v, ColorId c) const {
  if (v < 0 || v >= g_->n()) throw InvalidVertexError("vertex out of range");
  if (c < 0 || c >= coloring_.sigma()) throw NoSuchColorError("color id out of range");
  return variant_ == RecolorVariant::FastQuery ? query_home_tree(v, c) : query_all_trees(v, c);
}

}  // namespace cdo
