#include "sepcover/hierarchy.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_map>

#include "union_find.hpp"

namespace sepcover {

namespace {

constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();

// Exact diameter of a connected vertex set by BFS with eccentricity bounds: a BFS from v
// gives ecc(v) and, for every w, max(d(v,w), ecc(v) - d(v,w)) <= ecc(w) <= ecc(v) + d(v,w).
// Vertices whose upper bound cannot beat the best lower bound are dropped.
class DiameterSearch {
 public:
  explicit DiameterSearch(std::size_t universe)
      : mark_(universe, 0), dist_(universe, 0), lo_(universe, 0), hi_(universe, 0) {}

  std::uint64_t diameter(const std::vector<std::vector<VertexId>>& adj,
                         const std::vector<VertexId>& members) {
    if (members.size() <= 1) return 0;
    for (const VertexId v : members) {
      lo_[v] = 0;
      hi_[v] = kInfinite;
    }
    std::vector<VertexId> candidates = members;
    std::uint64_t best = 0;
    bool pick_high = true;
    // Start from a maximum-degree vertex.
    VertexId next = *std::max_element(members.begin(), members.end(), [&](VertexId a, VertexId b) {
      return adj[a].size() < adj[b].size();
    });
    while (!candidates.empty()) {
      const std::uint64_t ecc = bfs(adj, next);
      best = std::max(best, ecc);
      for (const VertexId w : candidates) {
        const std::uint64_t d = dist_[w];
        lo_[w] = std::max({lo_[w], d, ecc - d});
        hi_[w] = std::min(hi_[w], ecc + d);
        best = std::max(best, lo_[w]);
      }
      std::erase_if(candidates, [&](VertexId w) { return hi_[w] <= best || lo_[w] == hi_[w]; });
      if (candidates.empty()) break;
      auto chosen = pick_high ? std::max_element(candidates.begin(), candidates.end(),
                                                 [&](VertexId a, VertexId b) { return hi_[a] < hi_[b]; })
                              : std::min_element(candidates.begin(), candidates.end(),
                                                 [&](VertexId a, VertexId b) { return lo_[a] < lo_[b]; });
      next = *chosen;
      pick_high = !pick_high;
    }
    return best;
  }

 private:
  std::uint64_t bfs(const std::vector<std::vector<VertexId>>& adj, VertexId source) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(source);
    mark_[source] = epoch_;
    dist_[source] = 0;
    std::uint64_t ecc = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId u = queue_[head];
      ecc = dist_[u];
      for (const VertexId w : adj[u]) {
        if (mark_[w] == epoch_) continue;
        mark_[w] = epoch_;
        dist_[w] = dist_[u] + 1;
        queue_.push_back(w);
      }
    }
    return ecc;
  }

  std::vector<std::uint64_t> mark_;
  std::vector<std::uint64_t> dist_;
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;
  std::vector<VertexId> queue_;
  std::uint64_t epoch_ = 0;
};

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

std::vector<HierarchyEdge> Hierarchy::edges_at(Stage n) const {
  auto end = std::upper_bound(edges_.begin(), edges_.end(), n,
                              [](Stage s, const HierarchyEdge& e) { return s < e.entered; });
  return {edges_.begin(), end};
}

std::vector<std::vector<VertexId>> Hierarchy::components(Stage n) const {
  detail::UnionFind uf(universe_size_);
  for (const auto& e : edges_at(n)) uf.unite(e.u, e.v);
  std::map<std::size_t, std::vector<VertexId>> by_root;
  for (const VertexId x : base_set_) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::vector<VertexId>> Hierarchy::adjacency(Stage n) const {
  std::vector<std::vector<VertexId>> adj(universe_size_);
  for (const auto& e : edges_at(n)) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Hierarchy build_hierarchy(const GraphSequence& g, const GrowthFunction& f, const CoverSequence& covers,
                          std::size_t m, const BuildOptions& options) {
  if (covers.universe_size != g.universe_size()) {
    throw ConfigError("cover sequence and graph disagree on the universe size");
  }
  if (covers.size() == 0) throw ConfigError("empty cover sequence");
  const Stage last = covers.last_index();
  if (last > g.horizon()) {
    throw ConfigError("covers run to index " + std::to_string(last) + " past graph horizon " +
                      std::to_string(g.horizon()));
  }
  if (last > f.horizon()) {
    throw ConfigError("covers run to index " + std::to_string(last) + " past f horizon " +
                      std::to_string(f.horizon()));
  }
  if (options.validate_inputs) {
    if (auto bad = first_growth_violation(f)) {
      throw HierarchyInputError("f(" + std::to_string(*bad + 1) + ") violates the growth recurrence",
                                std::nullopt, bad);
    }
    if (auto bad = find_cover_violation(g, f, covers)) {
      throw HierarchyInputError("cover B_" + std::to_string(bad->index) + " is not " +
                                    format_growth_value(f(bad->index)) + "-separated: vertices " +
                                    std::to_string(bad->x) + " and " + std::to_string(bad->y),
                                bad, std::nullopt);
    }
  }

  const std::size_t universe = g.universe_size();
  Hierarchy h;
  h.universe_size_ = universe;
  h.threshold_ = m;
  h.f_ = f;
  h.covers_ = covers;
  h.base_set_ = coverage(covers, m).threshold_set;
  h.in_base_.assign(universe, false);
  for (const VertexId x : h.base_set_) h.in_base_[x] = true;

  std::vector<std::vector<VertexId>> adj(universe);
  detail::UnionFind uf(universe);
  std::vector<std::vector<VertexId>> members(universe);
  std::vector<std::uint64_t> diameter(universe, 0);
  std::map<VertexId, std::size_t> nontrivial;  // representative -> root
  for (const VertexId x : h.base_set_) members[x] = {x};
  DiameterSearch search(universe);
  const bool keep_members = universe <= kFullMemberListLimit;
  std::size_t nontrivial_vertices = 0;

  auto certify = [&](Stage n) {
    StageCertificate cert;
    cert.stage = n;
    cert.bound = f(n);
    cert.edge_count = h.edges_.size();
    for (const auto& [rep, root] : nontrivial) {
      ComponentCertificate c{rep, members[root].size(), diameter[root], {}};
      if (keep_members) c.members = members[root];
      cert.max_diameter = std::max(cert.max_diameter, c.diameter);
      cert.components.push_back(std::move(c));
    }
    cert.singleton_count = h.base_set_.size() - nontrivial_vertices;
    cert.component_count = cert.singleton_count + nontrivial.size();
    h.certificates_.push_back(std::move(cert));
  };

  certify(0);
  std::vector<std::size_t> changed;
  for (Stage n = 1; n <= last; ++n) {
    changed.clear();
    const std::size_t first_new = h.edges_.size();
    for (const VertexId x : covers.covers[n]) {
      if (!h.in_base_[x]) continue;
      for (const auto& inc : g.incidences(x)) {
        if (inc.birth > n) break;
        const VertexId y = inc.neighbor;
        if (!h.in_base_[y]) continue;
        if (std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end()) continue;
        adj[x].push_back(y);
        adj[y].push_back(x);
        h.edges_.push_back({std::min(x, y), std::max(x, y), inc.birth, n});

        const std::size_t rx = uf.find(x);
        const std::size_t ry = uf.find(y);
        if (rx != ry) {
          for (const std::size_t r : {rx, ry}) {
            if (members[r].size() >= 2) {
              nontrivial.erase(members[r].front());
              nontrivial_vertices -= members[r].size();
            }
          }
          const std::size_t root = uf.unite(rx, ry);
          const std::size_t other = root == rx ? ry : rx;
          auto& keep = members[root];
          auto& gone = members[other];
          const auto middle = static_cast<std::ptrdiff_t>(keep.size());
          keep.insert(keep.end(), gone.begin(), gone.end());
          std::inplace_merge(keep.begin(), keep.begin() + middle, keep.end());
          gone.clear();
          gone.shrink_to_fit();
          nontrivial_vertices += keep.size();
          changed.push_back(root);
        } else {
          changed.push_back(rx);
        }
      }
    }
    std::sort(h.edges_.begin() + static_cast<std::ptrdiff_t>(first_new), h.edges_.end(),
              [](const HierarchyEdge& a, const HierarchyEdge& b) {
                return std::tie(a.u, a.v) < std::tie(b.u, b.v);
              });
    for (std::size_t& r : changed) r = uf.find(r);
    std::sort(changed.begin(), changed.end());
    changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
    for (const std::size_t root : changed) {
      diameter[root] = search.diameter(adj, members[root]);
      nontrivial[members[root].front()] = root;
    }
    certify(n);
  }
  return h;
}

std::vector<ComponentDiameter> component_diameters(const Hierarchy& h, Stage n) {
  const auto adj = h.adjacency(n);
  std::vector<ComponentDiameter> out;
  std::vector<std::uint64_t> dist(h.universe_size(), kInfinite);
  std::vector<VertexId> queue;
  for (auto& comp : h.components(n)) {
    std::uint64_t diam = 0;
    for (const VertexId s : comp) {
      for (const VertexId v : comp) dist[v] = kInfinite;
      queue.assign(1, s);
      dist[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        diam = std::max(diam, dist[u]);
        for (const VertexId w : adj[u]) {
          if (dist[w] != kInfinite) continue;
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    out.push_back({std::move(comp), diam});
  }
  return out;
}

std::vector<DiameterViolation> diameter_claim_violations(const Hierarchy& h) {
  std::vector<DiameterViolation> out;
  for (const auto& cert : h.certificates()) {
    for (const auto& c : cert.components) {
      if (c.diameter > cert.bound) out.push_back({cert.stage, c.representative, c.diameter, cert.bound});
    }
  }
  return out;
}

CaptureReport verify_capture(const GraphSequence& g, const Hierarchy& h) {
  const Stage last = h.last_stage();
  const auto& covers = h.covers().covers;
  std::vector<std::vector<Stage>> cover_indices(h.universe_size());
  for (Stage k = 1; k <= last; ++k) {
    for (const VertexId x : covers[k]) cover_indices[x].push_back(k);
  }
  std::unordered_map<std::uint64_t, Stage> entered;
  for (const auto& e : h.edges()) entered.emplace(edge_key(e.u, e.v), e.entered);

  auto first_cover_from = [&](VertexId x, Stage from) -> std::optional<Stage> {
    const auto& list = cover_indices[x];
    auto it = std::lower_bound(list.begin(), list.end(), from);
    if (it == list.end()) return std::nullopt;
    return *it;
  };

  CaptureReport report;
  detail::UnionFind oracle(h.universe_size());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v) continue;
    if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v) continue;
    if (!h.in_base(e.u) || !h.in_base(e.v)) continue;
    ++report.base_edges;
    const Stage from = std::max<Stage>(e.birth, 1);
    std::optional<Stage> witness;
    if (from <= last) {
      auto a = first_cover_from(e.u, from);
      auto b = first_cover_from(e.v, from);
      if (a && b) witness = std::min(*a, *b);
      else witness = a ? a : b;
    }
    EdgeCapture record{e.u, e.v, e.birth,
                       witness ? CaptureStatus::Captured : CaptureStatus::HorizonUncaptured, witness};
    const auto it = entered.find(edge_key(e.u, e.v));
    const std::optional<Stage> actual =
        it == entered.end() ? std::nullopt : std::optional<Stage>(it->second);
    if (actual != witness) ++report.witness_mismatches;
    if (witness) {
      ++report.captured;
      oracle.unite(e.u, e.v);
    } else {
      ++report.horizon_uncaptured;
    }
    report.edges.push_back(record);
  }
  // H edges that the graph does not account for also count as mismatches.
  if (h.edges().size() != report.captured) {
    report.witness_mismatches += h.edges().size() > report.captured ? h.edges().size() - report.captured : 0;
  }

  // Compare the partition induced by H_N with the oracle partition.
  detail::UnionFind built(h.universe_size());
  for (const auto& e : h.edges()) built.unite(e.u, e.v);
  std::unordered_map<std::size_t, std::size_t> forward;
  std::unordered_map<std::size_t, std::size_t> backward;
  for (const VertexId x : h.base_set()) {
    const std::size_t a = built.find(x);
    const std::size_t b = oracle.find(x);
    auto [fi, fnew] = forward.emplace(a, b);
    auto [bi, bnew] = backward.emplace(b, a);
    if (fi->second != b || bi->second != a) {
      report.connectivity_consistent = false;
      break;
    }
  }
  return report;
}

bool verify_unique_cover_point(const Hierarchy& h, const CoverSequence& covers) {
  const Stage last = std::min<Stage>(h.last_stage(), covers.size() == 0 ? 0 : covers.last_index());
  const auto edges = h.edges();
  detail::UnionFind uf(h.universe_size());
  std::size_t next = 0;
  std::unordered_map<std::size_t, std::size_t> hits;
  for (Stage n = 1; n <= last; ++n) {
    while (next < edges.size() && edges[next].entered <= n) {
      uf.unite(edges[next].u, edges[next].v);
      ++next;
    }
    hits.clear();
    for (const VertexId x : covers.covers[n]) {
      if (++hits[uf.find(x)] > 1) return false;
    }
  }
  return true;
}

}  // namespace sepcover
