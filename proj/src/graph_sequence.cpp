#include "sepcover/graph_sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace sepcover {

GraphSequence::GraphSequence(std::size_t universe_size, std::size_t max_degree_bound, Stage horizon,
                             std::vector<Edge> edges)
    : universe_size_(universe_size),
      max_degree_bound_(max_degree_bound),
      horizon_(horizon),
      edges_(std::move(edges)),
      adjacency_(universe_size) {
  for (Edge& e : edges_) {
    if (e.u >= universe_size_ || e.v >= universe_size_) {
      throw std::invalid_argument("edge endpoint outside the vertex universe");
    }
    if (e.birth > horizon_) {
      throw std::invalid_argument("edge born after the horizon");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.birth) < std::tie(b.u, b.v, b.birth);
  });

  // Sorted by (u, v, birth): the first entry of each pair carries the earliest birth.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) continue;
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v) continue;
    adjacency_[e.u].push_back({e.v, e.birth});
    adjacency_[e.v].push_back({e.u, e.birth});
    max_birth_ = std::max(max_birth_, e.birth);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
      return std::tie(a.birth, a.neighbor) < std::tie(b.birth, b.neighbor);
    });
  }
}

void GraphSequence::check_stage(Stage n) const {
  if (n > horizon_) {
    throw std::out_of_range("stage " + std::to_string(n) + " beyond horizon " +
                            std::to_string(horizon_));
  }
}

void GraphSequence::check_vertex(VertexId x) const {
  if (x >= universe_size_) {
    throw std::out_of_range("vertex " + std::to_string(x) + " outside universe of size " +
                            std::to_string(universe_size_));
  }
}

std::vector<VertexId> GraphSequence::neighbors(Stage n, VertexId x) const {
  check_stage(n);
  check_vertex(x);
  std::vector<VertexId> out;
  for (const Incidence& inc : adjacency_[x]) {
    if (inc.birth > n) break;
    out.push_back(inc.neighbor);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> GraphSequence::ball(Stage n, VertexId x, Radius radius) const {
  BallSearch search(*this);
  auto visited = search.run(n, x, radius);
  std::vector<VertexId> out(visited.begin(), visited.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool GraphSequence::dist_leq(Stage n, VertexId x, VertexId y, Radius k) const {
  check_vertex(y);
  BallSearch search(*this);
  search.run(n, x, k);
  return search.reached(y);
}

std::optional<std::uint64_t> GraphSequence::distance(Stage n, VertexId x, VertexId y) const {
  check_vertex(y);
  BallSearch search(*this);
  search.run(n, x, kUnboundedRadius);
  if (!search.reached(y)) return std::nullopt;
  return search.depth(y);
}

BallSearch::BallSearch(const GraphSequence& g)
    : graph_(&g), mark_(g.universe_size(), 0), depth_(g.universe_size(), 0) {
  order_.reserve(g.universe_size());
}

std::span<const VertexId> BallSearch::run(Stage n, VertexId x, Radius radius) {
  graph_->check_stage(n);
  graph_->check_vertex(x);
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  order_.clear();
  order_.push_back(x);
  mark_[x] = epoch_;
  depth_[x] = 0;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const VertexId u = order_[head];
    if (depth_[u] >= radius) continue;
    for (const auto& inc : graph_->incidences(u)) {
      if (inc.birth > n) break;
      if (mark_[inc.neighbor] == epoch_) continue;
      mark_[inc.neighbor] = epoch_;
      depth_[inc.neighbor] = depth_[u] + 1;
      order_.push_back(inc.neighbor);
    }
  }
  return order_;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::SelfLoop:
      os << "self-loop at vertex " << vertex << " (stage " << stage << ")";
      break;
    case Kind::DuplicatePair:
      os << "pair (" << vertex << ", " << other << ") listed again at stage " << stage;
      break;
    case Kind::DegreeBound:
      os << "vertex " << vertex << " reaches degree " << degree << " at stage " << stage;
      break;
  }
  return os.str();
}

ValidationReport validate(const GraphSequence& g) {
  ValidationReport report;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v) {
      report.violations.push_back({Violation::Kind::SelfLoop, e.u, e.v, e.birth, 0});
      continue;
    }
    if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v) {
      report.violations.push_back({Violation::Kind::DuplicatePair, e.u, e.v, e.birth, 0});
    }
  }
  const std::size_t bound = g.max_degree_bound();
  for (VertexId x = 0; x < g.universe_size(); ++x) {
    const auto inc = g.incidences(x);
    if (inc.size() <= bound) continue;
    const Stage stage = inc[bound].birth;
    std::size_t degree = 0;
    for (const auto& i : inc) {
      if (i.birth <= stage) ++degree;
    }
    report.violations.push_back({Violation::Kind::DegreeBound, x, x, stage, degree});
  }
  return report;
}

}  // namespace sepcover
