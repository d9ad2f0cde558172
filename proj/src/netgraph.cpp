#include "tnsdim/netgraph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "tnsdim/errors.hpp"

namespace tnsdim {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in dimension arithmetic");
  return r;
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::int64_t>::max();
  return r;
}

TensorNetwork::TensorNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges, std::string name)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), name_(std::move(name)) {
  if (vertices_.empty()) throw ValidationError("network has no vertices");
  std::set<std::string> labels;
  for (const auto& v : vertices_) {
    if (v.n < 1) throw ValidationError("vertex " + v.label + ": local dimension must be >= 1");
    if (!labels.insert(v.label).second) throw ValidationError("duplicate vertex id " + v.label);
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  incident_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.head >= vertices_.size() || edge.tail >= vertices_.size())
      throw ValidationError("edge " + std::to_string(e) + ": endpoint out of range");
    if (edge.head == edge.tail)
      throw ValidationError("edge " + std::to_string(e) + ": loop at vertex " + vertices_[edge.head].label);
    if (edge.m < 1) throw ValidationError("edge " + std::to_string(e) + ": bond dimension must be >= 1");
    auto key = std::minmax(edge.head, edge.tail);
    if (!pairs.insert(key).second)
      throw ValidationError("edge " + std::to_string(e) + ": duplicate edge {" + vertices_[key.first].label +
                            ", " + vertices_[key.second].label + "}");
    incident_[edge.head].push_back(e);
    incident_[edge.tail].push_back(e);
  }
  bond_dims_.assign(vertices_.size(), 1);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t e : incident_[v]) bond_dims_[v] = checked_mul(bond_dims_[v], edges_[e].m);
  }
}

std::vector<std::int64_t> TensorNetwork::local_dims() const {
  std::vector<std::int64_t> n;
  n.reserve(vertices_.size());
  for (const auto& v : vertices_) n.push_back(v.n);
  return n;
}

std::vector<std::int64_t> TensorNetwork::bond_dims() const {
  std::vector<std::int64_t> m;
  m.reserve(edges_.size());
  for (const auto& e : edges_) m.push_back(e.m);
  return m;
}

TensorNetwork TensorNetwork::with_local_dims(std::vector<std::int64_t> n) const {
  if (n.size() != vertices_.size()) throw ValidationError("with_local_dims: wrong number of entries");
  auto vs = vertices_;
  for (std::size_t v = 0; v < vs.size(); ++v) vs[v].n = n[v];
  return TensorNetwork(std::move(vs), edges_, name_);
}

TensorNetwork TensorNetwork::with_bond_dims(std::vector<std::int64_t> m) const {
  if (m.size() != edges_.size()) throw ValidationError("with_bond_dims: wrong number of entries");
  auto es = edges_;
  for (std::size_t e = 0; e < es.size(); ++e) es[e].m = m[e];
  return TensorNetwork(vertices_, std::move(es), name_);
}

TensorNetwork TensorNetwork::flipped() const {
  auto es = edges_;
  for (auto& e : es) std::swap(e.head, e.tail);
  return TensorNetwork(vertices_, std::move(es), name_);
}

bool operator==(const TensorNetwork& a, const TensorNetwork& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t v = 0; v < a.vertices_.size(); ++v) {
    if (a.vertices_[v].label != b.vertices_[v].label || a.vertices_[v].n != b.vertices_[v].n) return false;
  }
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    const auto& x = a.edges_[e];
    const auto& y = b.edges_[e];
    if (x.head != y.head || x.tail != y.tail || x.m != y.m) return false;
  }
  return true;
}

namespace {

std::vector<Vertex> numbered_vertices(const std::vector<std::int64_t>& n) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n.size(); ++i) vs.push_back({std::to_string(i), n[i]});
  return vs;
}

std::vector<Edge> with_bonds(std::vector<std::pair<std::size_t, std::size_t>> ends,
                             const std::vector<std::int64_t>& m) {
  if (ends.size() != m.size())
    throw ValidationError("expected " + std::to_string(ends.size()) + " bond dimensions, got " +
                          std::to_string(m.size()));
  std::vector<Edge> es;
  for (std::size_t i = 0; i < ends.size(); ++i) es.push_back({ends[i].first, ends[i].second, m[i]});
  return es;
}

}  // namespace

TensorNetwork make_cycle(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n) {
  const std::size_t d = n.size();
  if (d < 3) throw ValidationError("a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < d; ++i) ends.emplace_back(i, (i + 1) % d);
  return TensorNetwork(numbered_vertices(n), with_bonds(ends, m), "C" + std::to_string(d));
}

TensorNetwork make_path(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i + 1 < n.size(); ++i) ends.emplace_back(i, i + 1);
  return TensorNetwork(numbered_vertices(n), with_bonds(ends, m), "P" + std::to_string(n.size()));
}

TensorNetwork make_complete(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) ends.emplace_back(i, j);
  }
  return TensorNetwork(numbered_vertices(n), with_bonds(ends, m), "K" + std::to_string(n.size()));
}

TensorNetwork make_star(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 1; i < n.size(); ++i) ends.emplace_back(0, i);
  return TensorNetwork(numbered_vertices(n), with_bonds(ends, m),
                       "K1," + std::to_string(n.empty() ? 0 : n.size() - 1));
}

bool Criticality::subcritical() const {
  return std::none_of(vertices.begin(), vertices.end(),
                      [](VertexCriticality c) { return c == VertexCriticality::StrictlySupercritical; });
}

bool Criticality::supercritical() const {
  return std::none_of(vertices.begin(), vertices.end(),
                      [](VertexCriticality c) { return c == VertexCriticality::StrictlySubcritical; });
}

Criticality classify(const TensorNetwork& net) {
  Criticality c;
  for (std::size_t v = 0; v < net.order(); ++v) {
    const auto big_n = net.bond_space_dim(v);
    const auto n = net.local_dim(v);
    c.vertices.push_back(big_n > n    ? VertexCriticality::StrictlySubcritical
                         : big_n == n ? VertexCriticality::Critical
                                      : VertexCriticality::StrictlySupercritical);
  }
  auto all = [&](VertexCriticality k) {
    return std::all_of(c.vertices.begin(), c.vertices.end(), [k](VertexCriticality x) { return x == k; });
  };
  const bool sub = c.subcritical();
  const bool super = c.supercritical();
  c.strictly_subcritical = all(VertexCriticality::StrictlySubcritical);
  c.strictly_supercritical = all(VertexCriticality::StrictlySupercritical);
  if (sub && super) {
    c.network = NetworkCriticality::Critical;
  } else if (sub) {
    c.network = NetworkCriticality::Subcritical;
  } else if (super) {
    c.network = NetworkCriticality::Supercritical;
  } else {
    c.network = NetworkCriticality::Mixed;
  }
  return c;
}

std::string to_string(VertexCriticality c) {
  switch (c) {
    case VertexCriticality::StrictlySubcritical: return "strictly_subcritical";
    case VertexCriticality::Critical: return "critical";
    case VertexCriticality::StrictlySupercritical: return "strictly_supercritical";
  }
  return "?";
}

std::string to_string(NetworkCriticality c) {
  switch (c) {
    case NetworkCriticality::Subcritical: return "subcritical";
    case NetworkCriticality::Supercritical: return "supercritical";
    case NetworkCriticality::Critical: return "critical";
    case NetworkCriticality::Mixed: return "mixed";
  }
  return "?";
}

std::int64_t ReductionTrail::offset() const {
  std::int64_t total = 0;
  for (const auto& s : steps) total += s.offset();
  return total;
}

void ReductionTrail::append(const ReductionTrail& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::vector<std::string> ReductionTrail::describe(const TensorNetwork& net) const {
  // Vertex positions never change under reduction, so labels come from `net`.
  std::vector<std::string> lines;
  std::int64_t running = 0;
  for (const auto& s : steps) {
    std::ostringstream os;
    switch (s.kind) {
      case ReductionStep::Kind::DropUnitEdge:
        os << "drop unit edge {" << s.drop.head << ", " << s.drop.tail << "} (m = 1)";
        break;
      case ReductionStep::Kind::ShrinkOverabundantBond:
        os << "shrink overabundant bond {" << s.shrink.head << ", " << s.shrink.tail << "} at vertex "
           << net.vertex(s.shrink.vertex).label << ": m " << s.shrink.old_m << " -> " << s.shrink.new_m;
        break;
      case ReductionStep::Kind::SupercriticalShrink:
        running += s.super.offset;
        os << "supercritical vertex " << net.vertex(s.super.vertex).label << ": n " << s.super.old_n << " -> "
           << s.super.new_n << ", offset " << s.super.new_n << "*(" << s.super.old_n << "-" << s.super.new_n
           << ") = " << s.super.offset << " (running " << running << ")";
        break;
    }
    lines.push_back(os.str());
  }
  return lines;
}

Reduced drop_unit_edges(const TensorNetwork& net) {
  ReductionTrail trail;
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    if (edge.m == 1) {
      ReductionStep step{ReductionStep::Kind::DropUnitEdge};
      step.drop = {e, net.vertex(edge.head).label, net.vertex(edge.tail).label};
      trail.steps.push_back(step);
    } else {
      kept.push_back(edge);
    }
  }
  if (trail.empty()) return {net, trail};
  return {TensorNetwork(net.vertices(), std::move(kept), net.name()), trail};
}

Reduced shrink_overabundant(const TensorNetwork& net) {
  ReductionTrail trail;
  std::vector<std::int64_t> m = net.bond_dims();
  // Each step strictly lowers sum(m), so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < net.order() && !changed; ++v) {
      for (std::size_t e : net.incident(v)) {
        std::int64_t cap = net.local_dim(v);
        for (std::size_t f : net.incident(v)) {
          if (f != e) cap = saturating_mul(cap, m[f]);
        }
        if (m[e] > cap) {
          ReductionStep step{ReductionStep::Kind::ShrinkOverabundantBond};
          step.shrink = {v, e, m[e], cap, net.vertex(net.edge(e).head).label, net.vertex(net.edge(e).tail).label};
          trail.steps.push_back(step);
          m[e] = cap;
          changed = true;
          break;
        }
      }
    }
  }
  if (trail.empty()) return {net, trail};
  return {net.with_bond_dims(std::move(m)), trail};
}

Reduced supercritical_reduce(const TensorNetwork& net) {
  ReductionTrail trail;
  std::vector<std::int64_t> n = net.local_dims();
  for (std::size_t v = 0; v < net.order(); ++v) {
    const auto big_n = net.bond_space_dim(v);
    if (n[v] > big_n) {
      ReductionStep step{ReductionStep::Kind::SupercriticalShrink};
      step.super = {v, n[v], big_n, checked_mul(big_n, n[v] - big_n)};
      trail.steps.push_back(step);
      n[v] = big_n;
    }
  }
  if (trail.empty()) return {net, trail};
  return {net.with_local_dims(std::move(n)), trail};
}

Reduced normalize(const TensorNetwork& net) {
  Reduced cur{net, {}};
  while (true) {
    bool changed = false;
    for (auto pass : {&drop_unit_edges, &shrink_overabundant, &supercritical_reduce}) {
      Reduced r = pass(cur.net);
      if (!r.trail.empty()) {
        changed = true;
        cur.trail.append(r.trail);
        cur.net = std::move(r.net);
      }
    }
    if (!changed) return cur;
  }
}

}  // namespace tnsdim
