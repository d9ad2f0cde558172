#pragma once

// The tensor network (graph, bond dimensions, local dimensions), vertex
// criticality, and the structural reductions that preserve the variety or
// shift its dimension by a known offset.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tnsdim {

struct Vertex {
  std::string label;
  std::int64_t n = 1;  ///< local dimension
};

/// A bond. `head` carries U_e, `tail` carries its dual.
struct Edge {
  std::size_t head = 0;
  std::size_t tail = 0;
  std::int64_t m = 1;  ///< bond dimension

  bool touches(std::size_t v) const { return head == v || tail == v; }
  std::size_t other(std::size_t v) const { return v == head ? tail : head; }
};

/// Immutable (graph, m, n) triple. Vertices are stored in canonical order and
/// edges refer to them by position; edge order is the canonical edge order.
class TensorNetwork {
 public:
  /// Throws ValidationError on loops, repeated pairs, bad endpoints or
  /// nonpositive dimensions. Requires at least one vertex.
  TensorNetwork(std::vector<Vertex> vertices, std::vector<Edge> edges, std::string name = {});

  std::size_t order() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::string& name() const { return name_; }

  std::int64_t local_dim(std::size_t v) const { return vertices_.at(v).n; }
  /// N_v = product of incident bond dimensions (1 for isolated vertices).
  std::int64_t bond_space_dim(std::size_t v) const { return bond_dims_.at(v); }
  /// Incident edges of v, in canonical edge order.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }

  std::vector<std::int64_t> local_dims() const;
  std::vector<std::int64_t> bond_dims() const;

  TensorNetwork with_local_dims(std::vector<std::int64_t> n) const;
  TensorNetwork with_bond_dims(std::vector<std::int64_t> m) const;
  /// Swap head and tail of every edge.
  TensorNetwork flipped() const;

  friend bool operator==(const TensorNetwork& a, const TensorNetwork& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<std::int64_t> bond_dims_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Vertices labelled "0".."d-1"; edges (i, i+1 mod d) in that order.
TensorNetwork make_cycle(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n);
/// Edges (i, i+1) for i < d-1; m has d-1 entries.
TensorNetwork make_path(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n);
/// Edges (i, j) for i < j in lexicographic order.
TensorNetwork make_complete(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n);
/// Center is vertex 0; edges (0, i) for i = 1..k.
TensorNetwork make_star(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n);

enum class VertexCriticality { StrictlySubcritical, Critical, StrictlySupercritical };
enum class NetworkCriticality { Subcritical, Supercritical, Critical, Mixed };

struct Criticality {
  std::vector<VertexCriticality> vertices;
  NetworkCriticality network = NetworkCriticality::Mixed;
  bool strictly_subcritical = false;
  bool strictly_supercritical = false;

  /// N_v >= n_v everywhere (critical networks included).
  bool subcritical() const;
  /// N_v <= n_v everywhere (critical networks included).
  bool supercritical() const;
};

Criticality classify(const TensorNetwork& net);

std::string to_string(VertexCriticality c);
std::string to_string(NetworkCriticality c);

struct DropUnitEdge {
  std::size_t edge;  ///< index in the network the step was applied to
  std::string head, tail;
};

struct ShrinkOverabundantBond {
  std::size_t vertex;
  std::size_t edge;
  std::int64_t old_m, new_m;
  std::string head, tail;
};

struct SupercriticalShrink {
  std::size_t vertex;
  std::int64_t old_n, new_n;
  std::int64_t offset;  ///< new_n * (old_n - new_n)
};

struct ReductionStep {
  enum class Kind { DropUnitEdge, ShrinkOverabundantBond, SupercriticalShrink };
  Kind kind;
  DropUnitEdge drop{};
  ShrinkOverabundantBond shrink{};
  SupercriticalShrink super{};

  std::int64_t offset() const { return kind == Kind::SupercriticalShrink ? super.offset : 0; }
};

struct ReductionTrail {
  std::vector<ReductionStep> steps;

  std::int64_t offset() const;
  bool empty() const { return steps.empty(); }
  void append(const ReductionTrail& other);
  /// One line per step, against the labels of `net` (the input network).
  std::vector<std::string> describe(const TensorNetwork& net) const;
};

struct Reduced {
  TensorNetwork net;
  ReductionTrail trail;
};

/// Removes every edge with m_e = 1. The graph tensor is unchanged.
Reduced drop_unit_edges(const TensorNetwork& net);
/// Repeatedly caps m_e at n_v * prod_{e' at v, e' != e} m_e' until no bond
/// exceeds it. The variety is unchanged.
Reduced shrink_overabundant(const TensorNetwork& net);
/// n_v <- min(N_v, n_v); offset sum n_v'(n_v - n_v').
Reduced supercritical_reduce(const TensorNetwork& net);
/// drop_unit_edges, shrink_overabundant, supercritical_reduce, repeated until
/// a full round changes nothing.
Reduced normalize(const TensorNetwork& net);

/// Checked and saturating 64-bit helpers.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t saturating_mul(std::int64_t a, std::int64_t b);

}  // namespace tnsdim
