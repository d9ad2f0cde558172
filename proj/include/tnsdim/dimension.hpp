#pragma once

// Dimension bounds for tensor network varieties: the closed-form expected
// value, the upper bound min{dim Hom - dim gauge + dim Stab, prod n_v}
// computed after normalization, and the lower bound given by the rank of the
// differential of the parametrization at random points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnsdim/errors.hpp"
#include "tnsdim/exactnum.hpp"
#include "tnsdim/linalg.hpp"
#include "tnsdim/netgraph.hpp"
#include "tnsdim/tensor.hpp"

namespace tnsdim {

inline constexpr const char* kVersion = "0.1.0";

/// sum_e (m_e^2 - 1)
std::int64_t gauge_dim(const TensorNetwork& net);
/// sum_v N_v n_v - d + 1
std::int64_t segre_hom_dim(const TensorNetwork& net);
/// prod_v n_v, saturating at INT64_MAX.
std::int64_t ambient_dim(const TensorNetwork& net);
/// min{segre_hom_dim - gauge_dim, ambient_dim} on the net as given.
std::int64_t expected_dim(const TensorNetwork& net);

struct StabShortcut {
  bool zero = false;
  std::string reason;  ///< "cycle", "degree", or why the shortcut does not apply
};

/// Cases where the gauge action is known to be generically free.
StabShortcut stab_shortcut(const TensorNetwork& net);

/// True if the net is connected, 2-regular and has at least 3 vertices.
bool is_cycle(const TensorNetwork& net);

/// Traceless basis of sl_m: E_ij (i != j) in row-major order, then
/// E_ii - E_{m-1,m-1}.
template <class E>
std::vector<Matrix<E>> traceless_basis(std::size_t m, const E& one) {
  std::vector<Matrix<E>> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Matrix<E> b(m, m);
      b(i, j) = one;
      out.push_back(std::move(b));
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Matrix<E> b(m, m);
    b(i, i) = one;
    b(m - 1, m - 1) = -one;
    out.push_back(std::move(b));
  }
  return out;
}

/// X_v . rho_v(B) where B sits on edge e: B on the slot of e if v is the
/// head, -B^T if v is the tail.
template <class E>
Matrix<E> act_on_slot(const TensorNetwork& net, std::size_t v, std::size_t e, const Matrix<E>& xv,
                      const Matrix<E>& b) {
  const std::size_t m = static_cast<std::size_t>(net.edge(e).m);
  const bool head = net.edge(e).head == v;
  const std::size_t stride = edge_stride_in_vertex(net, v, e);
  Matrix<E> out(xv.rows(), xv.cols());
  for (std::size_t w = 0; w < xv.cols(); ++w) {
    const std::size_t j = (w / stride) % m;
    const std::size_t base = w - j * stride;
    for (std::size_t jp = 0; jp < m; ++jp) {
      E coeff = head ? b(jp, j) : -b(j, jp);
      if (coeff.is_zero()) continue;
      for (std::size_t i = 0; i < xv.rows(); ++i) out(i, w) += xv(i, base + jp * stride) * coeff;
    }
  }
  return out;
}

namespace detail {

template <class E>
void check_shapes(const TensorNetwork& net, const MapTuple<E>& x) {
  if (x.maps.size() != net.order()) throw ShapeMismatch("map tuple has wrong number of maps");
  for (std::size_t v = 0; v < net.order(); ++v) {
    if (x.maps[v].rows() != static_cast<std::size_t>(net.local_dim(v)) ||
        x.maps[v].cols() != static_cast<std::size_t>(net.bond_space_dim(v)))
      throw ShapeMismatch("map for vertex " + net.vertex(v).label + " has wrong shape");
  }
}

template <class E>
std::vector<E> outer(const std::vector<const std::vector<E>*>& parts) {
  std::vector<E> cur{*parts.front()};
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& p = *parts[k];
    std::vector<E> next(cur.size() * p.size());
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (cur[a].is_zero()) continue;
      for (std::size_t b = 0; b < p.size(); ++b) next[a * p.size() + b] = cur[a] * p[b];
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// Dimension of Lie(Stab) of X_1 (x) ... (x) X_d inside the gauge algebra,
/// as the nullity of A -> sum_v X_1 (x) .. (x) X_v rho_v(A) (x) .. (x) X_d in
/// the full prod(n_v N_v) space.
template <class F>
std::size_t stab_dim(const TensorNetwork& net, const MapTuple<typename F::Elem>& x, const F& field) {
  using E = typename F::Elem;
  detail::check_shapes(net, x);
  std::vector<std::vector<E>> flat(net.order());
  for (std::size_t v = 0; v < net.order(); ++v) flat[v] = x.maps[v].data();
  std::vector<std::vector<E>> images;
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    for (const auto& b : traceless_basis(static_cast<std::size_t>(net.edge(e).m), field.one())) {
      std::vector<E> total;
      for (std::size_t v : {net.edge(e).head, net.edge(e).tail}) {
        const std::vector<E> moved = act_on_slot(net, v, e, x.maps[v], b).data();
        std::vector<const std::vector<E>*> parts;
        for (std::size_t u = 0; u < net.order(); ++u) parts.push_back(u == v ? &moved : &flat[u]);
        auto term = detail::outer(parts);
        if (total.empty()) {
          total = std::move(term);
        } else {
          for (std::size_t k = 0; k < total.size(); ++k) total[k] += term[k];
        }
      }
      images.push_back(std::move(total));
    }
  }
  if (images.empty()) return 0;
  Echelon<E> ech(images.front().size());
  for (auto& row : images) ech.insert(std::move(row));
  return images.size() - ech.rank();
}

/// Same quantity through the per-vertex system X_v rho_v(A) = c_v X_v,
/// sum_v c_v = 0, in unknowns (A, c). Valid when every X_v is nonzero.
template <class F>
std::size_t stab_dim_factored(const TensorNetwork& net, const MapTuple<typename F::Elem>& x, const F& field) {
  using E = typename F::Elem;
  detail::check_shapes(net, x);
  std::vector<std::size_t> row_off(net.order() + 1, 0);
  for (std::size_t v = 0; v < net.order(); ++v)
    row_off[v + 1] = row_off[v] + x.maps[v].rows() * x.maps[v].cols();
  std::vector<std::vector<E>> columns;
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    for (const auto& b : traceless_basis(static_cast<std::size_t>(net.edge(e).m), field.one())) {
      std::vector<E> col(row_off.back() + 1);
      for (std::size_t v : {net.edge(e).head, net.edge(e).tail}) {
        const auto moved = act_on_slot(net, v, e, x.maps[v], b).data();
        for (std::size_t k = 0; k < moved.size(); ++k) col[row_off[v] + k] += moved[k];
      }
      columns.push_back(std::move(col));
    }
  }
  const std::size_t gauge_cols = columns.size();
  for (std::size_t v = 0; v < net.order(); ++v) {
    std::vector<E> col(row_off.back() + 1);
    const auto& xv = x.maps[v].data();
    for (std::size_t k = 0; k < xv.size(); ++k) col[row_off[v] + k] = -xv[k];
    col.back() = field.one();
    columns.push_back(std::move(col));
  }
  if (gauge_cols == 0) return 0;
  Echelon<E> ech(row_off.back() + 1);
  for (auto& c : columns) ech.insert(std::move(c));
  return columns.size() - ech.rank();
}

/// Dimension of the isotropy algebra of t modulo the (d-1)-dimensional
/// centre: nullity of (X_v) -> sum_v X_v ._v t, minus d-1.
template <class E>
std::size_t isotropy_dim(const DenseTensor<E>& t) {
  if (t.is_zero()) throw ZeroTensor();
  const std::size_t d = t.order();
  std::vector<std::size_t> col_off(d + 1, 0);
  for (std::size_t v = 0; v < d; ++v) col_off[v + 1] = col_off[v] + t.dim(v) * t.dim(v);
  Matrix<E> m(t.size(), col_off.back());
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    const auto idx = t.multi_index(f);
    for (std::size_t v = 0; v < d; ++v) {
      const std::size_t b = idx[v];
      const std::size_t s = t.stride(v);
      const std::size_t base = f - b * s;
      for (std::size_t a = 0; a < t.dim(v); ++a) m(base + a * s, col_off[v] + a * t.dim(v) + b) = t[f];
    }
  }
  return nullity(m) - (d - 1);
}

/// Differential of X -> (X_1 (x) .. (x) X_d) . T(Gamma, m) at x:
/// (prod n_v) x (sum N_v n_v); column block v is X_v in row-major order.
template <class F>
Matrix<typename F::Elem> jacobian(const TensorNetwork& net, const MapTuple<typename F::Elem>& x, const F& field) {
  using E = typename F::Elem;
  detail::check_shapes(net, x);
  const auto t = graph_tensor(net, field);
  std::vector<std::size_t> out_dims;
  for (std::size_t v = 0; v < net.order(); ++v) out_dims.push_back(static_cast<std::size_t>(net.local_dim(v)));
  const std::size_t rows = product(out_dims);
  std::vector<std::size_t> col_off(net.order() + 1, 0);
  for (std::size_t v = 0; v < net.order(); ++v) col_off[v + 1] = col_off[v] + x.maps[v].rows() * x.maps[v].cols();
  Matrix<E> jac(rows, col_off.back());
  for (std::size_t v = 0; v < net.order(); ++v) {
    DenseTensor<E> p = t;
    for (std::size_t u = 0; u < net.order(); ++u) {
      if (u != v) p = contract_factor(p, u, x.maps[u]);
    }
    const std::size_t nv = out_dims[v];
    const std::size_t bv = p.dim(v);
    const std::size_t ps = p.stride(v);
    for (std::size_t f = 0; f < p.size(); ++f) {
      if (p[f].is_zero()) continue;
      const std::size_t w = (f / ps) % bv;
      const std::size_t row0 = (f / (ps * bv)) * (nv * ps) + f % ps;
      for (std::size_t i = 0; i < nv; ++i) jac(row0 + i * ps, col_off[v] + i * bv + w) = p[f];
    }
  }
  return jac;
}

/// Max over `trials` random points of the Jacobian rank. Trial k draws from
/// rng.split(k).
template <class F>
std::int64_t lower_bound(const TensorNetwork& net, const F& field, const Rng& rng, int trials = 3) {
  if (trials < 1) throw Error("lower_bound: trials must be >= 1");
  std::size_t best = 0;
  for (int k = 0; k < trials; ++k) {
    Rng r = rng.split(static_cast<std::uint64_t>(k));
    const auto x = random_map_tuple(net, field, r);
    best = std::max(best, rank(jacobian(net, x, field)));
  }
  return static_cast<std::int64_t>(best);
}

struct StabResult {
  std::int64_t value = 0;
  bool shortcut = false;
  std::string reason;
};

/// Stab at a random point, or 0 from the shortcut. The dense map is used
/// when its target has at most `dense_limit` entries.
template <class F>
StabResult generic_stab(const TensorNetwork& net, const F& field, Rng& rng, std::size_t dense_limit = 1u << 18) {
  const auto sc = stab_shortcut(net);
  if (sc.zero) return {0, true, sc.reason};
  const auto x = random_map_tuple(net, field, rng);
  std::int64_t target = 1;
  for (std::size_t v = 0; v < net.order(); ++v)
    target = saturating_mul(target, saturating_mul(net.local_dim(v), net.bond_space_dim(v)));
  if (target <= static_cast<std::int64_t>(dense_limit))
    return {static_cast<std::int64_t>(stab_dim(net, x, field)), false, "dense"};
  return {static_cast<std::int64_t>(stab_dim_factored(net, x, field)), false, "factored"};
}

struct UpperBound {
  Reduced reduced;
  StabResult stab;
  std::int64_t value = 0;  ///< includes the trail offset
};

/// Normalize, apply min{segre - gauge + stab, ambient} to the normalized net,
/// add the offset. Stab is sampled from rng.split(0x5a).
template <class F>
UpperBound upper_bound_detail(const TensorNetwork& net, const F& field, const Rng& rng) {
  UpperBound ub{normalize(net), {}, 0};
  const TensorNetwork& r = ub.reduced.net;
  Rng srng = rng.split(0x5a);
  ub.stab = generic_stab(r, field, srng);
  const std::int64_t formula = segre_hom_dim(r) - gauge_dim(r) + ub.stab.value;
  ub.value = std::min(formula, ambient_dim(r)) + ub.reduced.trail.offset();
  return ub;
}

template <class F>
std::int64_t upper_bound(const TensorNetwork& net, const F& field, const Rng& rng) {
  return upper_bound_detail(net, field, rng).value;
}

struct Verdict {
  bool exact = false;
  std::int64_t lo = 0, hi = 0;

  std::string to_string() const;
};

struct Provenance {
  std::string backend;     ///< "prime" or "rational"
  std::uint64_t prime = 0;  ///< 0 for the rational backend
  std::uint64_t seed = 0;
  int trials = 0;
  std::string version = kVersion;
};

struct DimensionReport {
  TensorNetwork net;
  Reduced reduced;
  std::int64_t ambient_dim = 0;
  std::int64_t segre_hom_dim = 0;
  std::int64_t gauge_dim = 0;
  std::int64_t expected_dim = 0;
  std::int64_t reduced_ambient_dim = 0;
  std::int64_t reduced_segre_hom_dim = 0;
  std::int64_t reduced_gauge_dim = 0;
  StabResult stab;
  std::int64_t upper_bound = 0;
  /// Upper-bound formula on the unreduced net, when it differs from upper_bound.
  std::optional<std::int64_t> raw_upper_bound;
  std::int64_t lower_bound = 0;
  Verdict verdict;
  std::vector<std::string> notes;
  Provenance provenance;
};

/// Remarks about nets whose dimension is settled or disputed elsewhere.
std::vector<std::string> known_case_notes(const TensorNetwork& net, std::int64_t lower, std::int64_t upper);

namespace detail {
inline std::uint64_t prime_of(const PrimeField& f) { return f.prime(); }
inline std::uint64_t prime_of(const RationalField&) { return 0; }
}  // namespace detail

/// Full report. The lower bound is computed on the normalized net and
/// shifted by the trail offset; trial k uses rng.split(k).
template <class F>
DimensionReport dim_report(const TensorNetwork& net, const F& field, const Rng& rng, int trials = 3,
                           bool annotate = false) {
  if (trials < 1) throw Error("dim_report: trials must be >= 1");
  auto ub = upper_bound_detail(net, field, rng);
  DimensionReport rep{net, ub.reduced};
  const TensorNetwork& r = rep.reduced.net;
  rep.ambient_dim = tnsdim::ambient_dim(net);
  rep.segre_hom_dim = tnsdim::segre_hom_dim(net);
  rep.gauge_dim = tnsdim::gauge_dim(net);
  rep.expected_dim = tnsdim::expected_dim(net);
  rep.reduced_ambient_dim = tnsdim::ambient_dim(r);
  rep.reduced_segre_hom_dim = tnsdim::segre_hom_dim(r);
  rep.reduced_gauge_dim = tnsdim::gauge_dim(r);
  rep.stab = ub.stab;
  rep.upper_bound = ub.value;
  if (!rep.reduced.trail.empty()) {
    if (ub.stab.shortcut && stab_shortcut(net).zero) {
      rep.raw_upper_bound = std::min(rep.segre_hom_dim - rep.gauge_dim, rep.ambient_dim);
    } else {
      Rng srng = rng.split(0x5b);
      const auto x = random_map_tuple(net, field, srng);
      const auto s = static_cast<std::int64_t>(stab_dim_factored(net, x, field));
      rep.raw_upper_bound = std::min(rep.segre_hom_dim - rep.gauge_dim + s, rep.ambient_dim);
    }
    if (*rep.raw_upper_bound == rep.upper_bound) rep.raw_upper_bound.reset();
  }
  rep.lower_bound = tnsdim::lower_bound(r, field, rng, trials) + rep.reduced.trail.offset();
  if (rep.lower_bound > rep.upper_bound)
    throw BoundInversion("lower bound " + std::to_string(rep.lower_bound) + " exceeds upper bound " +
                         std::to_string(rep.upper_bound));
  rep.verdict = {rep.lower_bound == rep.upper_bound, rep.lower_bound, rep.upper_bound};
  if (annotate) rep.notes = known_case_notes(net, rep.lower_bound, rep.upper_bound);
  rep.provenance.backend = field.name();
  rep.provenance.prime = detail::prime_of(field);
  rep.provenance.seed = rng.seed();
  rep.provenance.trials = trials;
  return rep;
}

}  // namespace tnsdim
