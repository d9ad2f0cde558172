#pragma once

// Dense order-d tensors, the graph tensor of a network, Kronecker products,
// flattenings, and the parametrization (X_1 (x) ... (x) X_d) . T.
//
// Flat index of (i_1, ..., i_d) is sum_k i_k * prod_{l > k} dims_l (row
// major, 0-based). Factor v of a graph tensor is W_v = (x)_{e at v} C^{m_e}
// with the incident edges in canonical edge order, first edge most
// significant.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "tnsdim/errors.hpp"
#include "tnsdim/exactnum.hpp"
#include "tnsdim/linalg.hpp"
#include "tnsdim/netgraph.hpp"

namespace tnsdim {

inline std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

template <class E>
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)), entries_(product(dims_)) {}
  DenseTensor(std::vector<std::size_t> dims, std::vector<E> entries)
      : dims_(std::move(dims)), entries_(std::move(entries)) {
    if (entries_.size() != product(dims_)) throw ShapeMismatch("tensor entries do not match dims");
  }

  std::size_t order() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t k) const { return dims_.at(k); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<E>& entries() const { return entries_; }

  E& operator[](std::size_t flat) { return entries_[flat]; }
  const E& operator[](std::size_t flat) const { return entries_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) f = f * dims_[k] + idx[k];
    return f;
  }
  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
      idx[k] = flat % dims_[k];
      flat /= dims_[k];
    }
    return idx;
  }
  E& at(std::span<const std::size_t> idx) { return entries_[flat_index(idx)]; }
  const E& at(std::span<const std::size_t> idx) const { return entries_[flat_index(idx)]; }

  /// Stride of factor k in the flat layout.
  std::size_t stride(std::size_t k) const {
    std::size_t s = 1;
    for (std::size_t l = k + 1; l < dims_.size(); ++l) s *= dims_[l];
    return s;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const E& x) { return x.is_zero(); });
  }
  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const E& x) { return !x.is_zero(); }));
  }

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<E> entries_;
};

/// X_v : W_v -> V_v as n_v x N_v matrices, one per vertex.
template <class E>
struct MapTuple {
  std::vector<Matrix<E>> maps;
};

/// Visits every multi-index of `dims` in row-major order.
inline void for_each_index(std::span<const std::size_t> dims,
                           const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> idx(dims.size(), 0);
  if (product(dims) == 0) return;
  while (true) {
    fn(idx);
    std::size_t k = dims.size();
    while (k > 0) {
      --k;
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (dims.empty()) return;
  }
}

/// Position of edge e inside the W_v multi-index, and the stride it has there.
inline std::size_t edge_stride_in_vertex(const TensorNetwork& net, std::size_t v, std::size_t e) {
  const auto& inc = net.incident(v);
  std::size_t stride = 1;
  for (std::size_t k = inc.size(); k-- > 0;) {
    if (inc[k] == e) return stride;
    stride *= static_cast<std::size_t>(net.edge(inc[k]).m);
  }
  throw ShapeMismatch("edge is not incident to vertex");
}

/// T(Gamma, m): entry 1 where every edge's two indices agree.
template <class F>
DenseTensor<typename F::Elem> graph_tensor(const TensorNetwork& net, const F& field) {
  using E = typename F::Elem;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < net.order(); ++v) dims.push_back(static_cast<std::size_t>(net.bond_space_dim(v)));
  DenseTensor<E> t(dims);
  std::vector<std::size_t> bond_extent;
  for (const auto& e : net.edges()) bond_extent.push_back(static_cast<std::size_t>(e.m));
  // Stride of each edge inside each endpoint's W index.
  std::vector<std::size_t> head_stride, tail_stride;
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    head_stride.push_back(edge_stride_in_vertex(net, net.edge(e).head, e));
    tail_stride.push_back(edge_stride_in_vertex(net, net.edge(e).tail, e));
  }
  const E one = field.one();
  std::vector<std::size_t> w(net.order());
  for_each_index(bond_extent, [&](std::span<const std::size_t> j) {
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t e = 0; e < j.size(); ++e) {
      w[net.edge(e).head] += j[e] * head_stride[e];
      w[net.edge(e).tail] += j[e] * tail_stride[e];
    }
    t.at(w) = one;
  });
  return t;
}

/// u_(e)(m) on `order` factors: identity on factors a and b, C^1 elsewhere.
template <class F>
DenseTensor<typename F::Elem> edge_tensor(std::size_t order, std::size_t a, std::size_t b, std::size_t m,
                                          const F& field) {
  std::vector<std::size_t> dims(order, 1);
  dims.at(a) = m;
  dims.at(b) = m;
  DenseTensor<typename F::Elem> t(dims);
  std::vector<std::size_t> idx(order, 0);
  for (std::size_t j = 0; j < m; ++j) {
    idx[a] = idx[b] = j;
    t.at(idx) = field.one();
  }
  return t;
}

/// T (x) S regrouped on d factors; factor k index is i_k * dim(S, k) + i'_k.
template <class E>
DenseTensor<E> kronecker(const DenseTensor<E>& t, const DenseTensor<E>& s) {
  if (t.order() != s.order()) throw OrderMismatch("kronecker: tensors have different orders");
  const std::size_t d = t.order();
  std::vector<std::size_t> dims(d);
  for (std::size_t k = 0; k < d; ++k) dims[k] = t.dim(k) * s.dim(k);
  DenseTensor<E> out(dims);
  std::vector<std::size_t> idx(d);
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a].is_zero()) continue;
    const auto ti = t.multi_index(a);
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s[b].is_zero()) continue;
      const auto si = s.multi_index(b);
      for (std::size_t k = 0; k < d; ++k) idx[k] = ti[k] * s.dim(k) + si[k];
      out.at(idx) = t[a] * s[b];
    }
  }
  return out;
}

/// Rows range over the factors outside `subset`, columns over those inside
/// (both row-major in increasing factor order).
template <class E>
Matrix<E> flatten(const DenseTensor<E>& t, std::span<const std::size_t> subset) {
  const std::size_t d = t.order();
  std::vector<bool> in(d, false);
  for (std::size_t k : subset) {
    if (k >= d) throw BadSubset("flatten: factor index out of range");
    if (in[k]) throw BadSubset("flatten: repeated factor");
    in[k] = true;
  }
  if (subset.empty() || subset.size() == d) throw BadSubset("flatten: subset must be nonempty and proper");
  std::vector<std::size_t> row_f, col_f;
  for (std::size_t k = 0; k < d; ++k) (in[k] ? col_f : row_f).push_back(k);
  std::size_t rows = 1, cols = 1;
  for (std::size_t k : row_f) rows *= t.dim(k);
  for (std::size_t k : col_f) cols *= t.dim(k);
  Matrix<E> m(rows, cols);
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    const auto idx = t.multi_index(f);
    std::size_t r = 0, c = 0;
    for (std::size_t k : row_f) r = r * t.dim(k) + idx[k];
    for (std::size_t k : col_f) c = c * t.dim(k) + idx[k];
    m(r, c) = t[f];
  }
  return m;
}

/// Factor i is concise iff its single-factor flattening has rank dims_i.
template <class E>
std::vector<bool> is_concise(const DenseTensor<E>& t) {
  std::vector<bool> out;
  for (std::size_t k = 0; k < t.order(); ++k) {
    if (t.order() == 1) {
      out.push_back(t.dim(0) == 1 ? !t.is_zero() : false);
      continue;
    }
    const std::size_t factor[] = {k};
    out.push_back(rank(flatten(t, factor)) == t.dim(k));
  }
  return out;
}

/// Applies `map` (rows x dims_k) to factor k.
template <class E>
DenseTensor<E> contract_factor(const DenseTensor<E>& t, std::size_t k, const Matrix<E>& map) {
  if (map.cols() != t.dim(k)) throw ShapeMismatch("contract_factor: map columns != factor dimension");
  std::vector<std::size_t> dims = t.dims();
  dims[k] = map.rows();
  DenseTensor<E> out(dims);
  const std::size_t inner = t.stride(k);
  std::size_t outer = 1;
  for (std::size_t l = 0; l < k; ++l) outer *= t.dim(l);
  const std::size_t in_k = t.dim(k);
  const std::size_t out_k = map.rows();
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t c = 0; c < in_k; ++c) {
      const std::size_t src = (o * in_k + c) * inner;
      for (std::size_t r = 0; r < out_k; ++r) {
        const E& x = map(r, c);
        if (x.is_zero()) continue;
        const std::size_t dst = (o * out_k + r) * inner;
        for (std::size_t i = 0; i < inner; ++i) {
          const E& y = t[src + i];
          if (!y.is_zero()) out[dst + i] += x * y;
        }
      }
    }
  }
  return out;
}

/// (X_1 (x) ... (x) X_d) . t, one factor at a time.
template <class E>
DenseTensor<E> apply(const MapTuple<E>& x, const DenseTensor<E>& t) {
  if (x.maps.size() != t.order()) throw ShapeMismatch("apply: map count differs from tensor order");
  DenseTensor<E> cur = t;
  for (std::size_t k = 0; k < t.order(); ++k) cur = contract_factor(cur, k, x.maps[k]);
  return cur;
}

/// Independent uniform entries; X_v is n_v x N_v.
template <class F>
MapTuple<typename F::Elem> random_map_tuple(const TensorNetwork& net, const F& field, Rng& rng) {
  MapTuple<typename F::Elem> x;
  for (std::size_t v = 0; v < net.order(); ++v) {
    x.maps.push_back(random_matrix(static_cast<std::size_t>(net.local_dim(v)),
                                   static_cast<std::size_t>(net.bond_space_dim(v)), field, rng));
  }
  return x;
}

/// Phi(X) for X drawn from `rng`.
template <class F>
DenseTensor<typename F::Elem> sample_tns(const TensorNetwork& net, const F& field, Rng& rng) {
  const auto x = random_map_tuple(net, field, rng);
  return apply(x, graph_tensor(net, field));
}

/// Embeds t into a space whose factor k is larger by `extra`, padding with 0.
template <class E>
DenseTensor<E> pad_factor(const DenseTensor<E>& t, std::size_t k, std::size_t extra) {
  std::vector<std::size_t> dims = t.dims();
  dims.at(k) += extra;
  DenseTensor<E> out(dims);
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    out.at(t.multi_index(f)) = t[f];
  }
  return out;
}

template <class F>
DenseTensor<typename F::Elem> random_tensor(std::vector<std::size_t> dims, const F& field, Rng& rng) {
  DenseTensor<typename F::Elem> t(std::move(dims));
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = field.random(rng);
  return t;
}

}  // namespace tnsdim
