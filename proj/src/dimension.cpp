#include "tnsdim/dimension.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tnsdim {

std::int64_t gauge_dim(const TensorNetwork& net) {
  std::int64_t g = 0;
  for (const auto& e : net.edges()) g += checked_mul(e.m, e.m) - 1;
  return g;
}

std::int64_t segre_hom_dim(const TensorNetwork& net) {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < net.order(); ++v) s += checked_mul(net.local_dim(v), net.bond_space_dim(v));
  return s - static_cast<std::int64_t>(net.order()) + 1;
}

std::int64_t ambient_dim(const TensorNetwork& net) {
  std::int64_t a = 1;
  for (const auto& v : net.vertices()) a = saturating_mul(a, v.n);
  return a;
}

std::int64_t expected_dim(const TensorNetwork& net) {
  return std::min(segre_hom_dim(net) - gauge_dim(net), ambient_dim(net));
}

bool is_cycle(const TensorNetwork& net) {
  const std::size_t d = net.order();
  if (d < 3 || net.edge_count() != d) return false;
  for (std::size_t v = 0; v < d; ++v) {
    if (net.degree(v) != 2) return false;
  }
  std::vector<bool> seen(d, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : net.incident(v)) {
      const std::size_t u = net.edge(e).other(v);
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == d;
}

StabShortcut stab_shortcut(const TensorNetwork& net) {
  if (is_cycle(net)) {
    const auto m = net.bond_dims();
    const bool constant = std::all_of(m.begin(), m.end(), [&](std::int64_t x) { return x == m.front(); });
    const auto n = net.local_dims();
    const bool some_big = std::any_of(n.begin(), n.end(), [](std::int64_t x) { return x >= 2; });
    if (constant && some_big) return {true, "cycle"};
    if (!constant) return {false, "cycle with non-constant bond dimension"};
    return {false, "cycle with all local dimensions 1"};
  }
  if (net.edge_count() == 0) return {false, "no edges"};
  for (std::size_t v = 0; v < net.order(); ++v) {
    const auto& inc = net.incident(v);
    if (inc.size() < 3) return {false, "vertex " + net.vertex(v).label + " has degree < 3"};
    const std::int64_t m = net.edge(inc.front()).m;
    for (std::size_t e : inc) {
      if (net.edge(e).m != m) return {false, "vertex " + net.vertex(v).label + " has mixed bond dimensions"};
    }
    if (inc.size() == 3 && m == 2 && net.local_dim(v) == 1)
      return {false, "vertex " + net.vertex(v).label + " is the (3,2,1) exception"};
  }
  return {true, "degree"};
}

std::string Verdict::to_string() const {
  if (exact) return "Exact(" + std::to_string(lo) + ")";
  return "Range(" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
}

namespace {

bool all_equal(const std::vector<std::int64_t>& xs, std::int64_t value) {
  return std::all_of(xs.begin(), xs.end(), [&](std::int64_t x) { return x == value; });
}

}  // namespace

std::vector<std::string> known_case_notes(const TensorNetwork& net, std::int64_t lower, std::int64_t upper) {
  std::vector<std::string> notes;
  if (!is_cycle(net) || !all_equal(net.bond_dims(), 2)) return notes;
  auto n = net.local_dims();
  std::sort(n.begin(), n.end());
  if (net.order() == 4 && all_equal(n, 2)) {
    notes.push_back("known exact 15, sextic hypersurface");
  } else if (net.order() == 3 && n == std::vector<std::int64_t>{2, 3, 4}) {
    notes.push_back("known exact 22, cone over Z_{3,4,2} of dimension 21");
  } else if (net.order() == 3 && n == std::vector<std::int64_t>{2, 4, 4}) {
    notes.push_back("known exact 26, cone over Z_{4,4,2} of dimension 25");
  } else if (net.order() == 3 && n == std::vector<std::int64_t>{3, 4, 4}) {
    notes.push_back("tabulated value is 31 for both bounds; computed lower " + std::to_string(lower) +
                    ", upper " + std::to_string(upper));
  }
  return notes;
}

}  // namespace tnsdim
