#include "tnsdim/invariants.hpp"

namespace tnsdim {

std::int64_t z_dim(std::int64_t a, std::int64_t b, std::int64_t r) {
  if (r < 1 || r >= std::min(a, b)) throw BadRank("rank bound must satisfy 1 <= r < min(a, b)");
  return 2 * r * (a + b - r) + 1;
}

}  // namespace tnsdim
