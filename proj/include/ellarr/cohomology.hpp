#pragma once

// Weight-graded cohomology of the arrangement complement.
//
// The bidegree (p, q) part of A contributes to gr_{p+2q} H^{p+q}. The
// differential has bidegree (+2, -1) and preserves the weight w = p + 2q, so
// the complex splits into one small complex per weight:
//
//   ... -> A^{2k-w, w-k} -> A^{2k-w+2, w-k-1} -> ...   (k = total degree)

#include "ellarr/dga.hpp"
#include "ellarr/exact.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ellarr {

/// dim gr_j H^i, stored for nonzero entries only.
class HodgeTable {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (i, j)

  void set(std::size_t i, std::size_t j, std::size_t dim);
  std::size_t at(std::size_t i, std::size_t j) const;
  const std::map<Key, std::size_t>& entries() const { return entries_; }

  /// Betti numbers b_0, ..., b_top (trailing zeros dropped).
  std::vector<std::size_t> betti() const;
  long euler() const;

  /// H(t,u), e.g. "1 + 4*t*u + 3*t^2*u^2 + 2*t^2*u^3".
  std::string render_hodge() const;
  /// P(t) = H(t, 1), e.g. "1 + 4*t + 5*t^2".
  std::string render_poincare() const;

  bool operator==(const HodgeTable&) const = default;

 private:
  std::map<Key, std::size_t> entries_;
};

/// Matrix of d: A^{p,q} -> A^{p+2,q-1} in the canonical basis orders
/// (rows index the target basis, columns the source basis).
RatMatrix differential_matrix(const Dga& dga, std::size_t p, std::size_t q,
                              Exec exec = Exec::serial);

/// Cohomology table. The parallel path distributes matrix assembly and rank
/// computations over OpenMP threads; both paths return identical tables.
HodgeTable hodge_table(const Dga& dga, Exec exec = Exec::parallel);

/// Serial reference: walks each weight complex in order.
HodgeTable hodge_table_serial(const Dga& dga);

/// Coefficients of P(t), lowest degree first.
std::vector<std::size_t> poincare(const HodgeTable& table);

/// sum (-1)^{p+q} dim A^{p,q}, computed from the basis counts.
long euler_characteristic(const Dga& dga);

/// All (p, q) with A^{p,q} possibly nonzero: 0 <= q <= max rank,
/// 0 <= p <= 2(n - q).
std::vector<std::pair<std::size_t, std::size_t>> bidegrees(const Dga& dga);

}  // namespace ellarr
