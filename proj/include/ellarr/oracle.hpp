#pragma once

// Brute-force reference for testing. Works in the free algebra
// B = Lambda(x_1, y_1, ..., x_n, y_n, g_1, ..., g_l), spans the ideal I in
// every bidegree by multiplying its generators with all monomials, and takes
// cohomology of the induced differential on B / I by raw elimination.
//
// Only the exact kernel and the plain input types are shared with the main
// path: circuits and emptiness are recomputed here by subset enumeration.

#include "ellarr/arrangement.hpp"
#include "ellarr/cohomology.hpp"
#include "ellarr/exact.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellarr::oracle {

/// Element of B. Monomial bits 0 .. 2n-1 are the H^1 generators, bits
/// 2n .. 2n+l-1 the g_i; products are ordered by bit index.
using FreeElement = std::map<IndexSet, Rat>;

struct Options {
  /// Upper bound on 2n + l.
  std::size_t max_generators = 12;
  /// Impose relations for every empty or dependent subset, not only for
  /// circuits.
  bool exhaustive = false;
};

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<FreeElement> ideal_generators(const ArrangementSpec& spec, bool exhaustive = false);

struct Report {
  HodgeTable table;
  /// dim (B / I)^{p,q}, nonzero entries only.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> quotient_dims;
  /// d(r) reduced to zero modulo I for every ideal generator r.
  bool ideal_is_closed = true;
};

/// Full oracle run. Throws TooLarge when 2n + l exceeds the bound.
Report run(const ArrangementSpec& spec, const Options& options = {});

/// run(...).table; throws std::logic_error if d(I) is not contained in I.
HodgeTable oracle_hodge_table(const ArrangementSpec& spec, const Options& options = {});

/// E.g. "g2*g3 - g1*g3 + g1*g2".
std::string render(const FreeElement& e, std::size_t n);

}  // namespace ellarr::oracle
