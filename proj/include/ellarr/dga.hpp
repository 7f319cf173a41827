#pragma once

// The bigraded differential algebra A = B / I of a unimodular elliptic
// arrangement, in the normal form given by its per-flat basis
//
//   A^{p,q} = sum over flats F of rank q of  H^p(F) * g_S,  S an NBC set with closure F,
//
// where H^*(F) = Lambda(H^1(X) / J_F^1) and J_F^1 is spanned by the pullbacks
// alpha_i^*(x), alpha_i^*(y) for i in F.
//
// Conventions:
//  - H^1(X) generators are ordered x_1 < y_1 < x_2 < y_2 < ..., with x_m at
//    index 2(m-1) and y_m at 2(m-1)+1. Monomials are strictly increasing.
//  - An element m * g_S is written with the H^*-factor first, then
//    g_{i_1} ... g_{i_k} with i_1 < ... < i_k. All generators are odd; the
//    total degree of m * g_S is |m| + |S|.
//  - For a dependent nonempty set C, g_C = g_{i_1} * (dg)_C lies in I, since
//    g_{i_1} kills every term of the boundary except the first. Products
//    whose g-indices are dependent are therefore zero.

#include "ellarr/arrangement.hpp"
#include "ellarr/exact.hpp"
#include "ellarr/index_set.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellarr {

/// Element of Lambda H^1(X): monomial (set of generator indices) -> coefficient.
using ExteriorForm = std::map<IndexSet, Rat>;

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
/// alpha^*(x) or alpha^*(y) for the column alpha: sum_k a_k x_k (resp. y_k).
ExteriorForm pullback(const IntVector& alpha, bool y_part);

/// H^*(F) = Lambda H^1(X) / J_F.
struct FlatCohomology {
  std::size_t flat = 0;
  /// Reduced row echelon basis of J_F^1 in generator coordinates.
  RatMatrix relations;
  IndexSet pivots;
  /// Non-pivot generators; their monomials form the basis of H^*(F).
  IndexSet quotient;
  /// Image of every generator in the quotient as a linear form over the
  /// quotient generators (identity on quotient generators).
  std::vector<ExteriorForm> substitution;

  /// Rewrites a form over all generators in the quotient basis.
  ExteriorForm reduce(const ExteriorForm& form) const;
};

struct BasisElement {
  std::size_t flat = 0;
  IndexSet nbc;
  IndexSet monomial;

  std::size_t p() const { return monomial.size(); }
  std::size_t q() const { return nbc.size(); }
  std::size_t degree() const { return p() + q(); }

  bool operator==(const BasisElement&) const = default;
  /// Flat id, then NBC set lexicographically, then monomial lexicographically.
  friend bool operator<(const BasisElement& a, const BasisElement& b) {
    if (a.flat != b.flat) return a.flat < b.flat;
    if (a.nbc != b.nbc) return lex_less(a.nbc, b.nbc);
    return lex_less(a.monomial, b.monomial);
  }
};

class DgaElement {
 public:
  using Terms = std::map<BasisElement, Rat>;

  DgaElement() = default;
  DgaElement(const BasisElement& e, const Rat& c = 1) { add(e, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const BasisElement& e) const;

  void add(const BasisElement& e, const Rat& c);
  DgaElement& operator+=(const DgaElement& o);
  DgaElement& operator-=(const DgaElement& o);
  DgaElement& operator*=(const Rat& c);
  friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
  friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a -= b; }
  friend DgaElement operator*(const Rat& c, DgaElement a) { return a *= c; }
  bool operator==(const DgaElement&) const = default;

 private:
  Terms terms_;
};

enum class DgaErrorKind { DependentInput, EmptyIntersection };

class DgaError : public std::invalid_argument {
 public:
  DgaError(DgaErrorKind kind, const std::string& msg)
      : std::invalid_argument(msg), kind_(kind) {}
  DgaErrorKind kind() const { return kind_; }

 private:
  DgaErrorKind kind_;
};

class Dga {
 public:
  explicit Dga(Arrangement arrangement);

  const Arrangement& arrangement() const { return arr_; }
  const FlatPoset& flats() const { return arr_.flats(); }
  std::size_t generator_count() const { return 2 * arr_.dim(); }

  const FlatCohomology& flat_quotient(std::size_t flat) const { return quotients_[flat]; }
  const std::vector<IndexSet>& nbc(std::size_t flat) const { return nbc_[flat]; }

  /// Basis of A^{p,q}: flats in id order, NBC sets and monomials
  /// lexicographically.
  std::vector<BasisElement> basis(std::size_t p, std::size_t q) const;
  /// sum over rank-q flats of C(2(n-q), p) * |NBC(F)|.
  std::size_t basis_size(std::size_t p, std::size_t q) const;

  /// g_T in the NBC basis of closure(T). Throws DgaError.
  DgaElement straighten(IndexSet t) const;

  DgaElement multiply(const DgaElement& u, const DgaElement& v) const;
  /// [Y_i] = alpha_i^*(x) alpha_i^*(y), in bidegree (2, 0).
  DgaElement divisor_class(std::size_t i) const;
  DgaElement differential(const DgaElement& u) const;

  /// Normal form of form * g_S for an arbitrary lift `form`; zero when S is
  /// dependent or its divisors do not meet.
  DgaElement normal_form(const ExteriorForm& form, IndexSet s) const;
  /// d(form * g_S) computed from the lift directly.
  DgaElement differential_of(const ExteriorForm& form, IndexSet s) const;

  DgaElement one() const;
  /// x_m (index 2(m-1)) or y_m (index 2(m-1)+1) as an element of A^{1,0}.
  DgaElement h1_generator(std::size_t index) const;
  DgaElement g(std::size_t i) const { return normal_form({{IndexSet{}, Rat(1)}}, IndexSet::of({i})); }

  /// Human-readable form, e.g. "x1*y1*g2 - x2*y2*g1".
  std::string render(const DgaElement& u) const;

 private:
  using GTerms = std::map<IndexSet, Rat>;
  GTerms straighten_terms(IndexSet t, const std::vector<IndexSet>& broken,
                          std::map<IndexSet, GTerms>& memo) const;
  std::size_t flat_of(IndexSet independent) const;

  Arrangement arr_;
  std::vector<FlatCohomology> quotients_;
  std::vector<std::vector<IndexSet>> nbc_;
  std::vector<std::vector<IndexSet>> broken_;
  std::vector<ExteriorForm> classes_;
};

FlatCohomology flat_quotient(const Arrangement& arr, std::size_t flat);

}  // namespace ellarr
