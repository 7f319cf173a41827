#pragma once

// Elliptic arrangements in X = E^n.
//
// Divisor i is Y_i = { z in E^n : sum_k a_ki z_k = b_i }, where the column
// alpha_i = (a_1i, ..., a_ni) is a primitive integer vector and the
// translation b_i is a torsion point of E, stored as two rationals modulo 1
// (one per real coordinate of E = (R/Z)^2).
//
// Unimodularity (every intersection Y_S connected) is equivalent to every
// linearly independent set of columns spanning a direct summand of Z^n. It
// suffices to test maximal independent sets: a subset of a basis of a direct
// summand spans a direct summand.
//
// Divisor indices are 0-based in this API; the list order is the order used
// for broken circuits. Labels rendered for people are 1-based.

#include "ellarr/exact.hpp"
#include "ellarr/index_set.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellarr {

struct Divisor {
  IntVector coeffs;
  std::array<Rat, 2> translation{};
};

struct ArrangementSpec {
  std::size_t n = 0;
  std::vector<Divisor> divisors;
};

enum class ValidationKind {
  DimensionMismatch,
  TooLarge,
  ZeroColumn,
  NonPrimitiveColumn,
  DuplicateDivisor,
  NotUnimodular,
};

std::string to_string(ValidationKind kind);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, IndexSet witness, std::vector<Int> invariants,
                  const std::string& message)
      : std::runtime_error(message),
        kind_(kind),
        witness_(witness),
        invariants_(std::move(invariants)) {}

  ValidationKind kind() const { return kind_; }
  /// Offending divisors (a single column, a duplicate pair, or a
  /// non-unimodular basis).
  IndexSet witness() const { return witness_; }
  /// Invariant factors of the witness basis (NotUnimodular only).
  const std::vector<Int>& invariants() const { return invariants_; }

 private:
  ValidationKind kind_;
  IndexSet witness_;
  std::vector<Int> invariants_;
};

/// Thrown by closure() on a set whose divisors do not meet.
class EmptyIntersection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Flat {
  IndexSet indices;
  std::size_t rank = 0;
  bool operator==(const Flat&) const = default;
};

struct Circuit {
  IndexSet indices;
  /// Primitive coefficients, one per element of `indices` in increasing
  /// order, with sum lambda_i alpha_i = 0; the first entry is positive.
  IntVector dependency;
  /// True when sum lambda_i b_i is nonzero in E, i.e. Y_C is empty.
  bool empty_intersection = false;
};

/// Flats ordered by rank and then lexicographically; ordered among
/// themselves by inclusion of index sets.
class FlatPoset {
 public:
  FlatPoset() = default;
  explicit FlatPoset(std::vector<Flat> flats);

  std::size_t size() const { return flats_.size(); }
  const Flat& operator[](std::size_t id) const { return flats_[id]; }
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t bottom() const { return 0; }
  /// Mobius value mu(bottom, F).
  long mobius(std::size_t id) const { return mobius_[id]; }
  bool leq(std::size_t a, std::size_t b) const {
    return flats_[a].indices.subset_of(flats_[b].indices);
  }
  /// Id of the flat with exactly these indices, or size() if none.
  std::size_t find(IndexSet indices) const;
  std::size_t max_rank() const;

 private:
  std::vector<Flat> flats_;
  std::vector<long> mobius_;
  std::map<IndexSet, std::size_t> by_indices_;
};

class Arrangement {
 public:
  /// Checks the input and builds the matroid and flat data. Throws
  /// ValidationError.
  static Arrangement validate(ArrangementSpec spec);

  std::size_t dim() const { return spec_.n; }
  std::size_t size() const { return spec_.divisors.size(); }
  const ArrangementSpec& spec() const { return spec_; }
  const IntVector& column(std::size_t i) const { return spec_.divisors[i].coeffs; }
  IndexSet all() const { return IndexSet::range(size()); }

  /// Matrix with rows alpha_i^T for i in s (|s| x n).
  IntMatrix row_matrix(IndexSet s) const;

  std::size_t subset_rank(IndexSet s) const;
  bool is_independent(IndexSet s) const { return subset_rank(s) == s.size(); }
  bool is_empty(IndexSet s) const;
  /// Throws EmptyIntersection if the divisors in s do not meet.
  Flat closure(IndexSet s) const;

  const FlatPoset& flats() const { return flats_; }
  const std::vector<Circuit>& circuits() const { return circuits_; }
  /// Broken circuits (circuit minus its smallest index) contained in f.
  std::vector<IndexSet> broken_circuits(IndexSet f) const;
  /// NBC sets whose closure is f, in lexicographic order.
  std::vector<IndexSet> nbc_sets(const Flat& f) const;
  /// Id of closure(s) for an independent s, looked up in the poset.
  std::size_t flat_of_independent(IndexSet s) const;

 private:
  explicit Arrangement(ArrangementSpec spec) : spec_(std::move(spec)) {}
  void check_unimodular() const;
  void build_circuits();
  void build_flats();

  ArrangementSpec spec_;
  std::vector<Circuit> circuits_;
  FlatPoset flats_;
};

}  // namespace ellarr
