#pragma once

// Exact integer and rational linear algebra.
//
// Everything here is arbitrary precision (GMP). No floating point is used
// anywhere in the library. All functions are pure and may be called
// concurrently on independent inputs.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ellarr {

using Int = mpz_class;
using Rat = mpq_class;

/// Selects between the serial reference kernels and their OpenMP versions.
enum class Exec { serial, parallel };

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from a list of rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transposed() const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Smith normal form with transforms: left * M * right == diag(invariants, 0...).
struct SnfResult {
  /// Nonzero invariant factors d1 | d2 | ... | dr, all positive.
  std::vector<Int> invariants;
  IntMatrix left;   // rows x rows, unimodular
  IntMatrix right;  // cols x cols, unimodular
};

SnfResult smith_form(const IntMatrix& m);

/// Nonzero invariant factors of m; the length equals the rational rank.
std::vector<Int> smith_invariants(const IntMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const IntMatrix& m, Exec exec = Exec::serial);

/// Rank of a rational matrix; rows are scaled to integers first.
std::size_t rank_rational(const RatMatrix& m, Exec exec = Exec::serial);

/// Basis of the saturated lattice { l in Z^rows : l * m = 0 }. Each vector
/// is primitive with its first nonzero entry positive.
std::vector<IntVector> left_kernel_lattice(const IntMatrix& m);

/// True iff m * z = b has a solution z in (R/Z)^cols, reading b modulo 1.
bool solvable_mod_one(const IntMatrix& m, std::span<const Rat> b);

/// Reduced row echelon form in place. Pivots are taken in column order, so
/// each pivot sits at the smallest column index available. Zero rows are
/// dropped. Returns the pivot columns.
std::vector<std::size_t> reduce_row_echelon(RatMatrix& m);

/// Representative of x modulo 1 in [0, 1).
Rat fractional_part(const Rat& x);

/// Scales a rational vector to a primitive integer vector with the same
/// direction (positive multiple).
IntVector primitive_integer_vector(std::span<const Rat> v);

Int gcd_of(std::span<const Int> v);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace ellarr
