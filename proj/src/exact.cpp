#include "ellarr/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace ellarr {

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  if (rows.empty()) return {};
  Matrix out(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != out.cols_) {
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < out.cols_; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<T>> tmp;
  for (const auto& r : rows) {
    std::vector<T> row;
    for (long v : r) row.emplace_back(v);
    tmp.push_back(std::move(row));
  }
  return from_rows(tmp);
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const T& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template class Matrix<Int>;
template class Matrix<Rat>;

namespace {

// Row and column operations applied simultaneously to the working matrix and
// to the accumulated transform.
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= k * m(src, c);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= k * m(r, src);
}

}  // namespace

SnfResult smith_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  std::vector<Int> invariants;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (d(r, c) != 0 && (pr == rows || abs(d(r, c)) < abs(d(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;

    for (;;) {
      d.swap_rows(t, pr);
      left.swap_rows(t, pr);
      d.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row_multiple(d, r, t, q);
        add_row_multiple(left, r, t, q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        add_col_multiple(d, c, t, q);
        add_col_multiple(right, c, t, q);
        if (d(t, c) != 0) clean = false;
      }

      if (!clean) {
        // Remainders are smaller than the pivot; promote the smallest.
        pr = t;
        pc = t;
        for (std::size_t r = t + 1; r < rows; ++r)
          if (d(r, t) != 0 && abs(d(r, t)) < abs(d(pr, pc))) {
            pr = r;
            pc = t;
          }
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(t, c) != 0 && abs(d(t, c)) < abs(d(pr, pc))) {
            pr = t;
            pc = c;
          }
        continue;
      }

      // Pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      add_row_multiple(d, t, bad, Int(-1));
      add_row_multiple(left, t, bad, Int(-1));
      pr = t;
      pc = t;
    }

    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) left(t, c) = -left(t, c);
    }
    invariants.push_back(d(t, t));
  }
  return {std::move(invariants), std::move(left), std::move(right)};
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
  return smith_form(m).invariants;
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

namespace {

void make_primitive(std::span<Int> row) {
  Int g = gcd_of(row);
  if (g > 1)
    for (Int& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Eliminates the pivot column from `target` using `pivot`:
// target <- (p/g) * target - (t/g) * pivot, then strips the row content.
void eliminate_row(std::span<Int> target, std::span<const Int> pivot, std::size_t col) {
  Int g;
  mpz_gcd(g.get_mpz_t(), pivot[col].get_mpz_t(), target[col].get_mpz_t());
  Int a = pivot[col] / g;
  Int b = target[col] / g;
  for (std::size_t c = col; c < target.size(); ++c) {
    if (pivot[c] == 0) {
      if (target[c] != 0) target[c] *= a;
      continue;
    }
    target[c] = a * target[c] - b * pivot[c];
  }
  make_primitive(target);
}

// Fraction-free elimination over Z with row contents divided out after every
// update; rows that already vanish in the pivot column are left untouched.
std::size_t rank_fraction_free(IntMatrix a, Exec exec) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t r = 0; r < rows; ++r) make_primitive(a.row(r));

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      if (pivot == rows || abs(a(r, c)) < abs(a(pivot, c))) pivot = r;
      if (abs(a(pivot, c)) == 1) break;
    }
    if (pivot == rows) continue;
    a.swap_rows(rank, pivot);

    const std::span<const Int> prow = a.row(rank);
    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
    if (exec == Exec::parallel && last - first >= 32) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t r = first; r < last; ++r) {
        if (a(static_cast<std::size_t>(r), c) != 0)
          eliminate_row(a.row(static_cast<std::size_t>(r)), prow, c);
      }
    } else {
      for (std::ptrdiff_t r = first; r < last; ++r) {
        if (a(static_cast<std::size_t>(r), c) != 0)
          eliminate_row(a.row(static_cast<std::size_t>(r)), prow, c);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m, Exec exec) {
  if (m.empty()) return 0;
  // Eliminate along the shorter dimension.
  if (m.rows() > m.cols()) return rank_fraction_free(m.transposed(), exec);
  return rank_fraction_free(m, exec);
}

IntVector primitive_integer_vector(std::span<const Rat> v) {
  Int lcm = 1;
  for (const Rat& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    Rat scaled = x * lcm;
    out.push_back(scaled.get_num());
  }
  make_primitive(out);
  return out;
}

std::size_t rank_rational(const RatMatrix& m, Exec exec) {
  if (m.empty()) return 0;
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntVector row = primitive_integer_vector(m.row(r));
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = std::move(row[c]);
  }
  return rank_rational(a, exec);
}

std::vector<IntVector> left_kernel_lattice(const IntMatrix& m) {
  // Rows of the left transform beyond the rank annihilate m, and since the
  // transform is unimodular they span the saturated kernel.
  SnfResult snf = smith_form(m);
  std::vector<IntVector> out;
  for (std::size_t r = snf.invariants.size(); r < m.rows(); ++r) {
    IntVector v(snf.left.row(r).begin(), snf.left.row(r).end());
    auto lead = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    if (lead != v.end() && *lead < 0)
      for (Int& x : v) x = -x;
    out.push_back(std::move(v));
  }
  return out;
}

bool solvable_mod_one(const IntMatrix& m, std::span<const Rat> b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solvable_mod_one: length of b must equal rows");
  for (const IntVector& lambda : left_kernel_lattice(m)) {
    Rat s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += lambda[i] * b[i];
    if (s.get_den() != 1) return false;
  }
  return true;
}

std::vector<std::size_t> reduce_row_echelon(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    Rat inv = 1 / m(rank, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(rank, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    pivots.push_back(c);
    ++rank;
  }
  RatMatrix trimmed(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) trimmed(r, c) = m(r, c);
  m = std::move(trimmed);
  return pivots;
}

Rat fractional_part(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat out = x - Rat(fl);
  out.canonicalize();
  return out;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace ellarr
