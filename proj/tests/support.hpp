#pragma once

// Shared fixtures for the unit and acceptance suites.

#include "ellarr/arrangement.hpp"
#include "ellarr/exact.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ellarr::testing {

inline Divisor divisor(std::vector<long> coeffs, std::pair<Rat, Rat> translation = {0, 0}) {
  Divisor d;
  for (long c : coeffs) d.coeffs.emplace_back(c);
  d.translation = {translation.first, translation.second};
  return d;
}

inline ArrangementSpec spec_of(std::size_t n, std::vector<Divisor> divisors) {
  return ArrangementSpec{n, std::move(divisors)};
}

/// E^2 with columns (1,0), (0,1), (1,-1).
inline ArrangementSpec three_lines_e2() {
  return spec_of(2, {divisor({1, 0}), divisor({0, 1}), divisor({1, -1})});
}

/// E minus l torsion points k/l.
inline ArrangementSpec punctured_curve(std::size_t l) {
  std::vector<Divisor> ds;
  for (std::size_t k = 0; k < l; ++k)
    ds.push_back(divisor({1}, {Rat(static_cast<long>(k), static_cast<long>(l)), 0}));
  return spec_of(1, std::move(ds));
}

/// Configuration space of m points on E: divisors e_i - e_j.
inline ArrangementSpec braid(std::size_t m) {
  std::vector<Divisor> ds;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<long> c(m, 0);
      c[i] = 1;
      c[j] = -1;
      ds.push_back(divisor(c));
    }
  return spec_of(m, std::move(ds));
}

inline ArrangementSpec empty_arrangement(std::size_t n) { return spec_of(n, {}); }

/// Random element of GL_n(Z) built from elementary moves.
inline IntMatrix random_gl(std::size_t n, std::mt19937& rng) {
  IntMatrix g = IntMatrix::identity(n);
  if (n == 0) return g;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) g(i, c) = -g(i, c);
      continue;
    }
    const int s = coin(rng) ? 1 : -1;
    for (std::size_t c = 0; c < n; ++c) g(i, c) += s * g(j, c);
  }
  return g;
}

/// Columns alpha_i replaced by g * alpha_i.
inline ArrangementSpec transform(const ArrangementSpec& spec, const IntMatrix& g) {
  ArrangementSpec out = spec;
  for (Divisor& d : out.divisors) {
    IntVector a(spec.n, 0);
    for (std::size_t r = 0; r < spec.n; ++r)
      for (std::size_t k = 0; k < spec.n; ++k) a[r] += g(r, k) * d.coeffs[k];
    d.coeffs = a;
  }
  return out;
}

inline ArrangementSpec permute(const ArrangementSpec& spec, std::mt19937& rng) {
  ArrangementSpec out = spec;
  std::shuffle(out.divisors.begin(), out.divisors.end(), rng);
  return out;
}

/// Random unimodular arrangement with 2n + l <= max_generators. Columns
/// come from a directed multigraph on n + 1 vertices (a totally unimodular
/// network matrix) and are then mixed by a random GL_n(Z) element.
/// Translations have denominators at most 4.
inline ArrangementSpec random_unimodular(std::mt19937& rng, std::size_t max_generators = 12,
                                         std::size_t max_n = 4) {
  std::uniform_int_distribution<std::size_t> pick_n(1, std::min(max_n, (max_generators - 1) / 2));
  const std::size_t n = pick_n(rng);
  std::uniform_int_distribution<std::size_t> pick_l(1, max_generators - 2 * n);
  const std::size_t l = pick_l(rng);
  std::uniform_int_distribution<std::size_t> vertex(0, n);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> untranslated(0, 2);

  const IntMatrix g = random_gl(n, rng);
  ArrangementSpec spec{n, {}};
  while (spec.divisors.size() < l) {
    std::size_t a = vertex(rng), b = vertex(rng);
    while (a == b) b = vertex(rng);
    std::vector<long> c(n, 0);
    if (a > 0) c[a - 1] += 1;
    if (b > 0) c[b - 1] -= 1;
    std::pair<Rat, Rat> t{0, 0};
    if (untranslated(rng) == 0) {
      const int d = den(rng);
      std::uniform_int_distribution<int> num(0, d - 1);
      t = {Rat(num(rng), d), Rat(num(rng), d)};
      t.first.canonicalize();
      t.second.canonicalize();
    }
    ArrangementSpec next = spec;
    next.divisors.push_back(divisor(c, t));
    next = transform(next, g);
    try {
      (void)Arrangement::validate(next);
    } catch (const ValidationError&) {
      continue;  // duplicate drawn
    }
    spec.divisors.push_back(divisor(c, t));
  }
  return transform(spec, g);
}

}  // namespace ellarr::testing
