#include "ellarr/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ellarr {

std::string to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::DimensionMismatch: return "DimensionMismatch";
    case ValidationKind::TooLarge: return "TooLarge";
    case ValidationKind::ZeroColumn: return "ZeroColumn";
    case ValidationKind::NonPrimitiveColumn: return "NonPrimitiveColumn";
    case ValidationKind::DuplicateDivisor: return "DuplicateDivisor";
    case ValidationKind::NotUnimodular: return "NotUnimodular";
  }
  return "Unknown";
}

namespace {

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out;
}

[[noreturn]] void reject(ValidationKind kind, IndexSet witness, const std::string& detail,
                         std::vector<Int> invariants = {}) {
  throw ValidationError(kind, witness, std::move(invariants),
                        to_string(kind) + ": " + detail);
}

}  // namespace

FlatPoset::FlatPoset(std::vector<Flat> flats) : flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return lex_less(a.indices, b.indices);
  });
  mobius_.assign(flats_.size(), 0);
  for (std::size_t id = 0; id < flats_.size(); ++id) {
    by_indices_[flats_[id].indices] = id;
    if (id == 0) {
      mobius_[id] = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t g = 0; g < id; ++g)
      if (flats_[g].indices.subset_of(flats_[id].indices)) sum += mobius_[g];
    mobius_[id] = -sum;
  }
}

std::size_t FlatPoset::find(IndexSet indices) const {
  auto it = by_indices_.find(indices);
  return it == by_indices_.end() ? flats_.size() : it->second;
}

std::size_t FlatPoset::max_rank() const {
  return flats_.empty() ? 0 : flats_.back().rank;
}

Arrangement Arrangement::validate(ArrangementSpec spec) {
  const std::size_t n = spec.n;
  const std::size_t l = spec.divisors.size();
  if (2 * n > IndexSet::capacity || l > IndexSet::capacity) {
    reject(ValidationKind::TooLarge, {},
           "at most 32 dimensions and 64 divisors are supported");
  }
  for (std::size_t i = 0; i < l; ++i) {
    Divisor& d = spec.divisors[i];
    const IndexSet w = IndexSet::of({i});
    if (d.coeffs.size() != n) {
      reject(ValidationKind::DimensionMismatch, w,
             "divisor " + std::to_string(i + 1) + " has " + std::to_string(d.coeffs.size()) +
                 " coefficients, expected " + std::to_string(n));
    }
    Int g = gcd_of(d.coeffs);
    if (g == 0) reject(ValidationKind::ZeroColumn, w, "divisor " + std::to_string(i + 1) + " has a zero column");
    if (g != 1) {
      reject(ValidationKind::NonPrimitiveColumn, w,
             "divisor " + std::to_string(i + 1) + " has column content " + g.get_str() +
                 " (a disconnected divisor)");
    }
    for (Rat& b : d.translation) b = fractional_part(b);
  }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      const Divisor& a = spec.divisors[i];
      const Divisor& b = spec.divisors[j];
      bool same = a.coeffs == b.coeffs && a.translation == b.translation;
      bool negated = true;
      for (std::size_t k = 0; k < n && negated; ++k) negated = a.coeffs[k] == -b.coeffs[k];
      for (std::size_t c = 0; c < 2 && negated; ++c)
        negated = fractional_part(a.translation[c] + b.translation[c]) == 0;
      if (same || negated) {
        reject(ValidationKind::DuplicateDivisor, IndexSet::of({i, j}),
               "divisors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                   " define the same subvariety");
      }
    }

  Arrangement arr(std::move(spec));
  arr.check_unimodular();
  arr.build_circuits();
  arr.build_flats();
  return arr;
}

IntMatrix Arrangement::row_matrix(IndexSet s) const {
  IntMatrix m(s.size(), dim());
  std::size_t r = 0;
  for (std::size_t i : s.elements()) {
    for (std::size_t k = 0; k < dim(); ++k) m(r, k) = column(i)[k];
    ++r;
  }
  return m;
}

std::size_t Arrangement::subset_rank(IndexSet s) const {
  if (s.empty()) return 0;
  return rank_rational(row_matrix(s));
}

bool Arrangement::is_empty(IndexSet s) const {
  if (s.empty()) return false;
  const IntMatrix m = row_matrix(s);
  for (std::size_t c = 0; c < 2; ++c) {
    RatVector b;
    for (std::size_t i : s.elements()) b.push_back(spec_.divisors[i].translation[c]);
    if (!solvable_mod_one(m, b)) return true;
  }
  return false;
}

Flat Arrangement::closure(IndexSet s) const {
  if (is_empty(s)) throw EmptyIntersection("closure: divisors " + to_label(s) + " do not meet");
  const std::size_t rank = subset_rank(s);
  IndexSet out = s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (s.contains(i)) continue;
    const IndexSet t = s.with(i);
    if (subset_rank(t) == rank && !is_empty(t)) out = out.with(i);
  }
  return {out, rank};
}

// Maximal independent sets suffice: every independent S extends to a basis B
// of the column matroid, B is a Z-basis of span(B), so span(S) is a summand
// of span(B), which is a summand of Z^n.
void Arrangement::check_unimodular() const {
  const std::size_t r = subset_rank(all());
  for_each_subset(all(), r, [&](IndexSet basis) {
    const std::vector<Int> inv = smith_invariants(row_matrix(basis));
    if (inv.size() != r) return true;  // dependent
    for (const Int& d : inv) {
      if (d != 1) {
        reject(ValidationKind::NotUnimodular, basis,
               "divisors " + to_label(basis) + " span a sublattice with invariant factors " +
                   join(inv),
               inv);
      }
    }
    return true;
  });
}

void Arrangement::build_circuits() {
  // Every circuit is the fundamental circuit of some element with respect to
  // some basis.
  const std::size_t r = subset_rank(all());
  std::map<IndexSet, Circuit> found;
  for_each_subset(all(), r, [&](IndexSet basis) {
    if (!is_independent(basis)) return true;
    for (std::size_t e = 0; e < size(); ++e) {
      if (basis.contains(e)) continue;
      const IndexSet rows = basis.with(e);
      const std::vector<IntVector> kernel = left_kernel_lattice(row_matrix(rows));
      if (kernel.size() != 1) continue;
      Circuit c;
      const std::vector<std::size_t> elems = rows.elements();
      for (std::size_t k = 0; k < elems.size(); ++k) {
        if (kernel[0][k] == 0) continue;
        c.indices = c.indices.with(elems[k]);
        c.dependency.push_back(kernel[0][k]);
      }
      if (found.contains(c.indices)) continue;
      for (std::size_t coord = 0; coord < 2 && !c.empty_intersection; ++coord) {
        Rat sum = 0;
        std::size_t k = 0;
        for (std::size_t i : c.indices.elements())
          sum += c.dependency[k++] * spec_.divisors[i].translation[coord];
        c.empty_intersection = sum.get_den() != 1;
      }
      found.emplace(c.indices, std::move(c));
    }
    return true;
  });
  circuits_.clear();
  for (auto& [key, c] : found) circuits_.push_back(std::move(c));
  std::sort(circuits_.begin(), circuits_.end(),
            [](const Circuit& a, const Circuit& b) { return lex_less(a.indices, b.indices); });
}

void Arrangement::build_flats() {
  std::set<IndexSet> seen;
  std::vector<Flat> flats;
  std::deque<Flat> queue;
  const Flat bottom = closure({});
  seen.insert(bottom.indices);
  queue.push_back(bottom);
  while (!queue.empty()) {
    Flat f = queue.front();
    queue.pop_front();
    flats.push_back(f);
    for (std::size_t i = 0; i < size(); ++i) {
      if (f.indices.contains(i)) continue;
      const IndexSet t = f.indices.with(i);
      if (is_empty(t)) continue;
      Flat g = closure(t);
      if (seen.insert(g.indices).second) queue.push_back(g);
    }
  }
  flats_ = FlatPoset(std::move(flats));
}

std::vector<IndexSet> Arrangement::broken_circuits(IndexSet f) const {
  std::vector<IndexSet> out;
  for (const Circuit& c : circuits_)
    if (c.indices.subset_of(f)) out.push_back(c.indices.without(c.indices.min()));
  return out;
}

std::vector<IndexSet> Arrangement::nbc_sets(const Flat& f) const {
  const std::vector<IndexSet> broken = broken_circuits(f.indices);
  std::vector<IndexSet> out;
  for_each_subset(f.indices, f.rank, [&](IndexSet s) {
    for (IndexSet b : broken)
      if (b.subset_of(s)) return true;
    if (is_independent(s)) out.push_back(s);
    return true;
  });
  return out;
}

std::size_t Arrangement::flat_of_independent(IndexSet s) const {
  for (std::size_t id = 0; id < flats_.size(); ++id) {
    const Flat& f = flats_[id];
    if (f.rank == s.size() && s.subset_of(f.indices)) return id;
  }
  return flats_.size();
}

}  // namespace ellarr
