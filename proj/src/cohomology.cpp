#include "ellarr/cohomology.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace ellarr {

void HodgeTable::set(std::size_t i, std::size_t j, std::size_t dim) {
  if (dim == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = dim;
  }
}

std::size_t HodgeTable::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::size_t> HodgeTable::betti() const {
  std::vector<std::size_t> out;
  for (const auto& [key, dim] : entries_) {
    if (out.size() <= key.first) out.resize(key.first + 1, 0);
    out[key.first] += dim;
  }
  return out;
}

long HodgeTable::euler() const {
  long chi = 0;
  for (const auto& [key, dim] : entries_)
    chi += (key.first % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
  return chi;
}

namespace {

std::string power(const char* var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string term(std::size_t coeff, std::vector<std::string> factors) {
  std::erase(factors, std::string{});
  if (factors.empty()) return std::to_string(coeff);
  std::string out = coeff == 1 ? "" : std::to_string(coeff) + "*";
  for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  return out;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) out += (k ? " + " : "") + terms[k];
  return out.empty() ? "0" : out;
}

}  // namespace

std::string HodgeTable::render_hodge() const {
  std::vector<std::pair<Key, std::size_t>> sorted(entries_.begin(), entries_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const std::size_t da = a.first.first + a.first.second;
    const std::size_t db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.second < b.first.second;
  });
  std::vector<std::string> terms;
  if (at(0, 0) == 0) terms.push_back("0");
  for (const auto& [key, dim] : sorted)
    terms.push_back(term(dim, {power("t", key.first), power("u", key.second)}));
  return join_terms(terms);
}

std::string HodgeTable::render_poincare() const {
  std::vector<std::string> terms;
  const std::vector<std::size_t> b = betti();
  if (b.empty() || b[0] == 0) terms.push_back("0");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) terms.push_back(term(b[i], {power("t", i)}));
  return join_terms(terms);
}

std::vector<std::size_t> poincare(const HodgeTable& table) { return table.betti(); }

std::vector<std::pair<std::size_t, std::size_t>> bidegrees(const Dga& dga) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = dga.arrangement().dim();
  for (std::size_t q = 0; q <= dga.flats().max_rank(); ++q)
    for (std::size_t p = 0; p <= 2 * (n - q); ++p) out.emplace_back(p, q);
  return out;
}

long euler_characteristic(const Dga& dga) {
  long chi = 0;
  for (auto [p, q] : bidegrees(dga))
    chi += ((p + q) % 2 == 0 ? 1 : -1) * static_cast<long>(dga.basis_size(p, q));
  return chi;
}

RatMatrix differential_matrix(const Dga& dga, std::size_t p, std::size_t q, Exec exec) {
  const std::vector<BasisElement> source = dga.basis(p, q);
  if (q == 0) {
    return RatMatrix(dga.basis_size(p + 2, 0), source.size());
  }
  const std::vector<BasisElement> target = dga.basis(p + 2, q - 1);
  std::map<BasisElement, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);

  RatMatrix m(target.size(), source.size());
  if (target.empty() || source.empty()) return m;
  const auto cols = static_cast<std::ptrdiff_t>(source.size());
  // Columns are independent; each thread writes only its own column.
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel && cols > 8)
  for (std::ptrdiff_t c = 0; c < cols; ++c) {
    const DgaElement image = dga.differential(DgaElement(source[static_cast<std::size_t>(c)]));
    for (const auto& [e, coeff] : image.terms())
      m(row_of.at(e), static_cast<std::size_t>(c)) = coeff;
  }
  return m;
}

namespace {

HodgeTable assemble(const Dga& dga,
                    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& rank_out) {
  auto rank_at = [&](std::ptrdiff_t p, std::ptrdiff_t q) -> std::size_t {
    if (p < 0 || q < 0) return 0;
    auto it = rank_out.find({static_cast<std::size_t>(p), static_cast<std::size_t>(q)});
    return it == rank_out.end() ? 0 : it->second;
  };
  HodgeTable table;
  for (auto [p, q] : bidegrees(dga)) {
    const std::size_t dim = dga.basis_size(p, q);
    const std::size_t outgoing = rank_at(static_cast<std::ptrdiff_t>(p), static_cast<std::ptrdiff_t>(q));
    const std::size_t incoming =
        rank_at(static_cast<std::ptrdiff_t>(p) - 2, static_cast<std::ptrdiff_t>(q) + 1);
    table.set(p + q, p + 2 * q, dim - outgoing - incoming);
  }
  return table;
}

}  // namespace

HodgeTable hodge_table(const Dga& dga, Exec exec) {
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (auto [p, q] : bidegrees(dga))
    if (q > 0 && dga.basis_size(p, q) > 0 && dga.basis_size(p + 2, q - 1) > 0)
      work.emplace_back(p, q);

  std::vector<std::size_t> ranks(work.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto [p, q] = work[static_cast<std::size_t>(k)];
    ranks[static_cast<std::size_t>(k)] = rank_rational(differential_matrix(dga, p, q, exec), exec);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> rank_out;
  for (std::size_t k = 0; k < work.size(); ++k) rank_out[work[k]] = ranks[k];
  return assemble(dga, rank_out);
}

HodgeTable hodge_table_serial(const Dga& dga) {
  const std::size_t n = dga.arrangement().dim();
  const std::size_t top_rank = dga.flats().max_rank();
  auto valid = [&](long p, long q) {
    return p >= 0 && q >= 0 && static_cast<std::size_t>(q) <= top_rank &&
           static_cast<std::size_t>(p) <= 2 * (n - static_cast<std::size_t>(q));
  };
  auto rank_from = [&](long p, long q) -> std::size_t {
    if (!valid(p, q) || q == 0 || !valid(p + 2, q - 1)) return 0;
    return rank_rational(differential_matrix(dga, static_cast<std::size_t>(p),
                                             static_cast<std::size_t>(q), Exec::serial),
                         Exec::serial);
  };

  HodgeTable table;
  for (long w = 0; w <= static_cast<long>(2 * n); ++w) {
    // Terms of weight w sit at total degree k with (p, q) = (2k - w, w - k).
    for (long k = 0; k <= w; ++k) {
      const long p = 2 * k - w;
      const long q = w - k;
      if (!valid(p, q)) continue;
      const std::size_t dim = dga.basis_size(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
      const std::size_t cocycles = dim - rank_from(p, q);
      const std::size_t coboundaries = rank_from(p - 2, q + 1);
      table.set(static_cast<std::size_t>(k), static_cast<std::size_t>(w), cocycles - coboundaries);
    }
  }
  return table;
}

}  // namespace ellarr
