#include "ellarr/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace ellarr::oracle {

namespace {

struct Layout {
  std::size_t n;
  std::size_t l;
  std::size_t h() const { return 2 * n; }
  IndexSet h_mask() const { return IndexSet::range(h()); }
  IndexSet g_mask() const { return IndexSet::range(h() + l) - h_mask(); }
  std::size_t g(std::size_t i) const { return h() + i; }
  std::pair<std::size_t, std::size_t> bidegree(IndexSet m) const {
    return {(m & h_mask()).size(), (m & g_mask()).size()};
  }
};

void accumulate(FreeElement& into, IndexSet m, const Rat& c) {
  if (c == 0) return;
  Rat& slot = into[m];
  slot += c;
  if (slot == 0) into.erase(m);
}

FreeElement product(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.intersects(mb)) continue;
      accumulate(out, ma | mb, merge_sign(ma, mb) > 0 ? Rat(ca * cb) : Rat(-ca * cb));
    }
  return out;
}

FreeElement monomial(IndexSet m, const Rat& c = 1) { return {{m, c}}; }

IntMatrix rows_of(const ArrangementSpec& spec, IndexSet s) {
  IntMatrix m(s.size(), spec.n);
  std::size_t r = 0;
  for (std::size_t i : s.elements()) {
    for (std::size_t k = 0; k < spec.n; ++k) m(r, k) = spec.divisors[i].coeffs[k];
    ++r;
  }
  return m;
}

std::size_t rank_of(const ArrangementSpec& spec, IndexSet s) {
  return s.empty() ? 0 : rank_rational(rows_of(spec, s));
}

bool meets(const ArrangementSpec& spec, IndexSet s) {
  if (s.empty()) return true;
  const IntMatrix m = rows_of(spec, s);
  for (std::size_t c = 0; c < 2; ++c) {
    RatVector b;
    for (std::size_t i : s.elements()) b.push_back(spec.divisors[i].translation[c]);
    if (!solvable_mod_one(m, b)) return false;
  }
  return true;
}

FreeElement boundary(const Layout& lay, IndexSet s) {
  FreeElement out;
  const std::vector<std::size_t> elems = s.elements();
  for (std::size_t j = 0; j < elems.size(); ++j) {
    IndexSet m;
    for (std::size_t i : s.without(elems[j]).elements()) m = m.with(lay.g(i));
    accumulate(out, m, j % 2 == 0 ? Rat(1) : Rat(-1));
  }
  return out;
}

IndexSet g_monomial(const Layout& lay, IndexSet s) {
  IndexSet m;
  for (std::size_t i : s.elements()) m = m.with(lay.g(i));
  return m;
}

FreeElement linear_pullback(const ArrangementSpec& spec, std::size_t i, std::size_t offset) {
  FreeElement out;
  for (std::size_t k = 0; k < spec.n; ++k)
    accumulate(out, IndexSet::of({2 * k + offset}), Rat(spec.divisors[i].coeffs[k]));
  return out;
}

// d on B: d(g_i) = alpha_i^*(x) alpha_i^*(y), d = 0 on H^1, extended as a
// derivation of degree one over the ordered generator product.
FreeElement free_differential(const ArrangementSpec& spec, const Layout& lay, const FreeElement& e) {
  FreeElement out;
  for (const auto& [m, c] : e) {
    const std::vector<std::size_t> gens = m.elements();
    for (std::size_t t = 0; t < gens.size(); ++t) {
      if (gens[t] < lay.h()) continue;
      const std::size_t i = gens[t] - lay.h();
      IndexSet prefix, suffix;
      for (std::size_t s = 0; s < t; ++s) prefix = prefix.with(gens[s]);
      for (std::size_t s = t + 1; s < gens.size(); ++s) suffix = suffix.with(gens[s]);
      const FreeElement cls = product(linear_pullback(spec, i, 0), linear_pullback(spec, i, 1));
      FreeElement piece = product(product(monomial(prefix, t % 2 == 0 ? c : Rat(-c)), cls), monomial(suffix));
      for (const auto& [pm, pc] : piece) accumulate(out, pm, pc);
    }
  }
  return out;
}

using SparseRow = std::map<std::size_t, Rat>;

// Row echelon basis of a subspace; each row is keyed by its leading column.
class Echelon {
 public:
  void reduce(SparseRow& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = rows_.find(it->first);
      if (pivot == rows_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Rat f = it->second / pivot->second.begin()->second;
      for (const auto& [c, x] : pivot->second) {
        Rat& slot = v[c];
        slot -= f * x;
        if (slot == 0) v.erase(c);
      }
      it = v.upper_bound(col);
    }
  }

  bool insert(SparseRow v) {
    reduce(v);
    if (v.empty()) return false;
    const std::size_t lead = v.begin()->first;
    rows_.emplace(lead, std::move(v));
    return true;
  }

  bool is_pivot(std::size_t col) const { return rows_.contains(col); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, SparseRow> rows_;
};

struct Graded {
  std::vector<IndexSet> monomials;
  std::map<IndexSet, std::size_t> column;
  Echelon ideal;
  std::vector<std::size_t> quotient;  // non-pivot columns
};

SparseRow to_row(const Graded& g, const FreeElement& e) {
  SparseRow row;
  for (const auto& [m, c] : e) row.emplace(g.column.at(m), c);
  return row;
}

}  // namespace

std::vector<FreeElement> ideal_generators(const ArrangementSpec& spec, bool exhaustive) {
  const Layout lay{spec.n, spec.divisors.size()};
  std::vector<FreeElement> out;
  const IndexSet all = IndexSet::range(lay.l);
  for (std::size_t k = 1; k <= lay.l; ++k) {
    for_each_subset(all, k, [&](IndexSet s) {
      const std::size_t r = rank_of(spec, s);
      if (r == s.size()) return true;
      bool circuit = r + 1 == s.size();
      for (std::size_t i : s.elements())
        if (circuit && rank_of(spec, s.without(i)) != r) circuit = false;
      if (!circuit && !exhaustive) return true;
      if (meets(spec, s)) {
        out.push_back(boundary(lay, s));
      } else {
        out.push_back(monomial(g_monomial(lay, s)));
      }
      return true;
    });
  }
  for (std::size_t i = 0; i < lay.l; ++i)
    for (std::size_t offset = 0; offset < 2; ++offset)
      out.push_back(product(linear_pullback(spec, i, offset), monomial(IndexSet::of({lay.g(i)}))));
  return out;
}

Report run(const ArrangementSpec& spec, const Options& options) {
  const Layout lay{spec.n, spec.divisors.size()};
  if (lay.h() + lay.l > options.max_generators) {
    throw TooLarge("oracle: 2n + l = " + std::to_string(lay.h() + lay.l) + " exceeds the bound " +
                   std::to_string(options.max_generators));
  }
  const std::vector<FreeElement> gens = ideal_generators(spec, options.exhaustive);

  std::map<std::pair<std::size_t, std::size_t>, Graded> parts;
  for (std::size_t q = 0; q <= lay.l; ++q)
    for (std::size_t p = 0; p <= lay.h(); ++p) {
      Graded& g = parts[{p, q}];
      for_each_subset(lay.h_mask(), p, [&](IndexSet hm) {
        for_each_subset(lay.g_mask(), q, [&](IndexSet gm) {
          g.column.emplace(hm | gm, g.monomials.size());
          g.monomials.push_back(hm | gm);
          return true;
        });
        return true;
      });
    }

  // I^{p,q} is spanned by monomial multiples of the homogeneous generators.
  for (const FreeElement& r : gens) {
    const auto [a, b] = lay.bidegree(r.begin()->first);
    for (auto& [key, g] : parts) {
      const auto [p, q] = key;
      if (p < a || q < b) continue;
      const std::size_t mp = p - a, mq = q - b;
      for (const IndexSet m : parts.at({mp, mq}).monomials) {
        const FreeElement v = product(monomial(m), r);
        if (!v.empty()) g.ideal.insert(to_row(g, v));
      }
    }
  }

  Report report;
  for (auto& [key, g] : parts) {
    for (std::size_t c = 0; c < g.monomials.size(); ++c)
      if (!g.ideal.is_pivot(c)) g.quotient.push_back(c);
    if (!g.quotient.empty()) report.quotient_dims[key] = g.quotient.size();
  }

  for (const FreeElement& r : gens) {
    const FreeElement dr = free_differential(spec, lay, r);
    if (dr.empty()) continue;
    const Graded& target = parts.at(lay.bidegree(dr.begin()->first));
    SparseRow row = to_row(target, dr);
    target.ideal.reduce(row);
    if (!row.empty()) report.ideal_is_closed = false;
  }

  // Induced differential (p, q) -> (p + 2, q - 1) on quotient coordinates.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> rank_out;
  for (const auto& [key, g] : parts) {
    const auto [p, q] = key;
    if (q == 0 || p + 2 > lay.h() || g.quotient.empty()) continue;
    const Graded& target = parts.at({p + 2, q - 1});
    if (target.quotient.empty()) continue;
    std::map<std::size_t, std::size_t> coord;
    for (std::size_t k = 0; k < target.quotient.size(); ++k) coord[target.quotient[k]] = k;
    RatMatrix m(target.quotient.size(), g.quotient.size());
    for (std::size_t c = 0; c < g.quotient.size(); ++c) {
      const FreeElement dm = free_differential(spec, lay, monomial(g.monomials[g.quotient[c]]));
      SparseRow row = to_row(target, dm);
      target.ideal.reduce(row);
      for (const auto& [col, x] : row) m(coord.at(col), c) = x;
    }
    rank_out[key] = rank_rational(m);
  }

  auto rank_at = [&](long p, long q) -> std::size_t {
    if (p < 0 || q < 0) return 0;
    auto it = rank_out.find({static_cast<std::size_t>(p), static_cast<std::size_t>(q)});
    return it == rank_out.end() ? 0 : it->second;
  };
  for (const auto& [key, dim] : report.quotient_dims) {
    const auto [p, q] = key;
    const long lp = static_cast<long>(p), lq = static_cast<long>(q);
    report.table.set(p + q, p + 2 * q, dim - rank_at(lp, lq) - rank_at(lp - 2, lq + 1));
  }
  return report;
}

HodgeTable oracle_hodge_table(const ArrangementSpec& spec, const Options& options) {
  Report report = run(spec, options);
  if (!report.ideal_is_closed) throw std::logic_error("oracle: d(I) is not contained in I");
  return report.table;
}

std::string render(const FreeElement& e, std::size_t n) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rat mag = abs(c);
    std::vector<std::string> f;
    for (std::size_t g : m.elements()) {
      if (g < 2 * n) {
        f.push_back((g % 2 == 0 ? "x" : "y") + std::to_string(g / 2 + 1));
      } else {
        f.push_back("g" + std::to_string(g - 2 * n + 1));
      }
    }
    if (f.empty() || mag != 1) os << mag.get_str() << (f.empty() ? "" : "*");
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? "*" : "") << f[k];
  }
  return os.str();
}

}  // namespace ellarr::oracle
