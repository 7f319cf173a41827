#include "ellarr/dga.hpp"

#include <algorithm>
#include <sstream>

namespace ellarr {

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  ExteriorForm out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.intersects(mb)) continue;
      Rat c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      Rat& slot = out[ma | mb];
      slot += c;
      if (slot == 0) out.erase(ma | mb);
    }
  return out;
}

ExteriorForm pullback(const IntVector& alpha, bool y_part) {
  ExteriorForm out;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0) out[IndexSet::of({2 * k + (y_part ? 1 : 0)})] = Rat(alpha[k]);
  return out;
}

ExteriorForm FlatCohomology::reduce(const ExteriorForm& form) const {
  ExteriorForm out;
  for (const auto& [mono, coeff] : form) {
    if (mono.subset_of(quotient)) {
      Rat& slot = out[mono];
      slot += coeff;
      if (slot == 0) out.erase(mono);
      continue;
    }
    ExteriorForm expanded{{IndexSet{}, coeff}};
    for (std::size_t g : mono.elements()) {
      expanded = wedge(expanded, substitution[g]);
      if (expanded.empty()) break;
    }
    for (const auto& [m, c] : expanded) {
      Rat& slot = out[m];
      slot += c;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

FlatCohomology flat_quotient(const Arrangement& arr, std::size_t flat) {
  const Flat& f = arr.flats()[flat];
  const std::size_t gens = 2 * arr.dim();
  FlatCohomology fc;
  fc.flat = flat;
  fc.relations = RatMatrix(2 * f.indices.size(), gens);
  std::size_t r = 0;
  for (std::size_t i : f.indices.elements()) {
    const IntVector& a = arr.column(i);
    for (std::size_t k = 0; k < arr.dim(); ++k) {
      fc.relations(r, 2 * k) = a[k];
      fc.relations(r + 1, 2 * k + 1) = a[k];
    }
    r += 2;
  }
  const std::vector<std::size_t> pivots = reduce_row_echelon(fc.relations);
  for (std::size_t p : pivots) fc.pivots = fc.pivots.with(p);
  fc.quotient = IndexSet::range(gens) - fc.pivots;

  fc.substitution.assign(gens, {});
  for (std::size_t g : fc.quotient.elements()) fc.substitution[g][IndexSet::of({g})] = 1;
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    ExteriorForm& image = fc.substitution[pivots[row]];
    for (std::size_t g : fc.quotient.elements())
      if (fc.relations(row, g) != 0) image[IndexSet::of({g})] = -fc.relations(row, g);
  }
  return fc;
}

Rat DgaElement::coefficient(const BasisElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void DgaElement::add(const BasisElement& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

DgaElement& DgaElement::operator+=(const DgaElement& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

DgaElement& DgaElement::operator-=(const DgaElement& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

DgaElement& DgaElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Dga::Dga(Arrangement arrangement) : arr_(std::move(arrangement)) {
  const FlatPoset& poset = arr_.flats();
  for (std::size_t id = 0; id < poset.size(); ++id) {
    quotients_.push_back(ellarr::flat_quotient(arr_, id));
    nbc_.push_back(arr_.nbc_sets(poset[id]));
    std::vector<IndexSet> broken = arr_.broken_circuits(poset[id].indices);
    std::sort(broken.begin(), broken.end(), [](IndexSet a, IndexSet b) { return lex_less(a, b); });
    broken_.push_back(std::move(broken));
  }
  for (std::size_t i = 0; i < arr_.size(); ++i)
    classes_.push_back(wedge(pullback(arr_.column(i), false), pullback(arr_.column(i), true)));
}

std::size_t Dga::flat_of(IndexSet independent) const {
  return arr_.flat_of_independent(independent);
}

std::vector<BasisElement> Dga::basis(std::size_t p, std::size_t q) const {
  std::vector<BasisElement> out;
  const FlatPoset& poset = flats();
  for (std::size_t id = 0; id < poset.size(); ++id) {
    if (poset[id].rank != q) continue;
    for (IndexSet s : nbc_[id])
      for_each_subset(quotients_[id].quotient, p, [&](IndexSet m) {
        out.push_back({id, s, m});
        return true;
      });
  }
  return out;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::size_t Dga::basis_size(std::size_t p, std::size_t q) const {
  std::size_t total = 0;
  const FlatPoset& poset = flats();
  for (std::size_t id = 0; id < poset.size(); ++id)
    if (poset[id].rank == q) total += binomial(2 * (arr_.dim() - q), p) * nbc_[id].size();
  return total;
}

// Rewrites g_T using (dg)_C = 0 for the circuit C = B + {min C} of the
// lexicographically smallest broken circuit B inside T. Every new index set
// swaps an element of B for min C, which is smaller, so the rewriting
// descends lexicographically and terminates.
Dga::GTerms Dga::straighten_terms(IndexSet t, const std::vector<IndexSet>& broken,
                                  std::map<IndexSet, GTerms>& memo) const {
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  auto hit = std::find_if(broken.begin(), broken.end(), [&](IndexSet b) { return b.subset_of(t); });
  if (hit == broken.end()) {
    GTerms self{{t, Rat(1)}};
    memo.emplace(t, self);
    return self;
  }
  const IndexSet b = *hit;
  IndexSet circuit;
  for (const Circuit& c : arr_.circuits())
    if (c.indices.without(c.indices.min()) == b && c.indices.subset_of(arr_.flats()[flat_of(t)].indices)) {
      circuit = c.indices;
      break;
    }
  const IndexSet rest = t - b;
  const int sign_t = merge_sign(rest, b);  // g_T = sign_t * g_rest * g_B
  // g_B = -sum_{j >= 2} (-1)^{j-1} g_{C - c_j}
  GTerms out;
  const std::vector<std::size_t> elems = circuit.elements();
  for (std::size_t j = 1; j < elems.size(); ++j) {
    const IndexSet face = circuit.without(elems[j]);
    const IndexSet next = rest | face;
    if (!arr_.is_independent(next)) continue;
    int sign = sign_t * merge_sign(rest, face) * (j % 2 == 1 ? 1 : -1);
    for (const auto& [s, c] : straighten_terms(next, broken, memo)) {
      Rat& slot = out[s];
      slot += sign > 0 ? c : Rat(-c);
      if (slot == 0) out.erase(s);
    }
  }
  memo.emplace(t, out);
  return out;
}

DgaElement Dga::straighten(IndexSet t) const {
  if (arr_.is_empty(t))
    throw DgaError(DgaErrorKind::EmptyIntersection, "straighten: divisors " + to_label(t) + " do not meet");
  if (!arr_.is_independent(t))
    throw DgaError(DgaErrorKind::DependentInput, "straighten: divisors " + to_label(t) + " are dependent");
  return normal_form({{IndexSet{}, Rat(1)}}, t);
}

DgaElement Dga::normal_form(const ExteriorForm& form, IndexSet s) const {
  // Independent sets always meet in a unimodular arrangement, so the rank
  // test also covers emptiness.
  if (!arr_.is_independent(s)) return {};
  const std::size_t id = flat_of(s);
  const ExteriorForm reduced = quotients_[id].reduce(form);
  if (reduced.empty()) return {};
  std::map<IndexSet, GTerms> memo;
  const GTerms gs = straighten_terms(s, broken_[id], memo);
  DgaElement out;
  for (const auto& [nbc, cg] : gs)
    for (const auto& [mono, cm] : reduced) out.add({id, nbc, mono}, cg * cm);
  return out;
}

DgaElement Dga::multiply(const DgaElement& u, const DgaElement& v) const {
  DgaElement out;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      if (a.nbc.intersects(b.nbc) || a.monomial.intersects(b.monomial)) continue;
      const IndexSet s = a.nbc | b.nbc;
      if (!arr_.is_independent(s)) continue;
      // m1 g_S1 m2 g_S2 = (-1)^{|S1||m2|} m1 m2 g_S1 g_S2
      int sign = merge_sign(a.monomial, b.monomial) * merge_sign(a.nbc, b.nbc);
      if ((a.q() * b.p()) % 2 == 1) sign = -sign;
      Rat c = ca * cb;
      if (sign < 0) c = -c;
      out += normal_form({{a.monomial | b.monomial, c}}, s);
    }
  return out;
}

DgaElement Dga::divisor_class(std::size_t i) const { return normal_form(classes_[i], {}); }

DgaElement Dga::differential_of(const ExteriorForm& form, IndexSet s) const {
  DgaElement out;
  const std::vector<std::size_t> elems = s.elements();
  for (const auto& [mono, coeff] : form) {
    const ExteriorForm single{{mono, coeff}};
    for (std::size_t j = 0; j < elems.size(); ++j) {
      // d(m g_S) = (-1)^{|m|} sum_j (-1)^{j} m [Y_{i_j}] g_{S - i_j}   (0-based j)
      Rat sign = ((mono.size() + j) % 2 == 0) ? 1 : -1;
      ExteriorForm term = wedge(single, classes_[elems[j]]);
      for (auto& [m, c] : term) c *= sign;
      out += normal_form(term, s.without(elems[j]));
    }
  }
  return out;
}

DgaElement Dga::differential(const DgaElement& u) const {
  DgaElement out;
  for (const auto& [e, c] : u.terms()) {
    if (e.nbc.empty()) continue;
    out += differential_of({{e.monomial, c}}, e.nbc);
  }
  return out;
}

DgaElement Dga::one() const { return DgaElement(BasisElement{flats().bottom(), {}, {}}); }

DgaElement Dga::h1_generator(std::size_t index) const {
  return DgaElement(BasisElement{flats().bottom(), {}, IndexSet::of({index})});
}

std::string Dga::render(const DgaElement& u) const {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : u.terms()) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t g : e.monomial.elements())
      factors.push_back((g % 2 == 0 ? "x" : "y") + std::to_string(g / 2 + 1));
    for (std::size_t i : e.nbc.elements()) factors.push_back("g" + std::to_string(i + 1));
    if (factors.empty() || mag != 1) {
      os << mag.get_str();
      if (!factors.empty()) os << "*";
    }
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

}  // namespace ellarr
