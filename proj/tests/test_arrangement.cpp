#include "ellarr/arrangement.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

using namespace ellarr;
using namespace ellarr::testing;

namespace {

IndexSet S(std::initializer_list<std::size_t> one_based) {
  IndexSet s;
  for (std::size_t i : one_based) s = s.with(i - 1);
  return s;
}

ValidationKind rejection(const ArrangementSpec& spec) {
  try {
    (void)Arrangement::validate(spec);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a ValidationError");
  return ValidationKind::TooLarge;
}

ArrangementSpec parallel_pair() {
  return spec_of(1, {divisor({1}), divisor({1}, {Rat(1, 2), 0})});
}

// Poset as comparable data: (indices, rank, mobius) per flat.
std::vector<std::tuple<std::vector<std::size_t>, std::size_t, long>> poset_signature(
    const Arrangement& a, const std::vector<std::size_t>& relabel) {
  std::vector<std::tuple<std::vector<std::size_t>, std::size_t, long>> out;
  for (std::size_t id = 0; id < a.flats().size(); ++id) {
    std::vector<std::size_t> idx;
    for (std::size_t i : a.flats()[id].indices.elements()) idx.push_back(relabel[i]);
    std::sort(idx.begin(), idx.end());
    out.emplace_back(idx, a.flats()[id].rank, a.flats().mobius(id));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validate accepts the three-line arrangement in E^2") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  CHECK(a.dim() == 2);
  CHECK(a.size() == 3);
}

TEST_CASE("validate rejections") {
  SUBCASE("not unimodular, with witness") {
    try {
      (void)Arrangement::validate(spec_of(2, {divisor({1, 0}), divisor({1, 2})}));
      FAIL("expected NotUnimodular");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationKind::NotUnimodular);
      CHECK(e.witness() == S({1, 2}));
      CHECK(e.invariants() == std::vector<Int>{1, 2});
      CHECK(std::string(e.what()).find("1, 2") != std::string::npos);
    }
  }
  SUBCASE("duplicates") {
    CHECK(rejection(spec_of(2, {divisor({1, 0}), divisor({1, 0})})) == ValidationKind::DuplicateDivisor);
    // Same subvariety written with the opposite sign.
    CHECK(rejection(spec_of(1, {divisor({1}, {Rat(1, 3), 0}), divisor({-1}, {Rat(2, 3), 0})})) ==
          ValidationKind::DuplicateDivisor);
    // Translation representatives differing by an integer.
    CHECK(rejection(spec_of(1, {divisor({1}, {Rat(1, 3), 0}), divisor({1}, {Rat(4, 3), 0})})) ==
          ValidationKind::DuplicateDivisor);
  }
  SUBCASE("zero and non-primitive columns") {
    CHECK(rejection(spec_of(2, {divisor({0, 0})})) == ValidationKind::ZeroColumn);
    CHECK(rejection(spec_of(2, {divisor({2, 4})})) == ValidationKind::NonPrimitiveColumn);
  }
  SUBCASE("dimension mismatch") {
    CHECK(rejection(spec_of(2, {divisor({1})})) == ValidationKind::DimensionMismatch);
  }
  SUBCASE("non-unimodular only in a non-maximal position is still caught") {
    // rank 3; basis {(1,0,0),(0,1,0),(1,1,2)} has determinant 2.
    CHECK(rejection(spec_of(3, {divisor({1, 0, 0}), divisor({0, 1, 0}), divisor({0, 0, 1}),
                                divisor({1, 1, 2})})) == ValidationKind::NotUnimodular);
  }
}

TEST_CASE("distinct translations of one subgroup are not duplicates") {
  CHECK_NOTHROW((void)Arrangement::validate(parallel_pair()));
  CHECK_NOTHROW((void)Arrangement::validate(punctured_curve(5)));
}

TEST_CASE("subset_rank") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  CHECK(a.subset_rank({}) == 0);
  CHECK(a.subset_rank(S({1, 3})) == 2);
  CHECK(a.subset_rank(S({1, 2, 3})) == 2);
  CHECK(a.subset_rank(S({2})) == 1);
}

TEST_CASE("is_empty") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  for (std::uint64_t bits = 0; bits < 8; ++bits) CHECK_FALSE(a.is_empty(IndexSet(bits)));
  const Arrangement p = Arrangement::validate(parallel_pair());
  CHECK(p.is_empty(S({1, 2})));
  CHECK_FALSE(p.is_empty(S({1})));
  CHECK_FALSE(p.is_empty({}));
  // Incompatibility in the second real coordinate only.
  const Arrangement y = Arrangement::validate(spec_of(1, {divisor({1}), divisor({1}, {0, Rat(1, 4)})}));
  CHECK(y.is_empty(S({1, 2})));
}

TEST_CASE("closure") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  CHECK(a.closure(S({1, 2})).indices == S({1, 2, 3}));
  CHECK(a.closure(S({1, 2})).rank == 2);
  CHECK(a.closure({}).indices == IndexSet{});
  CHECK(a.closure(S({1})).indices == S({1}));
  const Arrangement p = Arrangement::validate(parallel_pair());
  CHECK_THROWS_AS((void)p.closure(S({1, 2})), EmptyIntersection);
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const Arrangement a = Arrangement::validate(random_unimodular(rng, 12, 3));
    const std::uint64_t top = std::uint64_t{1} << a.size();
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      const IndexSet s(bits);
      if (a.is_empty(s)) continue;
      const Flat f = a.closure(s);
      CHECK(s.subset_of(f.indices));
      CHECK(a.closure(f.indices) == f);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const IndexSet t = s.with(i);
        if (a.is_empty(t)) continue;
        CHECK(f.indices.subset_of(a.closure(t).indices));
      }
    }
  }
}

TEST_CASE("flats of the three-line arrangement") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  const FlatPoset& poset = a.flats();
  REQUIRE(poset.size() == 5);
  CHECK(poset[0].indices == IndexSet{});
  CHECK(poset[1].indices == S({1}));
  CHECK(poset[2].indices == S({2}));
  CHECK(poset[3].indices == S({3}));
  CHECK(poset[4].indices == S({1, 2, 3}));
  CHECK(poset.mobius(0) == 1);
  CHECK(poset.mobius(1) == -1);
  CHECK(poset.mobius(2) == -1);
  CHECK(poset.mobius(3) == -1);
  CHECK(poset.mobius(4) == 2);
}

TEST_CASE("flats: edge cases") {
  CHECK(Arrangement::validate(empty_arrangement(3)).flats().size() == 1);
  const Arrangement p = Arrangement::validate(parallel_pair());
  CHECK(p.flats().size() == 3);
  CHECK(p.flats().max_rank() == 1);
}

TEST_CASE("circuits") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  REQUIRE(a.circuits().size() == 1);
  CHECK(a.circuits()[0].indices == S({1, 2, 3}));
  CHECK(a.circuits()[0].dependency == std::vector<Int>{1, -1, -1});
  CHECK_FALSE(a.circuits()[0].empty_intersection);

  CHECK(Arrangement::validate(spec_of(3, {divisor({1, 0, 0}), divisor({0, 1, 0}), divisor({0, 0, 1})}))
            .circuits()
            .empty());

  const Arrangement p = Arrangement::validate(parallel_pair());
  REQUIRE(p.circuits().size() == 1);
  CHECK(p.circuits()[0].indices == S({1, 2}));
  CHECK(p.circuits()[0].dependency == std::vector<Int>{1, -1});
  CHECK(p.circuits()[0].empty_intersection);
}

TEST_CASE("circuits agree with brute-force subset enumeration") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Arrangement a = Arrangement::validate(random_unimodular(rng, 14, 4));
    std::vector<IndexSet> brute;
    const std::uint64_t top = std::uint64_t{1} << a.size();
    for (std::uint64_t bits = 1; bits < top; ++bits) {
      const IndexSet s(bits);
      if (a.subset_rank(s) + 1 != s.size()) continue;
      bool minimal = true;
      for (std::size_t i : s.elements()) minimal = minimal && a.is_independent(s.without(i));
      if (minimal) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end(), [](IndexSet x, IndexSet y) { return lex_less(x, y); });
    std::vector<IndexSet> found;
    for (const Circuit& c : a.circuits()) {
      found.push_back(c.indices);
      CHECK(c.dependency.size() == c.indices.size());
      CHECK(c.dependency.front() > 0);
      CHECK(gcd_of(c.dependency) == 1);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Int s = 0;
        std::size_t j = 0;
        for (std::size_t i : c.indices.elements()) s += c.dependency[j++] * a.column(i)[k];
        CHECK(s == 0);
      }
      CHECK(c.empty_intersection == a.is_empty(c.indices));
    }
    CHECK(found == brute);
  }
}

TEST_CASE("dependent sets are empty exactly when they contain an empty circuit") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Arrangement a = Arrangement::validate(random_unimodular(rng, 12, 3));
    const std::uint64_t top = std::uint64_t{1} << a.size();
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      const IndexSet s(bits);
      if (a.is_independent(s)) {
        CHECK_FALSE(a.is_empty(s));
        continue;
      }
      bool has_empty_circuit = false;
      for (const Circuit& c : a.circuits())
        has_empty_circuit = has_empty_circuit || (c.empty_intersection && c.indices.subset_of(s));
      CHECK(a.is_empty(s) == has_empty_circuit);
    }
  }
}

TEST_CASE("untranslated arrangements never have empty intersections") {
  std::mt19937 rng(31);
  const Arrangement a = Arrangement::validate(braid(4));
  for (std::uint64_t bits = 0; bits < 64; ++bits) CHECK_FALSE(a.is_empty(IndexSet(bits)));
}

TEST_CASE("nbc_sets") {
  const Arrangement a = Arrangement::validate(three_lines_e2());
  CHECK(a.nbc_sets(a.flats()[4]) == std::vector<IndexSet>{S({1, 2}), S({1, 3})});
  CHECK(a.nbc_sets(a.flats()[2]) == std::vector<IndexSet>{S({2})});
  CHECK(a.nbc_sets(a.flats()[0]) == std::vector<IndexSet>{IndexSet{}});
}

TEST_CASE("|NBC(F)| = |mu(F)| on every flat of random arrangements") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const Arrangement a = Arrangement::validate(random_unimodular(rng, 14, 4));
    const FlatPoset& poset = a.flats();
    for (std::size_t id = 0; id < poset.size(); ++id) {
      CHECK(a.nbc_sets(poset[id]).size() == static_cast<std::size_t>(std::labs(poset.mobius(id))));
      CHECK(poset[id].rank <= std::min(a.dim(), poset[id].indices.size()));
      CHECK(a.closure(poset[id].indices) == poset[id]);
      if (id == 0) continue;
      long sum = 0;
      for (std::size_t g = 0; g < poset.size(); ++g)
        if (poset.leq(g, id)) sum += poset.mobius(g);
      CHECK(sum == 0);
    }
  }
  const Arrangement b4 = Arrangement::validate(braid(4));
  // Conf(E,4): flats are set partitions of {1,..,4}; top flat has mu = -(3!) .
  CHECK(b4.flats().size() == 15);
  CHECK(b4.flats().mobius(b4.flats().size() - 1) == -6);
}

TEST_CASE("flat poset is invariant under permutations and GL_n(Z)") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const ArrangementSpec spec = random_unimodular(rng, 12, 3);
    const Arrangement a = Arrangement::validate(spec);
    std::vector<std::size_t> identity(spec.divisors.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;

    const Arrangement g = Arrangement::validate(transform(spec, random_gl(spec.n, rng)));
    CHECK(poset_signature(a, identity) == poset_signature(g, identity));

    std::vector<std::size_t> perm = identity;
    std::shuffle(perm.begin(), perm.end(), rng);
    ArrangementSpec shuffled = spec;
    std::vector<std::size_t> back(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      shuffled.divisors[k] = spec.divisors[perm[k]];
      back[k] = perm[k];
    }
    const Arrangement s = Arrangement::validate(shuffled);
    CHECK(poset_signature(a, identity) == poset_signature(s, back));
  }
}
