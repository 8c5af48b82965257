#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "zgen/nvec.hpp"
#include "zgen/rational.hpp"

using namespace zgen;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("9 9/49") == Rational(450, 49));
  CHECK(Rational::parse(" 41/90 ") == Rational(41, 90));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(450, 49).mixed_str() == "9 9/49");
  CHECK(Rational(450, 49).str() == "450/49");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic matches cross-multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (b == 0 || e == 0) continue;
    Rational x(a, b), y(c, e);
    CHECK(x + y == Rational(a * e + c * b, b * e));
    CHECK(x * y == Rational(a * c, b * e));
    CHECK((x < y) == (static_cast<long double>(a) / b < static_cast<long double>(c) / e));
    CHECK(Rational::parse(x.str()) == x);
    if (x >= Rational(0)) CHECK(Rational::parse(x.mixed_str()) == x);
  }
}

TEST_CASE("vector literals") {
  CHECK(parse_vec("2,3,7") == NatVec{2, 3, 7});
  CHECK(parse_vec("(2, 3, 7)") == NatVec{2, 3, 7});
  CHECK(parse_vec("5") == NatVec{5});
  for (const char* bad : {"", "()", "2,,3", "2,3,", "(2,3", "2,3)", "a", "2;3", "-1,2", "(2)(3)", "99999999999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_vec(bad), std::invalid_argument);
  }
  CHECK(to_string(NatVec{2, 3, 7}) == "(2,3,7)");
}

TEST_CASE("unit vectors, indicators and order") {
  CHECK(unit_vector(3, 1) == NatVec{0, 1, 0});
  CHECK(indicator(4, {0, 2}) == NatVec{1, 0, 1, 0});
  CHECK(indicator_tail(4, 1) == NatVec{0, 1, 1, 1});
  CHECK_THROWS_AS(unit_vector(3, 3), std::out_of_range);
  CHECK(strictly_below(NatVec{1, 2}, NatVec{2, 3}));
  CHECK_FALSE(strictly_below(NatVec{2, 2}, NatVec{2, 3}));
  CHECK(dominates(NatVec{2, 3}, NatVec{2, 3}));
  CHECK_FALSE(dominates(NatVec{3, 2}, NatVec{2, 3}));
  CHECK(dominates_up_to_perm(NatVec{3, 2}, NatVec{2, 3}));
  CHECK(shift_S(NatVec{1, 2, 3}) == NatVec{0, 1, 2});
  CHECK(zero_last(NatVec{4, 5, 2}) == NatVec{4, 5, 0});
  CHECK(permute(NatVec{5, 6, 7}, cyclic_perm(3)) == NatVec{7, 5, 6});
}

TEST_CASE("perm_between and distinct_permutations agree with brute force") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    NatVec f = oracle::random_vec(rng, n, 0, 2);
    std::set<oracle::Vec> brute;
    for (const auto& p : oracle::all_permutations(oracle::to_vec(f))) brute.insert(p);
    auto perms = distinct_permutations(f);
    REQUIRE(perms.size() == brute.size());
    for (const auto& g : perms) {
      CHECK(brute.count(oracle::to_vec(g)) == 1);
      auto p = perm_between(f, g);
      REQUIRE(p.has_value());
      CHECK(permute(f, *p) == g);
    }
    NatVec other = f;
    other[0] += 1;
    CHECK_FALSE(perm_between(f, other).has_value());
  }
}

TEST_CASE("minkowski sums, orbit closure and antichains against brute force") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<NatVec> a, b;
    for (int i = 0; i < 5; ++i) a.push_back(oracle::random_vec(rng, n, 0, 3));
    for (int i = 0; i < 4; ++i) b.push_back(oracle::random_vec(rng, n, 0, 3));
    NatVec cap = oracle::random_vec(rng, n, 2, 6);

    std::set<oracle::Vec> sum, capped;
    for (const auto& x : a) {
      for (const auto& y : b) {
        oracle::Vec s = oracle::to_vec(x + y);
        sum.insert(s);
        bool in = true;
        for (std::size_t i = 0; i < n; ++i) in = in && s[i] < cap[i];
        if (in) capped.insert(s);
      }
    }
    auto as_set = [](const VecSet& s) {
      std::set<oracle::Vec> out;
      for (const auto& v : s.elements()) out.insert(oracle::to_vec(v));
      return out;
    };
    const VecSet A = VecSet::of(n, a), B = VecSet::of(n, b);
    CHECK(as_set(minkowski_sum(A, B)) == sum);
    CHECK(as_set(minkowski_sum(A, B, cap)) == capped);
    // Boxed storage gives the same set.
    VecSet boxed(n, NatVec(std::vector<Entry>(n, 7)));
    for (const auto& x : a) boxed.insert(x);
    CHECK(as_set(minkowski_sum(boxed, B)) == sum);

    std::set<oracle::Vec> two;
    for (const auto& x : a) {
      for (const auto& y : a) two.insert(oracle::to_vec(x + y));
    }
    CHECK(as_set(k_fold_sum(A, 2)) == two);
    CHECK(as_set(k_fold_sum(A, 0)) == std::set<oracle::Vec>{oracle::Vec(n, 0)});

    std::set<oracle::Vec> orbit;
    for (const auto& x : a) {
      for (const auto& p : oracle::all_permutations(oracle::to_vec(x))) orbit.insert(p);
    }
    CHECK(as_set(orbit_closure(A)) == orbit);

    std::set<oracle::Vec> all(sum.begin(), sum.end());
    std::set<oracle::Vec> got;
    for (const auto& v : antichain_min(minkowski_sum(A, B))) got.insert(oracle::to_vec(v));
    CHECK(got == oracle::minimal(all));
    for (const auto& v : sum) {
      CHECK(in_upset(antichain_min(minkowski_sum(A, B)), oracle::to_nat(v)));
    }
  }
}

TEST_CASE("VecSet membership") {
  VecSet s(2, NatVec{3, 3});
  CHECK(s.insert(NatVec{1, 2}));
  CHECK_FALSE(s.insert(NatVec{1, 2}));
  CHECK(s.insert(NatVec{5, 0}));  // outside the box
  CHECK(s.contains(NatVec{5, 0}));
  CHECK_FALSE(s.contains(NatVec{2, 1}));
  CHECK(s.size() == 2);
  CHECK_THROWS_AS(s.insert(NatVec{1}), std::invalid_argument);
}

TEST_CASE("means") {
  const NatVec f{2, 3, 6};
  CHECK(std::get<Rational>(mean(-INFINITY, f)) == Rational(2));
  CHECK(std::get<Rational>(mean(-1, f)) == Rational(3));
  CHECK(std::get<Rational>(mean(1, f)) == Rational(11, 3));
  CHECK(std::get<Rational>(mean(INFINITY, f)) == Rational(6));
  CHECK(harmonic_mean(NatVec{9, 9, 9, 9, 10}) == Rational(450, 49));
  CHECK(std::get<double>(mean(0, NatVec{2, 8})) == doctest::Approx(4.0));
  CHECK_THROWS_AS(harmonic_mean(NatVec{0, 5}), std::domain_error);
  CHECK_THROWS_AS(mean(-1, NatVec{0, 5}), std::domain_error);
  CHECK(std::get<Rational>(mean(-INFINITY, NatVec{0, 5})) == Rational(0));
}

TEST_CASE("mean chain min <= harmonic <= arithmetic <= max") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    NatVec f = oracle::random_vec(rng, 1 + rng() % 8, 1, 1000);
    Rational lo = std::get<Rational>(mean(-INFINITY, f));
    Rational h = std::get<Rational>(mean(-1, f));
    Rational a = std::get<Rational>(mean(1, f));
    Rational hi = std::get<Rational>(mean(INFINITY, f));
    CHECK(lo <= h);
    CHECK(h <= a);
    CHECK(a <= hi);
    // Equalities exactly for constant vectors.
    CHECK((lo == hi) == f.is_constant());
  }
}
