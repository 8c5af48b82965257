#include <filesystem>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "zgen/analysis.hpp"
#include "zgen/extremal.hpp"

using namespace zgen;

namespace {

// Minimal elements, among nondecreasing vectors with entries <= cap, of
// those whose reciprocal sum is below n/t.
std::set<NatVec> frontier_oracle(std::size_t n, const Rational& t, Entry cap) {
  std::vector<NatVec> all;
  NatVec x(n);
  auto rec = [&](auto&& self, std::size_t i, Entry lo) -> void {
    if (i == n) {
      Rational s(0);
      for (Entry v : x) s += Rational(1, static_cast<long long>(v));
      if (s < Rational(static_cast<long long>(n)) / t) all.push_back(x);
      return;
    }
    for (Entry v = lo; v <= cap; ++v) {
      x[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 1);
  std::set<NatVec> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all) {
      if (b != a && dominates(a, b)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(a);
  }
  return out;
}

std::set<NatVec> as_set(const std::vector<NatVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("s_inf for n <= 4 with certificates") {
  const Entry expect[] = {0, 1, 2, 3, 5};
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const SInfResult r = s_inf(n);
    CHECK(r.exact);
    CHECK(r.value == expect[n]);
    REQUIRE(r.lower_cert.has_value());
    REQUIRE(r.upper_cert.has_value());
    CHECK(r.lower_cert->hbar == r.value);
    CHECK(r.upper_cert->hbar == r.value + 1);
    CHECK(verify_nongen_invariant(*r.lower_cert).ok);
    CHECK(verify_const_witness(*r.upper_cert).ok);
  }
}

TEST_CASE("s_inf falls back to a bracket when the budget runs out") {
  Budget b;
  b.max_tuples = 1000;
  const SInfResult r = s_inf(5, b);
  CHECK_FALSE(r.exact);
  CHECK(r.resource == "tuples");
  CHECK(r.upper == 15);
  CHECK(r.lower < r.upper);
  REQUIRE(r.upper_cert.has_value());
  CHECK(verify_const_witness(*r.upper_cert).ok);
}

TEST_CASE("frontier against the enumeration oracle") {
  CHECK(minimal_frontier(3, Rational(3)).minimal == std::vector<NatVec>{{2, 3, 7}, {2, 4, 5}, {3, 3, 4}});
  CHECK(minimal_frontier(2, Rational(2)).minimal == std::vector<NatVec>{{2, 3}});
  CHECK(minimal_frontier(1, Rational(1)).minimal == std::vector<NatVec>{{2}});
  struct Case {
    std::size_t n;
    Rational t;
    Entry cap;
  };
  const Case cases[] = {{2, Rational(2), 40}, {2, Rational(5, 2), 40}, {3, Rational(3), 60}, {3, Rational(7, 2), 60},
                        {3, Rational(4), 60}, {4, Rational(5), 24}, {4, Rational(9, 2), 24}};
  for (const Case& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.t.str());
    std::set<NatVec> got;
    for (const auto& v : minimal_frontier(c.n, c.t).minimal) {
      if (v.norm() <= c.cap) got.insert(v);
    }
    CHECK(got == frontier_oracle(c.n, c.t, c.cap));
  }
  for (const auto& v : minimal_frontier(4, Rational(5)).minimal) CHECK(harmonic_mean(v) > Rational(5));
  CHECK_THROWS_AS(minimal_frontier(5, Rational(450, 49)), FrontierOverflow);
  CHECK_THROWS_AS(minimal_frontier(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("net for n = 3") {
  const VerifyReport r = verify_net({3, Rational(3), {{2, 3, 7}, {2, 4, 5}, {3, 3, 4}}});
  CHECK(r.ok);
  CHECK(r.statement == "s_{-1}(3) <= 3");
  // Dropping one member leaves a frontier element uncovered.
  CHECK_FALSE(verify_net({3, Rational(3), {{2, 3, 7}, {2, 4, 5}}}).ok);
  // (2,3,6) is not 0-generating, so it cannot be in a net.
  const VerifyReport bad = verify_net({3, Rational(3), {{2, 3, 6}, {2, 4, 5}, {3, 3, 4}}});
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_rows() == std::vector<std::size_t>{0});
}

TEST_CASE("the printed n = 4 net misses six frontier elements; the curated net covers them") {
  const VerifyReport printed = verify_net({4, Rational(5), printed_net_a4()});
  CHECK_FALSE(printed.ok);
  CHECK(printed.failing_rows().empty());
  CHECK(printed.problems.size() == 6);
  const VerifyReport curated = verify_net({4, Rational(5), curated_net(4)});
  CHECK(curated.ok);
  CHECK(curated_net(4).size() == 18);
}

TEST_CASE("suggested nets verify") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Rational t(static_cast<long long>(n));
    const auto net = suggest_net(n, t);
    CHECK(verify_net({n, t, net}).ok);
  }
}

TEST_CASE("net files round trip") {
  const auto p = std::filesystem::temp_directory_path() / "zgen_net_roundtrip.json";
  const HarmonicNet net{3, Rational(3), {{2, 3, 7}, {2, 4, 5}, {3, 3, 4}}};
  save_net(net, p);
  const HarmonicNet back = load_net(p);
  CHECK(back.n == 3);
  CHECK(back.t == Rational(3));
  CHECK(back.net == net.net);
  const HarmonicNet shipped = load_net("data/nets/a4.json");
  CHECK(as_set(shipped.net) == as_set(curated_net(4)));
  CHECK(as_set(load_net("data/nets/a4_printed.json").net) == as_set(printed_net_a4()));
  CHECK_THROWS(load_net(std::filesystem::temp_directory_path() / "zgen_no_such_net.json"));
}

TEST_CASE("s_{-1} lower bounds and defects") {
  CHECK(s1_lower_bound(NatVec{5, 5, 5, 5}) == Rational(5));
  CHECK(s1_lower_bound(NatVec{2, 3, 6}) == Rational(3));
  CHECK_THROWS_AS(s1_lower_bound(NatVec{2, 3, 7}), std::domain_error);
  CHECK_THROWS_AS(s1_lower_bound(NatVec{0, 3}), std::domain_error);
  CHECK(defect_bound(5, Rational(450, 49)).bound == Rational(41, 90));
  CHECK(defect_bound(4, Rational(5)).bound == Rational(1, 5));
  CHECK(defect_bound(3, Rational(3)).bound == Rational(0));
  CHECK_THROWS_AS(defect_bound(5, Rational(4)), std::invalid_argument);
}

TEST_CASE("table 1 integer rows match the reference and factorials are true factorials") {
  TableOptions o;
  o.compute_sinf_up_to = 4;
  o.check_s1_witness_up_to = 4;
  const auto rows = table1(9, o);
  const auto& ref = reference_table();
  REQUIRE(rows.size() == 9);
  BigInt fact = 1;
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& r = rows[i];
    CAPTURE(r.n);
    fact *= r.n;
    CHECK(r.varphi.str() == ref[i].varphi);
    CHECK(r.one_plus_floor_phi.str() == ref[i].one_plus_floor_phi);
    CHECK(r.varphi_next.str() == ref[i].varphi_next);
    CHECK(r.factorial == fact);
    CHECK((r.factorial.str() != ref[i].factorial) == (r.n >= 7));
    if (r.n <= 4) {
      CHECK(r.s_inf_text == ref[i].s_inf);
      CHECK(r.s1_exact);
      CHECK(r.s1_text == ref[i].s1);
    } else {
      CHECK(r.s_inf.lower <= r.s_inf.upper);
    }
  }
}

TEST_CASE("table 2 defects from supplied s_{-1} inputs") {
  TableOptions o;
  o.compute_sinf_up_to = 4;
  o.check_s1_witness_up_to = 4;
  o.s1_supplied = {{5, Rational(450, 49)}, {6, Rational(19)}, {7, Rational(42)}, {8, Rational(122)}};
  const auto rows = table2(8, o);
  const char* expect[] = {"0", "0", "0", "1/5", "41/90", "13/19", "5/6", "57/61"};
  for (std::size_t i = 0; i < 8; ++i) {
    CAPTURE(i + 1);
    CHECK(rows[i].defect.str() == expect[i]);
    CHECK(rows[i].s1_supplied == (i + 1 >= 5 && i + 1 <= 6));
  }
}

TEST_CASE("discrepancy list covers the factorial row") {
  int factorial_entries = 0;
  for (const auto& d : known_discrepancies()) {
    if (d.where.rfind("Table 1, n!", 0) == 0) ++factorial_entries;
  }
  CHECK(factorial_entries == 3);
  CHECK(s1_witness_vector(5) == NatVec{9, 9, 9, 9, 10});
  CHECK_FALSE(s1_witness_vector(4).has_value());
}
