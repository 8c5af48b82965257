// Acceptance gate: one PASS/FAIL line per criterion.
//
// Two sub-checks cannot hold as stated and are reported as FAIL: the printed
// 12-element net for n = 4 leaves six frontier elements uncovered, and the
// printed (lambda^{n-1}-1)/(lambda-1) column of the weight table matches no
// evaluation of that expression. The exit status is nonzero only when some
// criterion fails in any other way, including when one of these two fails
// differently from how it is documented to fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "properties.hpp"
#include "zgen/analysis.hpp"
#include "zgen/certificates.hpp"
#include "zgen/extremal.hpp"

using namespace zgen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream o;
  o.precision(s < 10 ? 2 : 3);
  o << s << " s";
  return o.str();
}

// Collects sub-check results for one criterion.
struct Criterion {
  int id = 0;
  std::string title;
  std::vector<std::string> failures;
  // Failures that match a documented, unattainable sub-check exactly.
  std::vector<std::string> documented;
  std::vector<std::string> notes;
  bool skipped = false;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void documented_failure(const std::string& what) { documented.push_back(what); }
  void note(const std::string& what) { notes.push_back(what); }
  [[nodiscard]] bool pass() const { return failures.empty() && documented.empty(); }
  [[nodiscard]] bool expected() const { return failures.empty(); }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

void report(const Criterion& c, bool gating, std::ostream& out) {
  out << (c.skipped ? "SKIP" : c.pass() ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title;
  std::vector<std::string> parts = c.failures;
  for (const auto& d : c.documented) parts.push_back(d + " [documented, unattainable as stated]");
  if (!parts.empty()) out << " | failed: " << join(parts, "; ");
  if (!c.notes.empty()) out << " | " << join(c.notes, "; ");
  if (!gating) out << " | non-gating";
  out << "\n";
}

Criterion fast_tier() {
  Criterion c{1, "s_inf(n) = 1, 2, 3, 5 for n = 1..4 with both certificates, each under 10 s"};
  const Entry expect[] = {0, 1, 2, 3, 5};
  std::vector<std::string> times;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto t0 = Clock::now();
    const SInfResult r = s_inf(n);
    const bool certs = r.lower_cert && r.upper_cert && verify_nongen_invariant(*r.lower_cert).ok &&
                       verify_const_witness(*r.upper_cert).ok && r.lower_cert->hbar == r.value &&
                       r.upper_cert->hbar == r.value + 1;
    const double s = seconds_since(t0);
    const std::string tag = "n=" + std::to_string(n);
    c.check(r.exact && r.value == expect[n], tag + " value " + std::to_string(r.value));
    c.check(certs, tag + " certificates");
    c.check(s < 10, tag + " took " + secs(s));
    times.push_back(secs(s));
  }
  c.note("times " + join(times, ", "));
  return c;
}

Criterion slow_tier() {
  Criterion c{2, "s_inf(5) = 9 and the n = 5 vector list, within 30 minutes"};
  const auto t0 = Clock::now();
  c.check(decide_const(9, 5).verdict.outcome == Outcome::NotGenerating, "constant 9 at n=5 is not NotGenerating");
  c.check(decide_const(10, 5).verdict.outcome == Outcome::Generating, "constant 10 at n=5 is not Generating");
  c.check(decide_general({9, 9, 9, 9, 10}).verdict.outcome == Outcome::NotGenerating, "(9,9,9,9,10)");
  for (const NatVec& h : {NatVec{8, 8, 8, 8, 23}, NatVec{9, 9, 9, 10, 10}, NatVec{9, 9, 9, 9, 11}, NatVec{8, 9, 9, 9, 12}}) {
    c.check(decide_general(h).verdict.outcome == Outcome::Generating, to_string(h));
  }
  const double s = seconds_since(t0);
  c.check(s < 1800, "took " + secs(s));
  c.note("total " + secs(s));
  return c;
}

Criterion corpus(std::size_t mutations) {
  Criterion c{3, "fixture corpus, listed anomalous rows, regenerated certificates, mutation fuzzing"};
  const auto known = fixtures::discrepancies();
  std::size_t files = 0, total = 0;
  std::set<std::string> seen;
  std::uint64_t seed = 1;
  for (const auto& file : fixtures::certificate_files()) {
    ++files;
    const std::string name = file.filename().string();
    const VerifyReport r = verify(load_cert(file));
    auto it = known.find(name);
    std::vector<std::size_t> rows;
    if (it == known.end()) {
      c.check(r.ok, name + " does not pass");
    } else {
      seen.insert(name);
      rows = it->second.rows;
      c.check(!r.ok && r.failing_rows() == rows, name + " failing rows differ from the list");
      Certificate fresh;
      c.check(fixtures::regenerate(it->second.vector, &fresh).ok, name + " not regenerated");
      c.check(cert_type(fresh) == cert_type(load_cert(file)), name + " regenerated with another type");
    }
    const auto fz = fixtures::mutation_fuzz(file, mutations, seed++, rows);
    total += fz.mutations;
    c.check(fz.rejected == fz.mutations,
            name + ": " + std::to_string(fz.mutations - fz.rejected) + " mutations accepted");
  }
  for (const auto& [name, d] : known) c.check(seen.count(name) == 1, name + " listed but missing");
  c.note(std::to_string(files) + " fixtures, " + std::to_string(known.size()) + " with listed rows, " +
         std::to_string(total) + " mutations rejected");
  return c;
}

Criterion shift_generator() {
  Criterion c{4, "shift construction verifies for n = 1..5 with bound 1 + varphi(n+1)"};
  for (std::size_t n = 1; n <= 5; ++n) {
    const ConstWitnessCert w = generate_shift_witness(n);
    c.check(verify_const_witness(w).ok, "n=" + std::to_string(n) + " does not verify");
    c.check(BigInt(w.hbar) == varphi_int(n + 1).value + 1, "n=" + std::to_string(n) + " bound");
  }
  // s_inf(n) <= varphi(n+1), consistent with the exact values for n = 2, 3.
  c.check(BigInt(2) <= varphi_int(3).value && BigInt(3) <= varphi_int(4).value, "n=2,3 bounds below s_inf");
  return c;
}

Criterion invariants() {
  Criterion c{5, "invariants M_4 (n=4, bound 5) and M_5 (n=5, bound 9) verify, each under 60 s"};
  for (const char* f : {"m4_invariant.json", "m5_invariant.json"}) {
    const auto t0 = Clock::now();
    const VerifyReport r = verify(load_cert(fixtures::kDir / f));
    const double s = seconds_since(t0);
    c.check(r.ok, std::string(f) + " does not verify");
    c.check(s < 60, std::string(f) + " took " + secs(s));
    c.note(std::string(f) + " " + secs(s));
  }
  return c;
}

Criterion nets() {
  Criterion c{6, "A_3 frontier, nets for n = 3 and 4, s_{-1}(n) = 1, 2, 3, 5, under 5 minutes"};
  const auto t0 = Clock::now();
  const std::vector<NatVec> a3 = {{2, 3, 7}, {2, 4, 5}, {3, 3, 4}};
  c.check(minimal_frontier(3, Rational(3)).minimal == a3, "minimal_frontier(3, 3) differs from A_3");
  c.check(verify_net({3, Rational(3), a3}).ok, "verify_net(3, 3, A_3)");

  const VerifyReport printed = verify_net({4, Rational(5), printed_net_a4()});
  const std::vector<std::string> uncovered = {"(3,5,7,9)", "(3,5,8,8)", "(3,6,6,8)", "(3,6,7,7)", "(4,4,6,8)", "(4,4,7,7)"};
  bool as_documented = !printed.ok && printed_net_a4().size() == 12 && printed.failing_rows().empty() &&
                       printed.problems.size() == uncovered.size();
  for (std::size_t i = 0; as_documented && i < uncovered.size(); ++i) {
    as_documented = printed.problems[i].find(uncovered[i]) != std::string::npos;
  }
  if (printed.ok) {
    c.note("printed 12-element net passes");
  } else if (as_documented) {
    c.documented_failure("verify_net(4, 5, printed 12 elements) leaves " + join(uncovered, " ") + " uncovered");
  } else {
    c.check(false, "verify_net(4, 5, printed 12 elements) fails in an undocumented way");
  }
  // The same frontier elements are 0-generating, so adding them closes the gap.
  const VerifyReport curated = verify_net({4, Rational(5), curated_net(4)});
  c.check(curated.ok, "verify_net(4, 5, curated 18 elements)");

  // Lower bounds: the constant s_inf(n) is not 0-generating and has harmonic mean s_inf(n).
  const Entry s[] = {0, 1, 2, 3, 5};
  std::vector<std::string> pinned;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Rational lo = s1_lower_bound(NatVec(std::vector<Entry>(n, s[n])));
    const Rational t(static_cast<long long>(s[n]));
    bool upper = false;
    if (n <= 2) {
      upper = verify_net({n, t, curated_net(n)}).ok;
    } else if (n == 3) {
      upper = verify_net({3, t, a3}).ok;
    } else {
      upper = curated.ok;
    }
    c.check(lo == t && upper, "s_{-1}(" + std::to_string(n) + ") not pinned");
    pinned.push_back(t.str());
  }
  const double secs_total = seconds_since(t0);
  c.check(secs_total < 300, "took " + secs(secs_total));
  c.note("s_{-1} = " + join(pinned, ", ") + " via the curated n = 4 net, " + secs(secs_total));
  return c;
}

Criterion tables() {
  Criterion c{7, "table 1 integer rows, table 2 defects, true factorials flagged at n >= 7"};
  TableOptions o;
  o.compute_sinf_up_to = 4;
  o.check_s1_witness_up_to = 4;
  const auto rows = table1(9, o);
  const auto& ref = reference_table();
  BigInt fact = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const std::string tag = "n=" + std::to_string(r.n);
    fact *= r.n;
    c.check(r.varphi.str() == ref[i].varphi, tag + " integer max");
    c.check(r.one_plus_floor_phi.str() == ref[i].one_plus_floor_phi, tag + " 1 + floor");
    c.check(r.varphi_next.str() == ref[i].varphi_next, tag + " integer max at n+1");
    c.check(r.factorial == fact, tag + " factorial");
    const bool differs = r.factorial.str() != ref[i].factorial;
    c.check(differs == (r.n >= 7), tag + " factorial comparison");
    if (differs) {
      bool flagged = false;
      for (const auto& d : known_discrepancies()) {
        flagged = flagged || (d.where == "Table 1, n! at " + tag && d.actual == r.factorial.str());
      }
      c.check(flagged, tag + " factorial difference not on the discrepancy list");
    }
  }
  c.check(rows.size() == 9, "table 1 row count");
  o.s1_supplied = {{5, Rational(450, 49)}, {6, Rational(19)}, {7, Rational(42)}, {8, Rational(122)}};
  const auto t2 = table2(8, o);
  const std::vector<Rational> expect = {0, 0, 0, Rational(1, 5), Rational(41, 90), Rational(13, 19), Rational(5, 6),
                                        Rational(57, 61)};
  std::vector<std::string> got;
  for (std::size_t i = 0; i < t2.size() && i < expect.size(); ++i) {
    c.check(t2[i].defect == expect[i], "defect at n=" + std::to_string(i + 1));
    got.push_back(t2[i].defect.str());
  }
  c.check(t2.size() == 8, "table 2 row count");
  c.note("defects " + join(got, ", "));
  return c;
}

Criterion analysis() {
  Criterion c{8, "weight table n = 4..8, zeta identity and weight inequality n = 4..12, Lambert W, asymptotic sandwich"};
  std::vector<std::string> comparison_printed, comparison_computed;
  bool comparison_as_documented = true;
  for (const auto& ref : weight_reference_table()) {
    if (ref.n < 4) continue;
    const WeightParams w = weight_params(ref.n);
    const std::string tag = "n=" + std::to_string(ref.n);
    auto near = [](const Real& x, double y) { return std::abs(x.convert_to<double>() - y) <= 0.01 + 1e-9; };
    c.check(near(w.lambda, ref.lambda), tag + " lambda");
    c.check(near(w.phi_at_lambda, ref.phi_at_lambda), tag + " phi_n(lambda)");
    // The printed c_lambda is the value at lambda rounded to two decimals.
    c.check(near(w.c_at_rounded_lambda, ref.c_lambda), tag + " c_lambda");
    if (!near(w.comparison, ref.comparison)) {
      std::ostringstream a, b;
      a << ref.comparison;
      b.precision(6);
      b << w.comparison.convert_to<double>();
      comparison_printed.push_back(a.str());
      comparison_computed.push_back(b.str());
      // The computed value still exceeds c_lambda, which is all the argument uses.
      comparison_as_documented = comparison_as_documented && w.comparison > w.c_lambda;
    }
  }
  if (!comparison_printed.empty()) {
    if (comparison_as_documented && comparison_printed.size() == 5) {
      c.documented_failure("(lambda^{n-1}-1)/(lambda-1) printed " + join(comparison_printed, " ") + ", computed " +
                           join(comparison_computed, " "));
    } else {
      c.check(false, "(lambda^{n-1}-1)/(lambda-1) column fails in an undocumented way");
    }
  }
  Real worst_zeta = 0;
  for (std::size_t n = 4; n <= 12; ++n) {
    const CrucialReport r = crucial_inequality_check(n);
    c.check(r.zeta_residual < Real(1e-9), "zeta residual at n=" + std::to_string(n));
    bool rows_ok = r.rows.size() == n - 2;
    for (const auto& row : r.rows) rows_ok = rows_ok && row.lhs >= row.rhs;
    c.check(rows_ok, "weight inequality at n=" + std::to_string(n));
    worst_zeta = std::max(worst_zeta, r.zeta_residual);
  }
  Real worst_w = 0;
  for (int i = 0; i < 10000; ++i) {
    const Real x = pow(Real(10), Real(9) * i / 9999);
    const Real w = lambert_w(x, 1e-13);
    const Real res = abs(w * exp(w) - x) / x;
    worst_w = std::max(worst_w, res);
  }
  c.check(worst_w <= Real(1e-12), "Lambert W residual " + worst_w.str(3));
  for (std::size_t n : {51, 60, 100, 200, 500}) {
    const BoundInterval b = phi_asymptotic_bounds(n);
    const PhiEval p = phi_real(n + 1);
    const Real lnphi = log(p.value);
    const Real err = p.error / p.value;
    c.check(b.in_validity_range && b.lower + err < lnphi && lnphi + err < b.upper,
            "sandwich at n=" + std::to_string(n));
  }
  c.note("max zeta residual " + worst_zeta.str(3) + ", max Lambert W relative residual " + worst_w.str(3));
  return c;
}

Criterion properties() {
  Criterion c{9, "property suites: equivariance, monotonicity, route agreement, weight rearrangement, mean chain"};
  std::mt19937_64 rng(9);
  auto add = [&](const std::string& name, const props::Result& r) {
    c.check(r.ok, name + ": " + r.detail);
    c.note(name + " " + std::to_string(r.cases));
  };
  add("equivariance", props::permutation_equivariance(rng, 300));
  add("monotonicity n=2", props::monotonicity_exhaustive_n2(12));
  add("monotonicity", props::monotonicity_sampled(rng, 300));
  add("constant routes", props::constant_route_agreement(4, 7));
  add("full vs antichain", props::mode_agreement(rng, 500, 4, 6));
  add("weight rearrangement", props::weight_rearrangement(rng, 300, 6));
  add("mean chain", props::mean_chain_on_sequences());
  return c;
}

Criterion stretch(bool run, double seconds) {
  Criterion c{10, "stretch: s_inf(6) = 19, s_inf(7) <= 48, s_inf(8) <= 141"};
  if (!run) {
    c.skipped = true;
    c.note("long tier, run with --stretch");
    return c;
  }
  Budget b;
  b.max_wall = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  const auto t0 = Clock::now();
  const SInfResult r6 = s_inf(6, b);
  c.check(r6.exact && r6.value == 19, "s_inf(6) gave [" + std::to_string(r6.lower) + ", " + std::to_string(r6.upper) + "]");
  c.note("s_inf(6) " + secs(seconds_since(t0)));
  for (auto [n, cst] : {std::pair<std::size_t, Entry>{7, 49}, {8, 142}}) {
    EngineOptions o;
    o.budget = b;
    o.provenance = true;
    const auto t1 = Clock::now();
    const ConstDecision d = decide_const(cst, n, o);
    const std::string tag = "constant " + std::to_string(cst) + " at n=" + std::to_string(n);
    if (d.verdict.outcome == Outcome::Generating) {
      c.check(verify_const_witness(extract_witness(*d.state)).ok, tag + " witness does not verify");
    } else {
      c.check(false, tag + ": " + to_string(d.verdict.outcome) +
                         (d.verdict.resource.empty() ? "" : " (" + d.verdict.resource + ")"));
    }
    c.note(tag + " " + secs(seconds_since(t1)));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance gate"};
  bool run_stretch = false;
  double stretch_seconds = 600;
  std::size_t mutations = 100;
  app.add_flag("--stretch", run_stretch, "Also run the long-tier stretch criterion");
  app.add_option("--stretch-seconds", stretch_seconds, "Wall-clock budget per stretch run")->capture_default_str();
  app.add_option("--mutations", mutations, "Mutations per fixture")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Criterion()>> gating = {
      fast_tier, slow_tier, [&] { return corpus(mutations); }, shift_generator, invariants, nets, tables,
      analysis, properties};
  std::vector<int> unexpected, documented;
  for (const auto& f : gating) {
    Criterion c;
    try {
      c = f();
    } catch (const std::exception& e) {
      c.id = static_cast<int>(&f - gating.data()) + 1;
      c.title = "criterion threw";
      c.check(false, e.what());
    }
    report(c, true, std::cout);
    std::cout.flush();
    if (!c.expected()) unexpected.push_back(c.id);
    if (c.expected() && !c.pass()) documented.push_back(c.id);
  }
  report(stretch(run_stretch, stretch_seconds), false, std::cout);

  auto ids = [](const std::vector<int>& v) {
    std::string s;
    for (int i : v) s += (s.empty() ? "" : ", ") + std::to_string(i);
    return s.empty() ? std::string("none") : s;
  };
  std::cout << "documented unattainable sub-checks in: " << ids(documented) << "\n";
  std::cout << "unexpected failures in: " << ids(unexpected) << "\n";
  return unexpected.empty() ? 0 : 1;
}
