#include "zgen/extremal.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "zgen/analysis.hpp"

namespace zgen {

std::vector<NatVec> printed_net_a4() {
  return {{2, 4, 12, 15}, {2, 5, 9, 13}, {2, 6, 8, 13}, {2, 7, 7, 11}, {3, 3, 8, 11}, {3, 4, 5, 12},
          {3, 4, 6, 10},  {4, 4, 4, 12}, {4, 4, 5, 9},  {4, 5, 5, 7},  {4, 5, 6, 6},  {5, 5, 5, 6}};
}

std::vector<NatVec> curated_net(std::size_t n) {
  switch (n) {
    case 1:
      return {{2}};
    case 2:
      return {{2, 3}};
    case 3:
      return {{2, 3, 7}, {2, 4, 5}, {3, 3, 4}};
    case 4: {
      std::vector<NatVec> net = printed_net_a4();
      // Frontier elements the printed twelve leave uncovered; all 0-generating.
      for (NatVec x : {NatVec{3, 5, 7, 9}, NatVec{3, 5, 8, 8}, NatVec{3, 6, 6, 8}, NatVec{3, 6, 7, 7},
                       NatVec{4, 4, 6, 8}, NatVec{4, 4, 7, 7}}) {
        net.push_back(x);
      }
      return net;
    }
    default:
      return {};
  }
}

namespace {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt floor_real(const Real& x) { return static_cast<BigInt>(floor(x)); }

}  // namespace

SInfResult s_inf(std::size_t n, const Budget& budget) {
  if (n == 0) throw std::invalid_argument("s_inf: n must be positive");
  SInfResult r;
  r.n = n;
  EngineOptions opts;
  opts.budget = budget;
  opts.provenance = true;
  std::shared_ptr<ConstReach> last_not;
  for (Entry c = 1;; ++c) {
    ConstDecision d = decide_const(c, n, opts);
    if (d.verdict.outcome == Outcome::BudgetExceeded) {
      r.resource = d.verdict.resource;
      r.lower = c - 1;
      if (last_not) r.lower_cert = extract_nongen_invariant(*last_not);
      ConstWitnessCert w = generate_shift_witness(n);
      r.upper = w.hbar - 1;
      r.upper_cert = std::move(w);
      return r;
    }
    if (d.verdict.outcome == Outcome::Generating) {
      r.exact = true;
      r.value = r.lower = r.upper = c - 1;
      if (last_not) r.lower_cert = extract_nongen_invariant(*last_not);
      r.upper_cert = extract_witness(*d.state);
      return r;
    }
    last_not = d.state;
  }
}

FrontierSet minimal_frontier(std::size_t n, const Rational& t, const FrontierLimits& limits) {
  if (n == 0) throw std::invalid_argument("minimal_frontier: n must be positive");
  if (t <= Rational(0)) throw std::invalid_argument("minimal_frontier: t must be positive");
  FrontierSet out;
  out.n = n;
  out.t = t;
  std::vector<NatVec> found;
  NatVec x(n);
  auto check_coord = [&](const BigInt& v) {
    if (v > BigInt(limits.max_coordinate)) {
      throw FrontierOverflow("frontier coordinate exceeds " + std::to_string(limits.max_coordinate));
    }
    return v.convert_to<Entry>();
  };
  // b: remaining reciprocal budget; the tail sum must stay strictly below b.
  auto dfs = [&](auto&& self, std::size_t i, Entry prev, const Rational& b) -> void {
    const Entry lo = std::max(prev, check_coord((Rational(1) / b).floor() + 1));
    if (i + 1 == n) {
      x[i] = lo;
      found.push_back(x);
      if (found.size() > limits.max_size) throw FrontierOverflow("frontier exceeds the size cap");
      return;
    }
    // From r/b on, an all-equal tail already fits; larger values only dominate it.
    const std::size_t r = n - i;
    const Entry hi = std::max(lo, check_coord((Rational(static_cast<long long>(r)) / b).floor() + 1));
    for (Entry v = lo; v <= hi; ++v) {
      x[i] = v;
      self(self, i + 1, v, b - Rational(1, static_cast<long long>(v)));
    }
  };
  dfs(dfs, 0, 1, Rational(static_cast<long long>(n)) / t);
  out.minimal = antichain_min(std::move(found));
  return out;
}

HarmonicNet load_net(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": invalid JSON: " + e.what());
  }
  HarmonicNet net;
  try {
    net.n = j.at("n").get<std::size_t>();
    net.t = Rational::parse(j.at("threshold").get<std::string>());
    for (const auto& v : j.at("net")) {
      NatVec x(v.get<std::vector<Entry>>());
      if (x.size() != net.n) throw std::runtime_error("net vector has the wrong dimension");
      net.net.push_back(std::move(x));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return net;
}

void save_net(const HarmonicNet& net, const std::filesystem::path& path) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : net.net) vs.push_back(v.entries());
  nlohmann::json j = {{"type", "harmonic_net"}, {"n", net.n}, {"threshold", net.t.str()}, {"net", vs}};
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

bool certified_generating(const NatVec& h, const Budget& budget) {
  EngineOptions opts;
  opts.budget = budget;
  opts.provenance = true;
  if (h.is_constant()) {
    ConstDecision d = decide_const(h[0], h.size(), opts);
    if (d.verdict.outcome == Outcome::BudgetExceeded) throw BudgetExhausted{d.verdict.resource};
    return d.verdict.outcome == Outcome::Generating && verify_const_witness(extract_witness(*d.state)).ok;
  }
  GeneralDecision d = decide_general(h, opts);
  if (d.verdict.outcome == Outcome::BudgetExceeded) throw BudgetExhausted{d.verdict.resource};
  return d.verdict.outcome == Outcome::Generating && verify_general_witness(extract_witness(*d.state)).ok;
}

VerifyReport verify_net(const HarmonicNet& net, const GeneracyOracle& oracle) {
  const GeneracyOracle is_gen = oracle ? oracle : [](const NatVec& h) { return certified_generating(h); };
  VerifyReport rep;
  rep.statement = "s_{-1}(" + std::to_string(net.n) + ") <= " + net.t.mixed_str();
  std::vector<NatVec> sorted;
  for (const auto& v : net.net) {
    if (v.size() != net.n) {
      rep.problems.push_back("net element " + to_string(v) + " has the wrong dimension");
      return rep;
    }
    sorted.push_back(v.canonical());
  }
  const FrontierSet F = minimal_frontier(net.n, net.t);
  for (const auto& f : F.minimal) {
    bool covered = std::any_of(sorted.begin(), sorted.end(), [&](const NatVec& y) { return dominates(f, y); });
    if (!covered) rep.problems.push_back("frontier element " + to_string(f) + " dominates no net element");
  }
  // Engine runs are independent.
  std::vector<std::future<std::pair<bool, std::string>>> runs;
  for (const auto& v : sorted) {
    runs.push_back(std::async(std::launch::async, [&is_gen, v]() -> std::pair<bool, std::string> {
      try {
        return {is_gen(v), ""};
      } catch (const BudgetExhausted& e) {
        return {false, "budget exceeded (" + e.resource + ")"};
      }
    }));
  }
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto [ok, why] = runs[i].get();
    RowResult row;
    row.row = i;
    row.ok = ok;
    if (!ok) row.problems.push_back(to_string(net.net[i]) + " is not shown 0-generating" + (why.empty() ? "" : ": " + why));
    rep.rows.push_back(std::move(row));
  }
  rep.ok = rep.problems.empty() && std::all_of(rep.rows.begin(), rep.rows.end(), [](const RowResult& r) { return r.ok; });
  return rep;
}

std::vector<NatVec> suggest_net(std::size_t n, const Rational& t, const GeneracyOracle& oracle) {
  const GeneracyOracle is_gen = oracle ? oracle : [](const NatVec& h) { return certified_generating(h); };
  std::vector<NatVec> out;
  for (NatVec x : minimal_frontier(n, t).minimal) {
    if (!is_gen(x)) continue;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (std::size_t i = 0; i < n && !shrunk; ++i) {
        if (x[i] <= 1) continue;
        NatVec y = x;
        --y[i];
        y = y.canonical();
        if (is_gen(y)) {
          x = y;
          shrunk = true;
        }
      }
    }
    out.push_back(x);
  }
  return antichain_min(std::move(out));
}

Rational s1_lower_bound(const NatVec& x, const Budget& budget) {
  if (x.size() == 0 || std::any_of(x.begin(), x.end(), [](Entry v) { return v == 0; })) {
    throw std::domain_error("s1_lower_bound: entries must be positive");
  }
  DecideOptions opts;
  opts.engine.budget = budget;
  const Verdict v = decide(x, opts);
  if (v.outcome == Outcome::BudgetExceeded) throw BudgetExhausted{v.resource};
  if (v.outcome == Outcome::Generating) throw std::domain_error("no bound: " + to_string(x) + " is 0-generating");
  return harmonic_mean(x);
}

DefectBound defect_bound(std::size_t n, const Rational& s1_lower) {
  const Rational m(static_cast<long long>(n));
  if (n == 0 || s1_lower < m) throw std::invalid_argument("defect_bound: s1_lower must be at least n");
  return {n, s1_lower, Rational(1) - m / s1_lower};
}

std::vector<Table1Row> table1(std::size_t n_max, const TableOptions& options) {
  std::vector<Table1Row> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Table1Row row;
    row.n = n;
    row.varphi = varphi_int(n).value;
    row.one_plus_floor_phi = 1 + floor_real(phi_real(n).value);
    row.varphi_next = varphi_int(n + 1).value;
    row.factorial = factorial(n);
    if (n <= options.compute_sinf_up_to) {
      row.s_inf = s_inf(n, options.budget);
    } else {
      // Bracket: the real-maximum lower bound and the shift construction.
      row.s_inf.n = n;
      row.s_inf.lower = row.one_plus_floor_phi.convert_to<Entry>();
      ConstWitnessCert w = generate_shift_witness(n);
      row.s_inf.upper = w.hbar - 1;
      row.s_inf.upper_cert = std::move(w);
    }
    const SInfResult& s = row.s_inf;
    row.s_inf_text = s.exact ? std::to_string(s.value)
                             : "[" + std::to_string(s.lower) + ", " + std::to_string(s.upper) + "]";
    row.s1_lower = Rational(static_cast<long long>(s.lower));
    if (s.exact && n <= std::min<std::size_t>(options.verify_nets_up_to, 4)) {
      HarmonicNet net{n, Rational(static_cast<long long>(s.value)), curated_net(n)};
      const auto file = options.net_dir / ("a" + std::to_string(n) + ".json");
      if (!options.net_dir.empty() && std::filesystem::exists(file)) net = load_net(file);
      if (net.t == Rational(static_cast<long long>(s.value)) && verify_net(net).ok) row.s1_exact = true;
    }
    if (!row.s1_exact && n <= options.check_s1_witness_up_to) {
      if (auto x = s1_witness_vector(n)) row.s1_lower = std::max(row.s1_lower, s1_lower_bound(*x, options.budget));
    }
    if (auto it = options.s1_supplied.find(n); !row.s1_exact && it != options.s1_supplied.end() && it->second > row.s1_lower) {
      row.s1_lower = it->second;
      row.s1_supplied = true;
    }
    row.s1_text = row.s1_exact ? row.s1_lower.mixed_str() : ">= " + row.s1_lower.mixed_str();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table2Row> table2(std::size_t n_max, const TableOptions& options) {
  std::vector<Table2Row> out;
  for (const Table1Row& r : table1(n_max, options)) {
    Table2Row row;
    row.n = r.n;
    row.s1_text = r.s1_text;
    row.s1_lower = r.s1_lower;
    row.s1_supplied = r.s1_supplied;
    row.defect = defect_bound(r.n, r.s1_lower).bound;
    row.defect_text = row.defect == Rational(0) ? "0" : "<= " + row.defect.str();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace zgen
