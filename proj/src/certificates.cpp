#include "zgen/certificates.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "zgen/analysis.hpp"

namespace zgen {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxCertDim = 64;
constexpr std::size_t kMaxEscapesReported = 10;

// ---------------------------------------------------------------- JSON input

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw CertificateError("schema error at " + path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing field");
  return *it;
}

Entry get_nat(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<Entry>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<Entry>();
  bad(path, "expected a non-negative integer");
}

NatVec get_vec(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) bad(path, "expected an array of non-negative integers");
  if (j.size() != n) bad(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  NatVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = get_nat(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

const json& get_array(const json& obj, const char* key, const std::string& path) {
  const json& a = field(obj, key, path);
  if (!a.is_array()) bad(path + "." + key, "expected an array");
  return a;
}

std::size_t get_dim(const json& j) {
  Entry n = get_nat(field(j, "n", "$"), "$.n");
  if (n == 0 || n > kMaxCertDim) bad("$.n", "dimension must be in 1.." + std::to_string(kMaxCertDim));
  return n;
}

json get_meta(const json& j) {
  auto it = j.find("meta");
  if (it == j.end()) return json::object();
  if (!it->is_object()) bad("$.meta", "expected an object");
  return *it;
}

ConstWitnessCert const_from_json(const json& j) {
  ConstWitnessCert c;
  c.n = get_dim(j);
  c.hbar = get_nat(field(j, "hbar", "$"), "$.hbar");
  c.meta = get_meta(j);
  const json& steps = get_array(j, "steps", "$");
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const std::string p = "$.steps[" + std::to_string(s) + "]";
    const json& js = steps[s];
    ConstStep st;
    st.f = get_vec(field(js, "f", p), p + ".f", c.n);
    st.fhat = get_vec(field(js, "fhat", p), p + ".fhat", c.n);
    st.k = get_nat(field(js, "k", p), p + ".k");
    const json& parts = get_array(js, "parts", p);
    for (std::size_t t = 0; t < parts.size(); ++t) {
      const std::string pp = p + ".parts[" + std::to_string(t) + "]";
      if (parts[t].is_array()) {
        st.parts.emplace_back(get_vec(parts[t], pp, c.n));
      } else {
        st.parts.emplace_back(static_cast<std::size_t>(get_nat(parts[t], pp)));
      }
    }
    if (auto it = js.find("sigma"); it != js.end() && !it->is_null()) {
      NatVec sv = get_vec(*it, p + ".sigma", c.n);
      st.sigma = Permutation(sv.begin(), sv.end());
    }
    c.steps.push_back(std::move(st));
  }
  return c;
}

GeneralWitnessCert general_from_json(const json& j) {
  GeneralWitnessCert c;
  c.n = get_dim(j);
  c.hbar = get_vec(field(j, "hbar", "$"), "$.hbar", c.n);
  c.meta = get_meta(j);
  const json& rows = get_array(j, "rows", "$");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string p = "$.rows[" + std::to_string(r) + "]";
    GeneralRow row;
    const json& sel = get_array(rows[r], "selected", p);
    if (sel.size() != c.n) bad(p + ".selected", "expected " + std::to_string(c.n) + " vectors");
    for (std::size_t i = 0; i < sel.size(); ++i) {
      row.selected.push_back(get_vec(sel[i], p + ".selected[" + std::to_string(i) + "]", c.n));
    }
    row.sum = get_vec(field(rows[r], "sum", p), p + ".sum", c.n);
    const json& prods = get_array(rows[r], "productions", p);
    for (std::size_t t = 0; t < prods.size(); ++t) {
      const std::string pp = p + ".productions[" + std::to_string(t) + "]";
      Production pr;
      pr.target = get_nat(field(prods[t], "target", pp), pp + ".target");
      if (pr.target >= c.n) bad(pp + ".target", "index out of range");
      pr.produced = get_vec(field(prods[t], "produced", pp), pp + ".produced", c.n);
      row.productions.push_back(std::move(pr));
    }
    c.rows.push_back(std::move(row));
  }
  return c;
}

std::vector<NatVec> vec_list(const json& a, const std::string& path, std::size_t n) {
  if (!a.is_array()) bad(path, "expected an array of vectors");
  std::vector<NatVec> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_vec(a[i], path + "[" + std::to_string(i) + "]", n));
  return out;
}

Certificate invariant_from_json(const json& j) {
  const std::size_t n = get_dim(j);
  const json& hb = field(j, "hbar", "$");
  const json& M = field(j, "M", "$");
  if (hb.is_array()) {
    GeneralInvariantCert c;
    c.n = n;
    c.hbar = get_vec(hb, "$.hbar", n);
    c.meta = get_meta(j);
    if (!M.is_array() || M.size() != n) bad("$.M", "expected one vector list per index");
    for (std::size_t i = 0; i < n; ++i) c.pools.push_back(vec_list(M[i], "$.M[" + std::to_string(i) + "]", n));
    return c;
  }
  NonGenInvariantCert c;
  c.n = n;
  c.hbar = get_nat(hb, "$.hbar");
  c.meta = get_meta(j);
  c.M = vec_list(M, "$.M", n);
  return c;
}

// ---------------------------------------------------------------- JSON output

json vec_json(const NatVec& v) { return json(v.entries()); }

json list_json(const std::vector<NatVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

json to_json_impl(const ConstWitnessCert& c) {
  json steps = json::array();
  for (const auto& st : c.steps) {
    json parts = json::array();
    for (const auto& p : st.parts) {
      if (const auto* idx = std::get_if<std::size_t>(&p)) {
        parts.push_back(*idx);
      } else {
        parts.push_back(vec_json(std::get<NatVec>(p)));
      }
    }
    json js = {{"f", vec_json(st.f)}, {"fhat", vec_json(st.fhat)}, {"k", st.k}, {"parts", parts}};
    if (st.sigma) js["sigma"] = *st.sigma;
    steps.push_back(std::move(js));
  }
  return {{"type", "const_witness"}, {"n", c.n}, {"hbar", c.hbar}, {"steps", steps}, {"meta", c.meta}};
}

json to_json_impl(const GeneralWitnessCert& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    json prods = json::array();
    for (const auto& p : r.productions) prods.push_back({{"target", p.target}, {"produced", vec_json(p.produced)}});
    rows.push_back({{"selected", list_json(r.selected)}, {"sum", vec_json(r.sum)}, {"productions", prods}});
  }
  return {{"type", "general_witness"}, {"n", c.n}, {"hbar", vec_json(c.hbar)}, {"rows", rows}, {"meta", c.meta}};
}

json to_json_impl(const NonGenInvariantCert& c) {
  return {{"type", "nongen_invariant"}, {"n", c.n}, {"hbar", c.hbar}, {"M", list_json(c.M)}, {"meta", c.meta}};
}

json to_json_impl(const GeneralInvariantCert& c) {
  json pools = json::array();
  for (const auto& p : c.pools) pools.push_back(list_json(p));
  return {{"type", "nongen_invariant"}, {"n", c.n}, {"hbar", vec_json(c.hbar)}, {"M", pools}, {"meta", c.meta}};
}

// ---------------------------------------------------------------- verifiers

void add_problem(RowResult& row, std::string msg) {
  row.ok = false;
  row.problems.push_back(std::move(msg));
}

void finish(VerifyReport& r) {
  r.ok = r.problems.empty() && std::all_of(r.rows.begin(), r.rows.end(), [](const RowResult& x) { return x.ok; });
}

bool below_const(const NatVec& x, Entry c) {
  return std::all_of(x.begin(), x.end(), [c](Entry v) { return v < c; });
}

// x dominates some member of M after sorting both.
bool absorbed(const NatVec& x, const std::vector<NatVec>& sorted_M) {
  const NatVec xs = x.canonical();
  return std::any_of(sorted_M.begin(), sorted_M.end(), [&](const NatVec& m) { return dominates(xs, m); });
}

}  // namespace

std::string VerifyReport::classification() const {
  if (ok) return "pass";
  if (std::any_of(rows.begin(), rows.end(), [](const RowResult& x) { return !x.ok; })) return "anomalous-row";
  return "fail";
}

std::optional<std::size_t> VerifyReport::first_failing_row() const {
  for (const auto& r : rows) {
    if (!r.ok) return r.row;
  }
  return std::nullopt;
}

std::vector<std::size_t> VerifyReport::failing_rows() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) {
    if (!r.ok) out.push_back(r.row);
  }
  return out;
}

VerifyReport verify_const_witness(const ConstWitnessCert& cert) {
  VerifyReport rep;
  const std::size_t n = cert.n;
  rep.statement = "constant " + std::to_string(cert.hbar) + " on n=" + std::to_string(n) + " is 0-generating";
  if (n == 0) {
    rep.problems.push_back("dimension is zero");
    return rep;
  }
  if (cert.steps.empty()) rep.problems.push_back("no steps");
  // Orbits (canonical forms) of the f of every earlier step.
  std::set<NatVec> earlier;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const ConstStep& st = cert.steps[s];
    RowResult row;
    row.row = s;
    if (st.f.size() != n || st.fhat.size() != n) {
      add_problem(row, "vector dimension differs from n");
      rep.rows.push_back(std::move(row));
      continue;
    }
    if (st.k >= n) add_problem(row, "k=" + std::to_string(st.k) + " is not below n");
    if (st.parts.size() != st.k) {
      add_problem(row, "has " + std::to_string(st.parts.size()) + " parts but k=" + std::to_string(st.k));
    }
    NatVec sum = indicator_tail(n, std::min(st.k, n));
    for (std::size_t t = 0; t < st.parts.size(); ++t) {
      if (const auto* idx = std::get_if<std::size_t>(&st.parts[t])) {
        if (*idx >= s) {
          throw CertificateError("step " + std::to_string(s) + " part " + std::to_string(t) + " references step " +
                                 std::to_string(*idx) + ", which is not earlier");
        }
        sum += cert.steps[*idx].f;
        continue;
      }
      const NatVec& v = std::get<NatVec>(st.parts[t]);
      if (v.size() != n) {
        add_problem(row, "part " + std::to_string(t) + " has the wrong dimension");
        continue;
      }
      if (!earlier.contains(v.canonical())) {
        add_problem(row, "part " + to_string(v) + " is not a permutation of an earlier f");
      }
      sum += v;
    }
    if (sum != st.fhat) add_problem(row, "fhat " + to_string(st.fhat) + " but 1_{n\\k} + parts = " + to_string(sum));
    if (!below_const(st.fhat, cert.hbar)) add_problem(row, "fhat " + to_string(st.fhat) + " is not below hbar");
    const NatVec g = zero_last(st.fhat);
    if (st.sigma) {
      if (!is_permutation(*st.sigma, n)) {
        add_problem(row, "sigma is not a permutation");
      } else if (permute(g, *st.sigma) != st.f) {
        add_problem(row, "f " + to_string(st.f) + " differs from (fhat with last entry zeroed) o sigma");
      }
    } else if (g.canonical() != st.f.canonical()) {
      add_problem(row, "f " + to_string(st.f) + " is not a permutation of " + to_string(g));
    }
    earlier.insert(st.f.canonical());
    rep.rows.push_back(std::move(row));
  }
  if (!cert.steps.empty() && !cert.steps.back().f.is_zero()) rep.problems.push_back("the last step's f is not zero");
  finish(rep);
  return rep;
}

VerifyReport verify_general_witness(const GeneralWitnessCert& cert) {
  VerifyReport rep;
  const std::size_t n = cert.n;
  rep.statement = to_string(cert.hbar) + " is 0-generating";
  if (n == 0 || cert.hbar.size() != n) {
    rep.problems.push_back("hbar dimension differs from n");
    return rep;
  }
  std::vector<std::set<NatVec>> produced(n);
  bool zero = false;
  for (std::size_t r = 0; r < cert.rows.size(); ++r) {
    const GeneralRow& g = cert.rows[r];
    RowResult row;
    row.row = r;
    if (g.selected.size() != n || g.sum.size() != n) {
      add_problem(row, "row shape differs from n");
      rep.rows.push_back(std::move(row));
      continue;
    }
    NatVec sum(n);
    bool shape_ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      const NatVec& v = g.selected[j];
      if (v.size() != n) {
        add_problem(row, "selected vector " + std::to_string(j) + " has the wrong dimension");
        shape_ok = false;
        continue;
      }
      if (v != unit_vector(n, j) && !produced[j].contains(v)) {
        add_problem(row, "selected " + to_string(v) + " for index " + std::to_string(j) +
                             " is neither 1_j nor an earlier production for that index");
      }
      sum += v;
    }
    if (!shape_ok) {
      rep.rows.push_back(std::move(row));
      continue;
    }
    if (sum != g.sum) add_problem(row, "sum " + to_string(g.sum) + " but the selected vectors add to " + to_string(sum));
    if (!strictly_below(sum, cert.hbar)) add_problem(row, "sum " + to_string(sum) + " is not below hbar");
    bool row_zero = false;
    for (const auto& p : g.productions) {
      if (p.target >= n || p.produced.size() != n) {
        add_problem(row, "production has a bad target or dimension");
        continue;
      }
      NatVec expect = sum;
      expect[p.target] = 0;
      if (p.produced != expect) {
        add_problem(row, "production " + to_string(p.produced) + " for index " + std::to_string(p.target) +
                             " should be " + to_string(expect));
      }
      produced[p.target].insert(p.produced);
      if (p.produced.is_zero()) row_zero = true;
    }
    if (row_zero && row.ok) zero = true;
    rep.rows.push_back(std::move(row));
  }
  if (!zero) rep.problems.push_back("no valid row produces the zero vector");
  finish(rep);
  return rep;
}

VerifyReport verify_nongen_invariant(const NonGenInvariantCert& cert) {
  VerifyReport rep;
  const std::size_t n = cert.n;
  rep.statement = "constant " + std::to_string(cert.hbar) + " on n=" + std::to_string(n) + " is not 0-generating";
  if (n == 0) {
    rep.problems.push_back("dimension is zero");
    return rep;
  }
  std::vector<NatVec> members = cert.M;
  // The first recursion stage always holds 1_n with its last entry zeroed.
  if (below_const(indicator_tail(n, 0), cert.hbar)) members.push_back(zero_last(indicator_tail(n, 0)));
  std::vector<NatVec> sorted_M;
  for (const auto& m : members) {
    if (m.size() != n) {
      rep.problems.push_back("member " + to_string(m) + " has the wrong dimension");
      return rep;
    }
    if (m.is_zero()) {
      rep.problems.push_back("the zero vector lies in the up-set");
      break;
    }
    sorted_M.push_back(m.canonical());
  }
  // Every orbit member, as summands.
  std::set<NatVec> orbit;
  for (const auto& m : members) {
    for (auto& p : distinct_permutations(m)) orbit.insert(std::move(p));
  }
  const std::vector<NatVec> E(orbit.begin(), orbit.end());
  const NatVec last = unit_vector(n, n - 1);
  std::size_t escapes = 0;
  // Multisets of size k < n drawn from E in nondecreasing index order.
  auto visit = [&](auto&& self, std::size_t k, std::size_t from, const NatVec& s) -> void {
    const NatVec x = indicator_tail(n, k) + s;
    if (below_const(x, cert.hbar) && !absorbed(zero_last(x), sorted_M)) {
      if (escapes < kMaxEscapesReported) {
        rep.problems.push_back("escaping element " + to_string(zero_last(x)) + " from 1_{n\\" + std::to_string(k) +
                               "} + " + to_string(s));
      }
      ++escapes;
    }
    if (k + 1 >= n) return;
    for (std::size_t e = from; e < E.size(); ++e) {
      NatVec t = s + E[e];
      // Deeper sums only grow, and every x has x(n-1) >= 1 once k < n.
      if (!below_const(t + last, cert.hbar)) continue;
      self(self, k + 1, e, t);
    }
  };
  visit(visit, 0, 0, NatVec(n));
  if (escapes > kMaxEscapesReported) {
    rep.problems.push_back(std::to_string(escapes - kMaxEscapesReported) + " further escaping elements");
  }
  finish(rep);
  return rep;
}

VerifyReport verify_general_invariant(const GeneralInvariantCert& cert) {
  VerifyReport rep;
  const std::size_t n = cert.n;
  rep.statement = to_string(cert.hbar) + " is not 0-generating";
  if (n == 0 || cert.hbar.size() != n || cert.pools.size() != n) {
    rep.problems.push_back("shape differs from n");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    RowResult row;
    row.row = i;
    for (const auto& m : cert.pools[i]) {
      if (m.size() != n) {
        add_problem(row, "member " + to_string(m) + " has the wrong dimension");
      } else if (m.is_zero()) {
        add_problem(row, "the zero vector lies in the up-set");
      }
    }
    const NatVec u = unit_vector(n, i);
    if (strictly_below(u, cert.hbar) && !in_upset(cert.pools[i], u)) add_problem(row, "1_i is not in the up-set");
    rep.rows.push_back(std::move(row));
  }
  if (!std::all_of(rep.rows.begin(), rep.rows.end(), [](const RowResult& x) { return x.ok; })) {
    finish(rep);
    return rep;
  }
  std::size_t escapes = 0;
  auto visit = [&](auto&& self, std::size_t j, const NatVec& s) -> void {
    if (j == n) {
      for (std::size_t i = 0; i < n; ++i) {
        NatVec r = s;
        r[i] = 0;
        if (in_upset(cert.pools[i], r)) continue;
        if (escapes < kMaxEscapesReported) {
          add_problem(rep.rows[i], "escaping production " + to_string(r) + " from sum " + to_string(s));
        }
        ++escapes;
      }
      return;
    }
    for (const auto& m : cert.pools[j]) {
      NatVec t = s + m;
      if (strictly_below(t, cert.hbar)) self(self, j + 1, t);
    }
  };
  visit(visit, 0, NatVec(n));
  if (escapes > kMaxEscapesReported) {
    rep.problems.push_back(std::to_string(escapes - kMaxEscapesReported) + " further escaping productions");
  }
  finish(rep);
  return rep;
}

VerifyReport verify(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> VerifyReport {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ConstWitnessCert>) {
          return verify_const_witness(c);
        } else if constexpr (std::is_same_v<T, GeneralWitnessCert>) {
          return verify_general_witness(c);
        } else if constexpr (std::is_same_v<T, NonGenInvariantCert>) {
          return verify_nongen_invariant(c);
        } else {
          return verify_general_invariant(c);
        }
      },
      cert);
}

// ---------------------------------------------------------------- extraction

namespace {

// Derivation ids reachable from `root`, in creation order (parts precede users).
std::vector<std::size_t> ancestry(const std::vector<Derivation>& recs, std::size_t root) {
  std::set<std::size_t> seen;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    if (id >= recs.size() || !seen.insert(id).second) continue;
    for (std::size_t p : recs[id].parts) stack.push_back(p);
  }
  return {seen.begin(), seen.end()};
}

json engine_meta(std::size_t stage) { return {{"source", "engine"}, {"stage", stage}}; }

}  // namespace

ConstWitnessCert extract_witness(const ConstReach& run) {
  if (!run.has_provenance()) throw CertificateError("run was made without provenance");
  const auto root = run.zero_derivation();
  if (!root) throw CertificateError("run did not reach the zero vector");
  const auto& recs = run.derivations();
  ConstWitnessCert cert;
  cert.n = run.n();
  cert.hbar = run.c();
  cert.meta = engine_meta(run.stage());
  for (std::size_t id : ancestry(recs, *root)) {
    const Derivation& d = recs[id];
    ConstStep st;
    st.f = d.point;
    st.fhat = d.sum;
    st.k = d.k;
    for (const auto& v : d.part_vectors) st.parts.emplace_back(v);
    st.sigma = perm_between(zero_last(d.sum), d.point);
    cert.steps.push_back(std::move(st));
  }
  return cert;
}

GeneralWitnessCert extract_witness(const ReachState& run) {
  if (!run.has_provenance()) throw CertificateError("run was made without provenance");
  const auto root = run.zero_derivation();
  if (!root) throw CertificateError("run did not reach the zero vector");
  const auto& recs = run.derivations();
  GeneralWitnessCert cert;
  cert.n = run.h().size();
  cert.hbar = run.h();
  cert.meta = engine_meta(run.stage());
  for (std::size_t id : ancestry(recs, *root)) {
    const Derivation& d = recs[id];
    if (d.seed) continue;
    GeneralRow row;
    row.selected = d.part_vectors;
    row.sum = d.sum;
    row.productions.push_back({d.index, d.point});
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

NonGenInvariantCert extract_nongen_invariant(const ConstReach& run) {
  if (run.changed() || run.has_zero()) throw CertificateError("run is not at a fixpoint without the zero vector");
  NonGenInvariantCert cert;
  cert.n = run.n();
  cert.hbar = run.c();
  cert.meta = engine_meta(run.stage());
  std::set<NatVec> reps;
  for (const auto& m : run.members()) reps.insert(m.canonical());
  for (const auto& x : reps) {
    bool minimal = std::none_of(reps.begin(), reps.end(), [&](const NatVec& y) { return y != x && dominates(x, y); });
    if (minimal) cert.M.push_back(x);
  }
  return cert;
}

GeneralInvariantCert extract_nongen_invariant(const ReachState& run) {
  if (run.changed() || run.zero_index()) throw CertificateError("run is not at a fixpoint without the zero vector");
  GeneralInvariantCert cert;
  cert.n = run.h().size();
  cert.hbar = run.h();
  cert.meta = engine_meta(run.stage());
  for (std::size_t i = 0; i < cert.n; ++i) cert.pools.push_back(antichain_min(run.pool(i)));
  return cert;
}

ConstWitnessCert generate_shift_witness(std::size_t n) {
  if (n == 0) throw std::invalid_argument("generate_shift_witness: n must be positive");
  const BigInt bound = varphi_int(n + 1).value + 1;
  if (bound > BigInt(std::numeric_limits<Entry>::max())) throw std::overflow_error("generate_shift_witness: n too large");
  ConstWitnessCert cert;
  cert.n = n;
  cert.hbar = bound.convert_to<Entry>();
  cert.meta = {{"source", "construction"}};
  const Permutation sigma = cyclic_perm(n);
  auto push = [&](NatVec fhat, std::size_t k, std::vector<StepPart> parts) {
    ConstStep st;
    st.f = permute(zero_last(fhat), sigma);
    st.fhat = std::move(fhat);
    st.k = k;
    st.parts = std::move(parts);
    st.sigma = sigma;
    cert.steps.push_back(std::move(st));
    return cert.steps.back().f.is_zero();
  };
  // f_0 = 1_n, and each step's f is S applied to its fhat.
  if (push(indicator_tail(n, 0), 0, {})) return cert;
  std::size_t prev = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t m = 0; m <= n - k; ++m) {
      NatVec fhat = indicator_tail(n, k) + k * cert.steps[prev].f;
      bool done = push(std::move(fhat), k, std::vector<StepPart>(k, prev));
      prev = cert.steps.size() - 1;
      if (done) return cert;
    }
  }
  return cert;
}

// ---------------------------------------------------------------- files

Certificate cert_from_json(const json& j) {
  const json& t = field(j, "type", "$");
  if (!t.is_string()) bad("$.type", "expected a string");
  const std::string type = t.get<std::string>();
  if (type == "const_witness") return const_from_json(j);
  if (type == "general_witness") return general_from_json(j);
  if (type == "nongen_invariant") return invariant_from_json(j);
  bad("$.type", "unknown certificate type \"" + type + "\"");
}

json cert_to_json(const Certificate& cert) {
  return std::visit([](const auto& c) { return to_json_impl(c); }, cert);
}

Certificate load_cert(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CertificateError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw CertificateError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": invalid JSON: " + e.what());
  }
  try {
    return cert_from_json(j);
  } catch (const CertificateError& e) {
    throw CertificateError(path.string() + ": " + e.what());
  }
}

void save_cert(const Certificate& cert, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CertificateError("cannot write " + path.string());
  out << cert_to_json(cert).dump(1) << '\n';
  if (!out) throw CertificateError("write failed for " + path.string());
}

std::string cert_type(const Certificate& cert) {
  switch (cert.index()) {
    case 0:
      return "const_witness";
    case 1:
      return "general_witness";
    default:
      return "nongen_invariant";
  }
}

}  // namespace zgen
