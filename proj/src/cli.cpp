#include "zgen/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "zgen/analysis.hpp"
#include "zgen/certificates.hpp"
#include "zgen/extremal.hpp"

namespace zgen::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TierError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An engine result that contradicts another route or its own certificate.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ",";
    line += csv_field(cells[i]);
  }
  return line;
}

// Vector literal without parentheses, as accepted on the command line.
std::string literal(const NatVec& v) {
  std::string s = to_string(v);
  return s.substr(1, s.size() - 2);
}

std::string fmt(const Real& x, int digits = 12) { return x.str(digits); }

double num(const Real& x) { return x.convert_to<double>(); }

json vec_json(const NatVec& v) { return v.entries(); }

json vecs_json(const std::vector<NatVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

NatVec parse_vector_arg(const std::string& text) {
  try {
    NatVec v = parse_vec(text);
    if (v.size() == 0) throw std::invalid_argument("empty vector");
    return v;
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed vector literal '" + text + "': " + e.what());
  }
}

Rational parse_rational_arg(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("malformed rational '" + text + "': " + e.what());
  }
}

void require_tier(std::size_t n, std::size_t slow_from, std::size_t long_from, bool allow_slow, bool allow_long,
                  const std::string& what) {
  if (n >= long_from && !allow_long) {
    throw TierError(what + " for n = " + std::to_string(n) +
                    " is in the long compute tier; pass --allow-long to run it");
  }
  if (n >= slow_from && n < long_from && !allow_slow && !allow_long) {
    throw TierError(what + " for n = " + std::to_string(n) +
                    " is in the slow compute tier; pass --allow-slow to run it");
  }
}

fs::path default_cert_dir() {
  if (const char* c = std::getenv(kCacheEnv); c != nullptr && *c != '\0') return fs::path(c) / "certs";
  return "zgen-certs";
}

void write_json_file(const json& j, const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

VerifyReport checked(const Certificate& c) {
  VerifyReport r = verify(c);
  if (!r.ok) {
    std::string why = r.problems.empty() ? "" : ": " + r.problems.front();
    for (const auto& row : r.rows) {
      if (!row.ok && !row.problems.empty()) {
        why = ": row " + std::to_string(row.row) + ": " + row.problems.front();
        break;
      }
    }
    throw InternalError("engine certificate for '" + r.statement + "' does not verify" + why);
  }
  return r;
}

// Budget and output flags shared by the computing subcommands.
struct BudgetFlags {
  std::uint64_t max_tuples = Budget{}.max_tuples;
  double max_seconds = 600;
  std::uint64_t max_stages = Budget{}.max_stages;

  void add(CLI::App* app) {
    app->add_option("--max-tuples", max_tuples, "Sum tuples examined before giving up")->capture_default_str();
    app->add_option("--max-seconds", max_seconds, "Wall-clock limit per run")->capture_default_str();
    app->add_option("--max-stages", max_stages, "Recursion stages before giving up");
  }
  [[nodiscard]] Budget budget() const {
    Budget b;
    b.max_tuples = max_tuples;
    b.max_wall = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000));
    b.max_stages = max_stages;
    return b;
  }
  [[nodiscard]] json to_json() const {
    return {{"max_tuples", max_tuples}, {"max_seconds", max_seconds}, {"max_stages", max_stages}};
  }
};

struct Common {
  std::string format = "text";
  bool allow_slow = false;
  bool allow_long = false;

  void add(CLI::App* app, bool tiers) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    if (tiers) {
      app->add_flag("--allow-slow", allow_slow, "Permit slow-tier computations");
      app->add_flag("--allow-long", allow_long, "Permit long-tier computations");
    }
  }
  [[nodiscard]] Format fmt() const { return parse_format(format); }
};

// ---------------------------------------------------------------- decide

struct DecideResult {
  NatVec input;
  Verdict verdict;
  bool cached = false;
  std::optional<Certificate> cert;
  std::string cert_path;
  std::string cert_digest;
};

struct DecideSettings {
  EngineOptions engine;
  bool cross_check = false;
  bool need_cert = false;
  VerdictStore* store = nullptr;
};

Outcome other_mode_outcome(const NatVec& h, const EngineOptions& e) {
  EngineOptions o = e;
  o.provenance = false;
  o.mode = e.mode == Mode::Full ? Mode::Antichain : Mode::Full;
  if (h.is_constant() && h[0] > 0) return decide_const(h[0], h.size(), o).verdict.outcome;
  return decide_general(h, o).verdict.outcome;
}

DecideResult decide_one(const NatVec& h, const DecideSettings& s) {
  DecideResult r;
  r.input = h;
  if (!s.need_cert && !s.cross_check && s.store != nullptr) {
    if (auto hit = s.store->find(h)) {
      r.verdict.outcome = hit->verdict;
      r.verdict.stage = hit->stage;
      r.cached = true;
      r.cert_digest = hit->cert_digest;
      return r;
    }
  }
  EngineOptions e = s.engine;
  e.provenance = s.need_cert || s.store != nullptr;
  const bool constant = h.is_constant() && h[0] > 0;
  if (constant) {
    ConstDecision d = decide_const(h[0], h.size(), e);
    r.verdict = d.verdict;
    if (e.provenance && d.verdict.outcome == Outcome::Generating) r.cert = extract_witness(*d.state);
    if (e.provenance && d.verdict.outcome == Outcome::NotGenerating) r.cert = extract_nongen_invariant(*d.state);
  } else {
    GeneralDecision d = decide_general(h, e);
    r.verdict = d.verdict;
    if (e.provenance && d.verdict.outcome == Outcome::Generating) r.cert = extract_witness(*d.state);
    if (e.provenance && d.verdict.outcome == Outcome::NotGenerating) r.cert = extract_nongen_invariant(*d.state);
  }
  if (s.cross_check && r.verdict.definitive()) {
    // The other pruning mode, and for constants also the general recursion.
    DecideOptions o;
    o.engine = s.engine;
    o.cross_check = true;
    Outcome routes[] = {other_mode_outcome(h, s.engine), Outcome::BudgetExceeded};
    try {
      routes[1] = decide(h, o).outcome;
    } catch (const std::logic_error& ex) {
      throw InternalError(ex.what());
    }
    for (Outcome x : routes) {
      if (x != Outcome::BudgetExceeded && x != r.verdict.outcome) {
        throw InternalError("routes disagree on " + to_string(h) + ": " + to_string(r.verdict.outcome) + " vs " +
                            to_string(x));
      }
    }
  }
  if (r.cert) {
    checked(*r.cert);
    r.cert_digest = digest(cert_to_json(*r.cert).dump());
  }
  if (s.store != nullptr && r.verdict.definitive()) {
    if (r.cert) {
      const fs::path p = s.store->cert_path(r.cert_digest);
      if (!fs::exists(p)) save_cert(*r.cert, p);
    }
    s.store->put({h.canonical(), r.verdict.outcome, r.verdict.stage, r.cert_digest});
  }
  return r;
}

std::vector<NatVec> read_batch(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  std::vector<NatVec> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_vector_arg(line));
    } catch (const UsageError& e) {
      throw InputError(p.string() + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<DecideResult> run_batch(const std::vector<NatVec>& hs, const DecideSettings& s, unsigned jobs) {
  std::vector<DecideResult> out(hs.size());
  std::vector<std::exception_ptr> errors(hs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < hs.size(); i = next++) {
      try {
        out[i] = decide_one(hs[i], s);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(hs.size())));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

json decide_json(const DecideResult& r, Mode mode) {
  json j = {{"input", literal(r.input)},
            {"canonical", literal(r.input.canonical())},
            {"verdict", to_string(r.verdict.outcome)},
            {"stage", r.verdict.stage},
            {"tuples", r.verdict.tuples},
            {"mode", to_string(mode)},
            {"cached", r.cached}};
  if (!r.verdict.resource.empty()) j["resource"] = r.verdict.resource;
  j["certificate"] = r.cert_path.empty() ? json(nullptr) : json(r.cert_path);
  return j;
}

int exit_for(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Generating:
      return kExitYes;
    case Outcome::NotGenerating:
      return kExitNo;
    default:
      return kExitBudget;
  }
}

struct DecideFlags {
  Common common;
  BudgetFlags budget;
  std::string vector;
  std::string mode = "antichain";
  std::string emit_cert;
  std::string cert_dir;
  std::string batch;
  std::string manifest;
  std::string cache_dir;
  unsigned jobs = 1;
  bool cross_check = false;
  bool no_cache = false;
};

int cmd_decide(const DecideFlags& f, const std::vector<std::string>& argv, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (f.vector.empty() == f.batch.empty()) throw UsageError("decide needs exactly one of VECTOR or --batch FILE");
  if (!f.batch.empty() && !f.emit_cert.empty()) throw UsageError("--emit-cert names one file; use --cert-dir with --batch");
  std::vector<NatVec> hs = f.batch.empty() ? std::vector<NatVec>{parse_vector_arg(f.vector)} : read_batch(f.batch);
  for (const auto& h : hs) require_tier(h.size(), 6, 6, f.common.allow_slow, f.common.allow_long, "decide");

  DecideSettings s;
  try {
    s.engine.mode = parse_mode(f.mode);
  } catch (const std::exception&) {
    throw UsageError("unknown mode '" + f.mode + "' (expected full or antichain)");
  }
  s.engine.budget = f.budget.budget();
  s.cross_check = f.cross_check;
  s.need_cert = !f.emit_cert.empty() || !f.cert_dir.empty() || !f.manifest.empty();

  std::optional<VerdictStore> store;
  fs::path cache = f.cache_dir;
  if (cache.empty()) {
    if (const char* c = std::getenv(kCacheEnv); c != nullptr && *c != '\0') cache = c;
  }
  if (!cache.empty() && !f.no_cache) {
    store.emplace(cache);
    s.store = &*store;
  }

  std::vector<DecideResult> results = run_batch(hs, s, f.jobs);

  fs::path cert_dir = f.cert_dir;
  if (cert_dir.empty() && !f.manifest.empty()) cert_dir = fs::path(f.manifest).string() + ".certs";
  for (auto& r : results) {
    if (!r.cert) continue;
    fs::path p;
    if (!f.emit_cert.empty()) {
      p = f.emit_cert;
    } else if (!cert_dir.empty()) {
      std::string name = literal(r.input);
      std::replace(name.begin(), name.end(), ',', '-');
      p = cert_dir / (name + ".json");
    } else {
      continue;
    }
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    save_cert(*r.cert, p);
    r.cert_path = p.string();
  }

  if (!f.manifest.empty()) {
    json entries = json::array();
    for (const auto& r : results) {
      json e = decide_json(r, s.engine.mode);
      if (r.verdict.definitive()) e["certificate_verified"] = verify(load_cert(r.cert_path)).ok;
      entries.push_back(e);
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    write_json_file({{"artifact_version", kVersion},
                     {"command_line", argv},
                     {"mode", to_string(s.engine.mode)},
                     {"budget", f.budget.to_json()},
                     {"entries", entries},
                     {"wall_clock_ms", ms.count()}},
                    f.manifest);
  }

  switch (f.common.fmt()) {
    case Format::Json: {
      if (results.size() == 1 && f.batch.empty()) {
        out << decide_json(results[0], s.engine.mode).dump(2) << "\n";
      } else {
        json a = json::array();
        for (const auto& r : results) a.push_back(decide_json(r, s.engine.mode));
        out << a.dump(2) << "\n";
      }
      break;
    }
    case Format::Csv:
      out << "input,verdict,stage,tuples,cached,certificate\n";
      for (const auto& r : results) {
        out << csv_row({literal(r.input), to_string(r.verdict.outcome), std::to_string(r.verdict.stage),
                        std::to_string(r.verdict.tuples), r.cached ? "true" : "false", r.cert_path})
            << "\n";
      }
      break;
    case Format::Text:
      for (const auto& r : results) {
        out << to_string(r.input) << ": " << to_string(r.verdict.outcome);
        if (r.verdict.definitive()) {
          out << " (stage " << r.verdict.stage << (r.cached ? ", cached" : "") << ")";
        } else {
          out << " (" << r.verdict.resource << " limit reached at stage " << r.verdict.stage << ")";
        }
        out << "\n";
        if (!r.cert_path.empty()) out << "  certificate: " << r.cert_path << " (verified)\n";
      }
      break;
  }

  if (f.batch.empty()) return exit_for(results[0].verdict);
  for (const auto& r : results) {
    if (!r.verdict.definitive()) return kExitBudget;
  }
  return kExitYes;
}

// ---------------------------------------------------------------- verify

json report_json(const std::string& path, const std::string& type, const VerifyReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    if (!row.ok) rows.push_back({{"row", row.row}, {"problems", row.problems}});
  }
  return {{"path", path},
          {"type", type},
          {"ok", r.ok},
          {"classification", r.classification()},
          {"statement", r.statement},
          {"rows_checked", r.rows.size()},
          {"failing_rows", rows},
          {"problems", r.problems}};
}

void print_report(std::ostream& out, const std::string& label, const VerifyReport& r) {
  out << label << ": " << r.classification() << "\n";
  out << "  statement: " << r.statement << (r.ok ? "" : " (not established)") << "\n";
  if (!r.rows.empty()) {
    out << "  rows: " << r.rows.size() << " checked, " << r.failing_rows().size() << " failing\n";
  }
  for (const auto& row : r.rows) {
    for (const auto& p : row.problems) out << "  row " << row.row << ": " << p << "\n";
  }
  for (const auto& p : r.problems) out << "  " << p << "\n";
}

int cmd_verify(const std::vector<std::string>& paths, const Common& c, std::ostream& out) {
  bool all_ok = true;
  json a = json::array();
  if (c.fmt() == Format::Csv) out << "path,type,classification,rows_checked,failing_rows\n";
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": invalid JSON: " + e.what());
    }
    const std::string type = j.value("type", "");
    VerifyReport r;
    if (type == "harmonic_net") {
      HarmonicNet net;
      try {
        net = load_net(path);
      } catch (const std::runtime_error& e) {
        throw InputError(e.what());
      }
      r = verify_net(net);
    } else {
      r = verify(load_cert(path));
    }
    all_ok = all_ok && r.ok;
    switch (c.fmt()) {
      case Format::Json:
        a.push_back(report_json(path, type, r));
        break;
      case Format::Csv: {
        std::string rows;
        for (auto i : r.failing_rows()) rows += (rows.empty() ? "" : " ") + std::to_string(i);
        out << csv_row({path, type, r.classification(), std::to_string(r.rows.size()), rows}) << "\n";
        break;
      }
      case Format::Text:
        print_report(out, path, r);
        break;
    }
  }
  if (c.fmt() == Format::Json) out << (a.size() == 1 ? a[0] : a).dump(2) << "\n";
  return all_ok ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------- sinf

int cmd_sinf(std::size_t n, const Common& c, const BudgetFlags& b, const std::string& cert_dir_flag,
             const std::string& manifest, const std::vector<std::string>& argv, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n == 0) throw UsageError("n must be positive");
  require_tier(n, 5, 6, c.allow_slow, c.allow_long, "sinf");
  const SInfResult r = s_inf(n, b.budget());
  const fs::path dir = cert_dir_flag.empty() ? default_cert_dir() : fs::path(cert_dir_flag);
  std::string lower_path, upper_path;
  if (r.lower_cert) {
    checked(*r.lower_cert);
    lower_path = (dir / ("sinf" + std::to_string(n) + "_not_generating_" + std::to_string(r.lower_cert->hbar) + ".json")).string();
    fs::create_directories(dir);
    save_cert(*r.lower_cert, lower_path);
  }
  if (r.upper_cert) {
    checked(*r.upper_cert);
    upper_path = (dir / ("sinf" + std::to_string(n) + "_generating_" + std::to_string(r.upper_cert->hbar) + ".json")).string();
    fs::create_directories(dir);
    save_cert(*r.upper_cert, upper_path);
  }
  const json j = {{"n", n},
                  {"exact", r.exact},
                  {"value", r.exact ? json(r.value) : json(nullptr)},
                  {"lower", r.lower},
                  {"upper", r.upper},
                  {"resource", r.resource},
                  {"lower_certificate", lower_path.empty() ? json(nullptr) : json(lower_path)},
                  {"upper_certificate", upper_path.empty() ? json(nullptr) : json(upper_path)}};
  if (!manifest.empty()) {
    json entries = json::array();
    if (r.lower_cert) {
      entries.push_back({{"input", literal(NatVec(std::vector<Entry>(n, r.lower_cert->hbar)))},
                         {"verdict", to_string(Outcome::NotGenerating)},
                         {"certificate", lower_path},
                         {"certificate_verified", verify(load_cert(lower_path)).ok}});
    }
    if (r.upper_cert) {
      entries.push_back({{"input", literal(NatVec(std::vector<Entry>(n, r.upper_cert->hbar)))},
                         {"verdict", to_string(Outcome::Generating)},
                         {"certificate", upper_path},
                         {"certificate_verified", verify(load_cert(upper_path)).ok}});
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    write_json_file({{"artifact_version", kVersion},
                     {"command_line", argv},
                     {"mode", to_string(Mode::Antichain)},
                     {"budget", b.to_json()},
                     {"result", j},
                     {"entries", entries},
                     {"wall_clock_ms", ms.count()}},
                    manifest);
  }
  switch (c.fmt()) {
    case Format::Json:
      out << j.dump(2) << "\n";
      break;
    case Format::Csv:
      out << "n,exact,lower,upper,lower_certificate,upper_certificate\n"
          << csv_row({std::to_string(n), r.exact ? "true" : "false", std::to_string(r.lower), std::to_string(r.upper),
                      lower_path, upper_path})
          << "\n";
      break;
    case Format::Text:
      if (r.exact) {
        out << "s_inf(" << n << ") = " << r.value << "\n";
      } else {
        out << "s_inf(" << n << ") in [" << r.lower << ", " << r.upper << "] (" << r.resource << " limit reached)\n";
      }
      if (!lower_path.empty()) {
        out << "  not generating: constant " << r.lower_cert->hbar << ", certificate " << lower_path << "\n";
      }
      if (!upper_path.empty()) {
        out << "  generating: constant " << r.upper_cert->hbar << ", certificate " << upper_path << "\n";
      }
      break;
  }
  return r.exact ? kExitYes : kExitBudget;
}

// ---------------------------------------------------------------- frontier and nets

int cmd_frontier(std::size_t n, const std::string& t_text, const Common& c, const FrontierLimits& lim,
                 std::ostream& out) {
  if (n == 0) throw UsageError("n must be positive");
  const Rational t = parse_rational_arg(t_text);
  const FrontierSet F = minimal_frontier(n, t, lim);
  switch (c.fmt()) {
    case Format::Json:
      out << json{{"n", n}, {"threshold", t.str()}, {"minimal", vecs_json(F.minimal)}}.dump(2) << "\n";
      break;
    case Format::Csv:
      out << "vector,harmonic_mean\n";
      for (const auto& v : F.minimal) out << csv_row({literal(v), harmonic_mean(v).str()}) << "\n";
      break;
    case Format::Text:
      out << "minimal vectors with harmonic mean > " << t.mixed_str() << " for n = " << n << ": " << F.minimal.size()
          << "\n";
      for (const auto& v : F.minimal) out << "  " << to_string(v) << "\n";
      break;
  }
  return kExitYes;
}

json net_json(const HarmonicNet& net) {
  return {{"type", "harmonic_net"}, {"n", net.n}, {"threshold", net.t.str()}, {"net", vecs_json(net.net)}};
}

int cmd_net(std::size_t n, const std::string& t_text, const std::string& file, bool suggest, const std::string& out_path,
            const Common& c, std::ostream& out) {
  if (n == 0) throw UsageError("n must be positive");
  require_tier(n, 5, 6, c.allow_slow, c.allow_long, "net");
  const Rational t = parse_rational_arg(t_text);
  HarmonicNet net{n, t, {}};
  if (suggest) {
    if (!file.empty()) throw UsageError("--suggest builds a net; do not pass FILE");
    net.net = suggest_net(n, t);
  } else if (!file.empty()) {
    try {
      net = load_net(file);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    if (net.n != n || net.t != t) {
      throw UsageError(file + " is a net for n = " + std::to_string(net.n) + ", threshold " + net.t.str());
    }
  } else {
    net.net = curated_net(n);
    if (net.net.empty()) throw UsageError("no shipped net for n = " + std::to_string(n) + "; pass FILE or --suggest");
  }
  if (!out_path.empty()) save_net(net, out_path);
  const VerifyReport r = verify_net(net);
  switch (c.fmt()) {
    case Format::Json: {
      json j = net_json(net);
      j["report"] = report_json(file, "harmonic_net", r);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "vector,ok\n";
      for (std::size_t i = 0; i < net.net.size(); ++i) {
        const bool bad = std::find(r.failing_rows().begin(), r.failing_rows().end(), i) != r.failing_rows().end();
        out << csv_row({literal(net.net[i]), bad ? "false" : "true"}) << "\n";
      }
      break;
    case Format::Text:
      out << (r.ok ? "PASS " : "FAIL ") << r.statement << " with " << net.net.size() << " net elements\n";
      for (std::size_t i = 0; i < net.net.size(); ++i) out << "  " << to_string(net.net[i]) << "\n";
      for (const auto& row : r.rows) {
        for (const auto& p : row.problems) out << "  element " << row.row << ": " << p << "\n";
      }
      for (const auto& p : r.problems) out << "  " << p << "\n";
      if (!out_path.empty()) out << "  written to " << out_path << "\n";
      break;
  }
  return r.ok ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------- analysis

int cmd_phi(std::size_t n, bool want_int, bool want_real, double tol, const Common& c, std::ostream& out) {
  if (n == 0) throw UsageError("n must be positive");
  if (!want_int && !want_real) want_int = want_real = true;
  std::optional<VarphiEval> vi;
  std::optional<PhiEval> pr;
  if (want_int) vi = varphi_int(n);
  if (want_real) pr = phi_real(n, tol);
  json j = {{"n", n}};
  if (vi) j["integer"] = {{"value", vi->value.str()}, {"k_star", vi->k_star}};
  if (pr) {
    j["real"] = {{"value", fmt(pr->value, 20)},
                 {"x_star", fmt(pr->x_star, 20)},
                 {"error", fmt(pr->error, 3)},
                 {"boundary", pr->boundary},
                 {"one_plus_floor", (1 + static_cast<BigInt>(floor(pr->value))).str()}};
  }
  switch (c.fmt()) {
    case Format::Json:
      out << j.dump(2) << "\n";
      break;
    case Format::Csv:
      out << "n,integer_max,k_star,real_max,x_star,one_plus_floor\n"
          << csv_row({std::to_string(n), vi ? vi->value.str() : "", vi ? std::to_string(vi->k_star) : "",
                      pr ? fmt(pr->value) : "", pr ? fmt(pr->x_star) : "",
                      pr ? j["real"]["one_plus_floor"].get<std::string>() : ""})
          << "\n";
      break;
    case Format::Text:
      if (vi) out << "integer max over 0 < k < n: " << vi->value.str() << " at k = " << vi->k_star << "\n";
      if (pr) {
        out << "real max over 1 <= x <= n: " << fmt(pr->value) << " at x = " << fmt(pr->x_star)
            << (pr->boundary ? " (boundary)" : "") << ", error <= " << fmt(pr->error, 3) << "\n";
        out << "1 + floor: " << j["real"]["one_plus_floor"].get<std::string>() << "\n";
      }
      break;
  }
  return kExitYes;
}

int cmd_bounds(std::size_t n, const Common& c, std::ostream& out) {
  if (n == 0) throw UsageError("n must be positive");
  const BoundInterval b = phi_asymptotic_bounds(n);
  const FactorialBounds f = ln_factorial_bounds(n);
  const PhiEval p = phi_real(n + 1);
  const Real ln_phi = log(p.value);
  const Real err = p.error / p.value;
  const bool sandwich = b.lower + err < ln_phi && ln_phi + err < b.upper;
  const bool bracket = b.x_lo < p.x_star && p.x_star < b.x_hi;
  const bool below_factorial = f.ln_phi_upper < f.lower;
  const json j = {{"n", n},
                  {"in_validity_range", b.in_validity_range},
                  {"ln_phi_next", fmt(ln_phi, 20)},
                  {"ln_phi_next_error", fmt(err, 3)},
                  {"lower", fmt(b.lower, 20)},
                  {"upper", fmt(b.upper, 20)},
                  {"sandwich_holds", sandwich},
                  {"argmax", fmt(p.x_star, 20)},
                  {"argmax_lower", fmt(b.x_lo, 20)},
                  {"argmax_upper", fmt(b.x_hi, 20)},
                  {"argmax_bracket_holds", bracket},
                  {"ln_factorial_lower", fmt(f.lower, 20)},
                  {"ln_factorial_upper", fmt(f.upper, 20)},
                  {"ln_phi_upper", fmt(f.ln_phi_upper, 20)},
                  {"phi_below_factorial", below_factorial}};
  switch (c.fmt()) {
    case Format::Json:
      out << j.dump(2) << "\n";
      break;
    case Format::Csv: {
      std::vector<std::string> keys, vals;
      for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
        vals.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << csv_row(keys) << "\n" << csv_row(vals) << "\n";
      break;
    }
    case Format::Text:
      out << "n = " << n << (b.in_validity_range ? "" : " (outside the range n >= 51 where the bounds are proved)")
          << "\n";
      out << "  ln of the real max at n+1: " << fmt(ln_phi) << " (relative error " << fmt(err, 3) << ")\n";
      out << "  asymptotic bounds: [" << fmt(b.lower) << ", " << fmt(b.upper) << "] "
          << (sandwich ? "holds" : "does not hold") << "\n";
      out << "  argmax " << fmt(p.x_star) << " in [" << fmt(b.x_lo) << ", " << fmt(b.x_hi) << "] "
          << (bracket ? "holds" : "does not hold") << "\n";
      out << "  ln n! in [" << fmt(f.lower) << ", " << fmt(f.upper) << "]\n";
      out << "  upper bound on ln of the real max at n: " << fmt(f.ln_phi_upper)
          << (below_factorial ? " (below ln n!)" : " (not below ln n!)") << "\n";
      break;
  }
  if (!b.in_validity_range) return kExitYes;
  return sandwich && bracket ? kExitYes : kExitNo;
}

const WeightReferenceRow* weight_reference(std::size_t n) {
  for (const auto& r : weight_reference_table()) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

bool documented(const std::string& where) {
  const auto& list = known_discrepancies();
  return std::any_of(list.begin(), list.end(), [&](const KnownDiscrepancy& d) { return d.where == where; });
}

struct Diff {
  std::string table;
  std::string where;
  std::string printed;
  std::string computed;
  bool documented = false;
};

json diff_json(const Diff& d) {
  return {{"table", d.table}, {"where", d.where}, {"printed", d.printed}, {"computed", d.computed},
          {"documented", d.documented}};
}

std::string two(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << x;
  return s.str();
}

std::vector<Diff> weight_diffs(std::size_t n, const WeightParams& w) {
  std::vector<Diff> out;
  const WeightReferenceRow* ref = weight_reference(n);
  if (ref == nullptr) return out;
  if (w.anomalous) {
    out.push_back({"weights", "weight parameter table, n=3", "lambda " + two(ref->lambda), "boundary case, no interior lambda",
                   documented("weight parameter table, n=3")});
    return out;
  }
  // Printed values carry two decimals, so agreement means within 0.01.
  auto cmp = [&](const std::string& name, double printed, const Real& got, const std::string& key) {
    if (std::abs(num(got) - printed) <= 0.01 + 1e-9) return;
    const std::string where = key.empty() ? name + " at n=" + std::to_string(n) : key;
    out.push_back({"weights", where, two(printed), two(num(got)), !key.empty() && documented(key)});
  };
  cmp("lambda", ref->lambda, w.lambda, "");
  cmp("phi at lambda", ref->phi_at_lambda, w.phi_at_lambda, "");
  cmp("c_lambda", ref->c_lambda, w.c_at_rounded_lambda, "");
  cmp("comparison", ref->comparison, w.comparison, "weight parameter table, (lambda^{n-1}-1)/(lambda-1)");
  return out;
}

int cmd_weights(std::size_t n, const Common& c, std::ostream& out) {
  if (n < 3) throw UsageError("weights needs n >= 3");
  const WeightParams w = weight_params(n);
  std::optional<CrucialReport> cr;
  if (n >= 4) cr = crucial_inequality_check(n);
  const std::vector<Diff> diffs = weight_diffs(n, w);
  const bool undocumented = std::any_of(diffs.begin(), diffs.end(), [](const Diff& d) { return !d.documented; });
  json j = {{"n", n},
            {"lambda", num(w.lambda)},
            {"phi_at_lambda", num(w.phi_at_lambda)},
            {"c_lambda", num(w.c_lambda)},
            {"c_at_rounded_lambda", num(w.c_at_rounded_lambda)},
            {"comparison", num(w.comparison)},
            {"boundary", w.anomalous}};
  if (cr) {
    j["crucial_inequality"] = cr->ok;
    j["zeta_residual"] = num(cr->zeta_residual);
    j["x_c"] = num(cr->x_c);
  }
  json dj = json::array();
  for (const auto& d : diffs) dj.push_back(diff_json(d));
  j["differences"] = dj;
  switch (c.fmt()) {
    case Format::Json:
      out << j.dump(2) << "\n";
      break;
    case Format::Csv:
      out << "n,lambda,phi_at_lambda,c_lambda,c_at_rounded_lambda,comparison,crucial_inequality\n"
          << csv_row({std::to_string(n), fmt(w.lambda, 8), fmt(w.phi_at_lambda, 8), fmt(w.c_lambda, 8),
                      fmt(w.c_at_rounded_lambda, 8), fmt(w.comparison, 8), cr ? (cr->ok ? "true" : "false") : ""})
          << "\n";
      break;
    case Format::Text:
      out << "n = " << n << (w.anomalous ? " (boundary case: no maximum inside (1, n))" : "") << "\n";
      out << "  lambda = " << fmt(w.lambda) << "\n";
      out << "  phi_n(lambda) = " << fmt(w.phi_at_lambda) << "\n";
      out << "  c_lambda = " << fmt(w.c_lambda) << " (" << fmt(w.c_at_rounded_lambda) << " at lambda rounded to 0.01)\n";
      out << "  (lambda^{n-1}-1)/(lambda-1) = " << fmt(w.comparison) << "\n";
      if (cr) {
        out << "  zeta(c_lambda) - phi_n(lambda) = " << fmt(cr->zeta_residual, 3) << "\n";
        out << "  weight inequality for 1 < k < n: " << (cr->ok ? "holds" : "FAILS") << "\n";
        for (const auto& row : cr->rows) {
          out << "    k = " << row.k << ": " << fmt(row.lhs, 10) << " >= " << fmt(row.rhs, 10) << "\n";
        }
      }
      for (const auto& d : diffs) {
        out << "  differs from reference: " << d.where << ": printed " << d.printed << ", computed " << d.computed
            << (d.documented ? " (documented)" : " (UNDOCUMENTED)") << "\n";
      }
      break;
  }
  if (cr && !cr->ok) return kExitNo;
  return undocumented ? kExitNo : kExitYes;
}

int cmd_shift_witness(std::size_t n, const std::string& out_path, const Common& c, std::ostream& out) {
  if (n == 0) throw UsageError("n must be positive");
  require_tier(n, 9, 12, c.allow_slow, c.allow_long, "shift-witness");
  const ConstWitnessCert w = generate_shift_witness(n);
  const VerifyReport r = checked(w);
  if (!out_path.empty()) save_cert(w, out_path);
  switch (c.fmt()) {
    case Format::Json:
      out << cert_to_json(w).dump(2) << "\n";
      break;
    case Format::Csv:
      out << "n,bound,steps,certificate\n"
          << csv_row({std::to_string(n), std::to_string(w.hbar), std::to_string(w.steps.size()), out_path}) << "\n";
      break;
    case Format::Text:
      out << "shift construction for n = " << n << ": " << r.statement << " (verified, " << w.steps.size()
          << " steps)\n";
      out << "  s_inf(" << n << ") <= " << w.hbar - 1 << "\n";
      if (!out_path.empty()) out << "  certificate: " << out_path << "\n";
      break;
  }
  return kExitYes;
}

// ---------------------------------------------------------------- tables

std::optional<Rational> leading_rational(std::string s) {
  for (const char* p : {"<= ", ">= "}) {
    if (s.rfind(p, 0) == 0) s = s.substr(3);
  }
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_tables(const std::string& which, std::size_t n_max, bool no_supplied, const std::string& net_dir,
               const Common& c, std::ostream& out) {
  std::vector<Diff> diffs;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  TableOptions o;
  o.compute_sinf_up_to = c.allow_long ? 6 : c.allow_slow ? 5 : 4;
  o.check_s1_witness_up_to = c.allow_slow || c.allow_long ? 5 : 4;
  o.net_dir = net_dir;
  if (!no_supplied) {
    for (const auto& ref : reference_table()) {
      if (ref.s1.rfind(">= ", 0) == 0) {
        if (auto q = leading_rational(ref.s1)) o.s1_supplied[ref.n] = *q;
      }
    }
  }
  const auto& reference = reference_table();
  auto ref_row = [&](std::size_t n) -> const ReferenceRow* {
    for (const auto& r : reference) {
      if (r.n == n) return &r;
    }
    return nullptr;
  };
  auto compare = [&](const std::string& table, const std::string& where, const std::string& printed,
                     const std::string& computed) {
    if (printed != computed) diffs.push_back({table, where, printed, computed, documented(where)});
  };

  if (which == "1") {
    if (n_max == 0) n_max = 9;
    header = {"n", "integer_max", "one_plus_floor_real_max", "s_inf", "s_-1", "integer_max_next", "factorial"};
    for (const Table1Row& r : table1(n_max, o)) {
      rows.push_back({std::to_string(r.n), r.varphi.str(), r.one_plus_floor_phi.str(), r.s_inf_text, r.s1_text,
                      r.varphi_next.str(), r.factorial.str()});
      const ReferenceRow* ref = ref_row(r.n);
      if (ref == nullptr) continue;
      const std::string at = " at n=" + std::to_string(r.n);
      compare("1", "Table 1, integer max" + at, ref->varphi, r.varphi.str());
      compare("1", "Table 1, 1 + floor" + at, ref->one_plus_floor_phi, r.one_plus_floor_phi.str());
      compare("1", "Table 1, integer max at n+1" + at, ref->varphi_next, r.varphi_next.str());
      compare("1", "Table 1, n!" + at, ref->factorial, r.factorial.str());
      if (r.s_inf.exact) compare("1", "Table 1, s_inf" + at, ref->s_inf, r.s_inf_text);
      if (r.s1_exact) compare("1", "Table 1, s_-1" + at, ref->s1, r.s1_text);
    }
  } else if (which == "2") {
    if (n_max == 0) n_max = 8;
    header = {"n", "s_-1", "supplied", "defect"};
    for (const Table2Row& r : table2(n_max, o)) {
      rows.push_back({std::to_string(r.n), r.s1_text, r.s1_supplied ? "yes" : "no", r.defect_text});
      const ReferenceRow* ref = ref_row(r.n);
      if (ref == nullptr || ref->defect.empty()) continue;
      compare("2", "Table 2, defect at n=" + std::to_string(r.n), ref->defect, r.defect_text);
    }
  } else if (which == "weights") {
    header = {"n", "lambda", "phi_at_lambda", "c_lambda", "c_at_rounded_lambda", "comparison"};
    for (const auto& ref : weight_reference_table()) {
      if (n_max != 0 && ref.n > n_max) continue;
      const WeightParams w = weight_params(ref.n);
      rows.push_back({std::to_string(ref.n), two(num(w.lambda)), two(num(w.phi_at_lambda)), two(num(w.c_lambda)),
                      two(num(w.c_at_rounded_lambda)), two(num(w.comparison))});
      for (auto& d : weight_diffs(ref.n, w)) diffs.push_back(std::move(d));
    }
  } else {
    throw UsageError("unknown table '" + which + "' (expected 1, 2 or weights)");
  }

  const bool undocumented = std::any_of(diffs.begin(), diffs.end(), [](const Diff& d) { return !d.documented; });
  switch (c.fmt()) {
    case Format::Json: {
      json jr = json::array();
      for (const auto& r : rows) {
        json o2;
        for (std::size_t i = 0; i < header.size(); ++i) o2[header[i]] = r[i];
        jr.push_back(o2);
      }
      json jd = json::array();
      for (const auto& d : diffs) jd.push_back(diff_json(d));
      out << json{{"table", which}, {"rows", jr}, {"differences", jd}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << csv_row(header) << "\n";
      for (const auto& r : rows) out << csv_row(r) << "\n";
      break;
    case Format::Text: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& r : rows) width[i] = std::max(width[i], r[i].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
        }
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      out << "\ndifferences from the printed values: " << diffs.size() << "\n";
      for (const auto& d : diffs) {
        out << "  " << d.where << ": printed " << d.printed << ", computed " << d.computed
            << (d.documented ? " (documented)" : " (UNDOCUMENTED)") << "\n";
      }
      break;
    }
  }
  return undocumented ? kExitNo : kExitYes;
}

}  // namespace

// ---------------------------------------------------------------- cache

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

VerdictStore::VerdictStore(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_ / "certs");
  std::ifstream in(dir_ / "verdicts.jsonl");
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      CacheEntry e;
      e.canonical = NatVec(j.at("canonical").get<std::vector<Entry>>()).canonical();
      const auto v = j.at("verdict").get<std::string>();
      if (v == to_string(Outcome::Generating)) {
        e.verdict = Outcome::Generating;
      } else if (v == to_string(Outcome::NotGenerating)) {
        e.verdict = Outcome::NotGenerating;
      } else {
        throw std::runtime_error("not a definitive verdict");
      }
      e.stage = j.at("stage").get<std::size_t>();
      e.cert_digest = j.value("cert_digest", "");
      map_[e.canonical] = e;
    } catch (const std::exception& ex) {
      throw InputError((dir_ / "verdicts.jsonl").string() + ":" + std::to_string(no) + ": " + ex.what());
    }
  }
}

std::optional<CacheEntry> VerdictStore::find(const NatVec& h) const {
  std::lock_guard lock(mu_);
  auto it = map_.find(h.canonical());
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void VerdictStore::put(const CacheEntry& e) {
  std::lock_guard lock(mu_);
  auto it = map_.find(e.canonical);
  if (it != map_.end() && it->second.cert_digest == e.cert_digest) return;
  if (it != map_.end() && it->second.verdict != e.verdict) {
    throw InternalError("cache holds " + to_string(it->second.verdict) + " for " + to_string(e.canonical) +
                        " but the engine returned " + to_string(e.verdict));
  }
  map_[e.canonical] = e;
  std::ofstream out(dir_ / "verdicts.jsonl", std::ios::app);
  out << json{{"canonical", e.canonical.entries()},
              {"verdict", to_string(e.verdict)},
              {"stage", e.stage},
              {"cert_digest", e.cert_digest}}
             .dump()
      << "\n";
}

fs::path VerdictStore::cert_path(const std::string& d) const { return dir_ / "certs" / (d + ".json"); }

// ---------------------------------------------------------------- entry point

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide 0-generacy of natural vectors, with certificates", "zgen"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  DecideFlags df;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a vector is 0-generating");
  decide_cmd->add_option("vector", df.vector, "Vector literal, e.g. 2,3,7");
  decide_cmd->add_option("--mode", df.mode, "full or antichain")->capture_default_str();
  decide_cmd->add_option("--emit-cert", df.emit_cert, "Write a verified certificate to this file");
  decide_cmd->add_option("--cert-dir", df.cert_dir, "Write one verified certificate per vector here");
  decide_cmd->add_flag("--cross-check", df.cross_check, "Also run the other recursion routes and compare");
  decide_cmd->add_option("--batch", df.batch, "File with one vector per line");
  decide_cmd->add_option("--jobs", df.jobs, "Worker threads for --batch")->check(CLI::PositiveNumber);
  decide_cmd->add_option("--manifest", df.manifest, "Write a run manifest here");
  decide_cmd->add_option("--cache-dir", df.cache_dir, std::string("Verdict cache directory (default: $") + kCacheEnv + ")");
  decide_cmd->add_flag("--no-cache", df.no_cache, "Ignore the verdict cache");
  df.budget.add(decide_cmd);
  df.common.add(decide_cmd, true);

  Common vc;
  std::vector<std::string> verify_paths;
  auto* verify_cmd = app.add_subcommand("verify", "Check certificate or net files");
  verify_cmd->add_option("paths", verify_paths, "JSON files")->required();
  vc.add(verify_cmd, false);

  Common sc;
  BudgetFlags sb;
  std::size_t sinf_n = 0;
  std::string sinf_dir, sinf_manifest;
  auto* sinf_cmd = app.add_subcommand("sinf", "Largest constant that is not 0-generating");
  sinf_cmd->add_option("n", sinf_n, "Dimension")->required();
  sinf_cmd->add_option("--cert-dir", sinf_dir, "Certificate directory (default: $ZGEN_CACHE_DIR/certs or zgen-certs)");
  sinf_cmd->add_option("--manifest", sinf_manifest, "Write a run manifest here");
  sb.add(sinf_cmd);
  sc.add(sinf_cmd, true);

  Common fc;
  std::size_t fr_n = 0;
  std::string fr_t;
  FrontierLimits lim;
  auto* frontier_cmd = app.add_subcommand("frontier", "Minimal vectors with harmonic mean above T");
  frontier_cmd->add_option("n", fr_n, "Dimension")->required();
  frontier_cmd->add_option("t", fr_t, "Threshold, integer or p/q")->required();
  frontier_cmd->add_option("--max-coordinate", lim.max_coordinate, "Coordinate cap")->capture_default_str();
  frontier_cmd->add_option("--max-size", lim.max_size, "Frontier size cap")->capture_default_str();
  fc.add(frontier_cmd, false);

  Common nc;
  std::size_t net_n = 0;
  std::string net_t, net_file, net_out;
  bool net_suggest = false;
  auto* net_cmd = app.add_subcommand("net", "Verify a net: it covers the frontier and every member is 0-generating");
  net_cmd->add_option("n", net_n, "Dimension")->required();
  net_cmd->add_option("t", net_t, "Threshold")->required();
  net_cmd->add_option("file", net_file, "Net file (default: the shipped net for n)");
  net_cmd->add_flag("--suggest", net_suggest, "Build a net by shrinking frontier elements");
  net_cmd->add_option("--out", net_out, "Save the net here");
  nc.add(net_cmd, true);

  Common pc;
  std::size_t phi_n = 0;
  bool phi_int = false, phi_real_flag = false;
  double phi_tol = 1e-13;
  auto* phi_cmd = app.add_subcommand("phi", "Integer and real maxima of (x^{n-x}-1)/(x-1)");
  phi_cmd->add_option("n", phi_n, "n")->required();
  phi_cmd->add_flag("--int", phi_int, "Integer maximum only");
  phi_cmd->add_flag("--real", phi_real_flag, "Real maximum only");
  phi_cmd->add_option("--tol", phi_tol, "Tolerance for the real maximum");
  pc.add(phi_cmd, false);

  Common bc;
  std::size_t bounds_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Asymptotic bounds on the real maximum and on ln n!");
  bounds_cmd->add_option("n", bounds_n, "n")->required();
  bc.add(bounds_cmd, false);

  Common wc;
  std::size_t weights_n = 0;
  auto* weights_cmd = app.add_subcommand("weights", "Weight parameters and the weight inequality");
  weights_cmd->add_option("n", weights_n, "n")->required();
  wc.add(weights_cmd, false);

  Common xc;
  std::size_t shift_n = 0;
  std::string shift_out;
  auto* shift_cmd = app.add_subcommand("shift-witness", "Generating certificate from the shift construction");
  shift_cmd->alias("witness4");
  shift_cmd->add_option("n", shift_n, "Dimension")->required();
  shift_cmd->add_option("--out", shift_out, "Save the certificate here");
  xc.add(shift_cmd, true);

  Common tc;
  std::string which;
  std::size_t tables_n = 0;
  bool no_supplied = false;
  std::string net_dir;
  auto* tables_cmd = app.add_subcommand("tables", "Recompute a reference table and report differences");
  tables_cmd->add_option("which", which, "1, 2 or weights")->required();
  tables_cmd->add_option("--max-n", tables_n, "Last row");
  tables_cmd->add_flag("--no-supplied", no_supplied, "Use only computed lower bounds on s_-1");
  tables_cmd->add_option("--net-dir", net_dir, "Directory with a<n>.json nets");
  tc.add(tables_cmd, true);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*decide_cmd) return cmd_decide(df, args, out);
    if (*verify_cmd) return cmd_verify(verify_paths, vc, out);
    if (*sinf_cmd) return cmd_sinf(sinf_n, sc, sb, sinf_dir, sinf_manifest, args, out);
    if (*frontier_cmd) return cmd_frontier(fr_n, fr_t, fc, lim, out);
    if (*net_cmd) return cmd_net(net_n, net_t, net_file, net_suggest, net_out, nc, out);
    if (*phi_cmd) return cmd_phi(phi_n, phi_int, phi_real_flag, phi_tol, pc, out);
    if (*bounds_cmd) return cmd_bounds(bounds_n, bc, out);
    if (*weights_cmd) return cmd_weights(weights_n, wc, out);
    if (*shift_cmd) return cmd_shift_witness(shift_n, shift_out, xc, out);
    if (*tables_cmd) return cmd_tables(which, tables_n, no_supplied, net_dir, tc, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TierError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitTier;
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const FrontierOverflow& e) {
    err << "limit reached: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace zgen::cli
