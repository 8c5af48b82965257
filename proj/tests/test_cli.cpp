#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "zgen/cli.hpp"
#include "zgen/extremal.hpp"

using namespace zgen;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run zgen_run(std::vector<std::string> args) {
  args.insert(args.begin(), "zgen");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "zgen_test_cli" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

struct NoCacheEnv {
  NoCacheEnv() { unsetenv(cli::kCacheEnv); }
};

}  // namespace

TEST_CASE("decide exit codes") {
  NoCacheEnv env;
  const fs::path d = scratch("decide");
  const Run gen = zgen_run({"decide", "2,3,7", "--emit-cert", (d / "out.json").string()});
  CHECK(gen.code == cli::kExitYes);
  CHECK(verify(load_cert(d / "out.json")).ok);
  CHECK(zgen_run({"decide", "9,9,9,9,10"}).code == cli::kExitNo);
  CHECK(zgen_run({"decide", "(2,3,6)"}).code == cli::kExitNo);
  CHECK(zgen_run({"decide", "0,5", "--emit-cert", (d / "zero.json").string()}).code == cli::kExitNo);
  CHECK(std::holds_alternative<GeneralInvariantCert>(load_cert(d / "zero.json")));
  CHECK(verify(load_cert(d / "zero.json")).ok);
  CHECK(zgen_run({"decide", "5,5,5,5", "--max-tuples", "10"}).code == cli::kExitBudget);
  CHECK(zgen_run({"decide", "2,x"}).code == cli::kExitUsage);
  CHECK(zgen_run({"decide"}).code == cli::kExitUsage);
  CHECK(zgen_run({"decide", "2,3", "--mode", "sideways"}).code == cli::kExitUsage);
  CHECK(zgen_run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(zgen_run({}).code == cli::kExitUsage);
  CHECK(zgen_run({"--help"}).code == 0);
}

TEST_CASE("tier refusals explain themselves") {
  NoCacheEnv env;
  const Run r = zgen_run({"sinf", "7"});
  CHECK(r.code == cli::kExitTier);
  CHECK(r.err.find("--allow-long") != std::string::npos);
  CHECK(zgen_run({"sinf", "5"}).code == cli::kExitTier);
  CHECK(zgen_run({"decide", "1,1,1,1,1,1"}).code == cli::kExitTier);
  CHECK(zgen_run({"net", "5", "9"}).code == cli::kExitTier);
}

TEST_CASE("cross-check agrees on small vectors") {
  NoCacheEnv env;
  for (const char* v : {"3,3,4", "4,4,4", "2,3,6", "5,5,5,5", "6,6,6,6", "2,2"}) {
    CAPTURE(v);
    const Run full = zgen_run({"decide", v, "--cross-check", "--mode", "full"});
    const Run anti = zgen_run({"decide", v, "--cross-check"});
    CHECK(full.code < 2);
    CHECK(full.code == anti.code);
    CHECK(full.code == (oracle::generating(oracle::to_vec(parse_vec(v))) ? 0 : 1));
  }
}

TEST_CASE("verify reports rows and exit status") {
  const fs::path d = scratch("verify");
  CHECK(zgen_run({"verify", (fixtures::kDir / "table_11.json").string()}).code == 0);
  CHECK(zgen_run({"verify", (fixtures::kDir / "m4_invariant.json").string()}).code == 0);
  CHECK(zgen_run({"verify", "data/nets/a4.json"}).code == 0);
  CHECK(zgen_run({"verify", "data/nets/a4_printed.json"}).code == 1);

  json j = fixtures::read_json(fixtures::kDir / "table_11.json");
  j["rows"][1]["sum"][0] = j["rows"][1]["sum"][0].get<int>() + 1;
  std::ofstream(d / "corrupt.json") << j.dump();
  const Run bad = zgen_run({"verify", (d / "corrupt.json").string(), "--format", "json"});
  CHECK(bad.code == cli::kExitNo);
  const json rep = json::parse(bad.out);
  CHECK_FALSE(rep["ok"].get<bool>());
  CHECK(rep["failing_rows"][0]["row"] == 1);

  const Run anomalous = zgen_run({"verify", (fixtures::kDir / "table_05.json").string()});
  CHECK(anomalous.code == cli::kExitNo);
  CHECK(anomalous.out.find("anomalous-row") != std::string::npos);

  std::ofstream(d / "broken.json") << "{\"type\": ";
  CHECK(zgen_run({"verify", (d / "broken.json").string()}).code == cli::kExitInput);
  CHECK(zgen_run({"verify", (d / "absent.json").string()}).code == cli::kExitInput);
}

TEST_CASE("sinf 4 prints the value and two certificates") {
  NoCacheEnv env;
  const fs::path d = scratch("sinf");
  const Run r = zgen_run({"sinf", "4", "--cert-dir", d.string(), "--manifest", (d / "manifest.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("s_inf(4) = 5") != std::string::npos);
  std::size_t certs = 0;
  for (const auto& e : fs::directory_iterator(d)) {
    if (e.path().filename() == "manifest.json") continue;
    ++certs;
    CHECK(r.out.find(e.path().string()) != std::string::npos);
    CHECK(verify(load_cert(e.path())).ok);
  }
  CHECK(certs == 2);
  const json m = fixtures::read_json(d / "manifest.json");
  CHECK(m["entries"].size() == 2);
  for (const auto& e : m["entries"]) CHECK(verify(load_cert(e["certificate"].get<std::string>())).ok);
}

TEST_CASE("tables") {
  const Run t2 = zgen_run({"tables", "2", "--format", "json"});
  CHECK(t2.code == 0);
  const json j = json::parse(t2.out);
  const char* expect[] = {"0", "<= 1/5", "<= 41/90", "<= 13/19", "<= 5/6", "<= 57/61"};
  REQUIRE(j["rows"].size() == 8);
  for (int i = 0; i < 3; ++i) CHECK(j["rows"][i]["defect"] == "0");
  for (int i = 3; i < 8; ++i) CHECK(j["rows"][i]["defect"] == expect[i - 2]);
  CHECK(j["differences"].empty());

  const Run t1 = zgen_run({"tables", "1", "--format", "json"});
  CHECK(t1.code == 0);
  const json k = json::parse(t1.out);
  REQUIRE(k["differences"].size() == 3);
  for (const auto& d : k["differences"]) {
    CHECK(d["documented"].get<bool>());
    CHECK(d["where"].get<std::string>().find("n!") != std::string::npos);
  }
  // Deterministic output.
  CHECK(zgen_run({"tables", "1", "--format", "json"}).out == t1.out);

  const Run tw = zgen_run({"tables", "weights", "--format", "json"});
  CHECK(tw.code == 0);
  for (const auto& d : json::parse(tw.out)["differences"]) CHECK(d["documented"].get<bool>());
  CHECK(zgen_run({"tables", "3"}).code == cli::kExitUsage);
}

TEST_CASE("weights 6 against the reference row") {
  const Run r = zgen_run({"weights", "6", "--format", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lambda"].get<double>() == doctest::Approx(2.34).epsilon(0.01 / 2.34));
  CHECK(j["c_at_rounded_lambda"].get<double>() == doctest::Approx(14.24).epsilon(0.01 / 14.24));
  CHECK(j["crucial_inequality"].get<bool>());
  CHECK(zgen_run({"weights", "3"}).code == 0);
  CHECK(zgen_run({"weights", "2"}).code == cli::kExitUsage);
}

TEST_CASE("analysis commands") {
  const json p = json::parse(zgen_run({"phi", "9", "--format", "json"}).out);
  CHECK(p["integer"]["value"] == "364");
  CHECK(p["real"]["one_plus_floor"] == "395");
  CHECK(zgen_run({"bounds", "60"}).code == 0);
  CHECK(zgen_run({"bounds", "100", "--format", "csv"}).code == 0);
  const json f = json::parse(zgen_run({"frontier", "3", "3", "--format", "json"}).out);
  CHECK(f["minimal"] == json::parse("[[2,3,7],[2,4,5],[3,3,4]]"));
  CHECK(zgen_run({"frontier", "5", "450/49"}).code == cli::kExitBudget);
  CHECK(zgen_run({"frontier", "3", "three"}).code == cli::kExitUsage);
}

TEST_CASE("JSON output round-trips through the loaders") {
  const fs::path d = scratch("roundtrip");
  const Run w = zgen_run({"shift-witness", "4", "--format", "json"});
  CHECK(w.code == 0);
  CHECK(verify(cert_from_json(json::parse(w.out))).ok);
  CHECK(zgen_run({"witness4", "3"}).code == 0);

  const Run n = zgen_run({"net", "3", "3", "--suggest", "--format", "json"});
  CHECK(n.code == 0);
  std::ofstream(d / "net.json") << n.out;
  const HarmonicNet net = load_net(d / "net.json");
  CHECK(verify_net(net).ok);
  CHECK(zgen_run({"net", "3", "3", (d / "net.json").string()}).code == 0);
  CHECK(zgen_run({"net", "4", "5", "data/nets/a4_printed.json"}).code == cli::kExitNo);
  CHECK(zgen_run({"net", "4", "5"}).code == 0);
}

TEST_CASE("batch runs match single runs and manifests reference verifying certificates") {
  NoCacheEnv env;
  const fs::path d = scratch("batch");
  std::ofstream(d / "in.txt") << "# comment\n2,3,7\n3,3,3\n\n0,4\n4,4,5\n5,5,5,5\n2,3,6\n";
  const Run r = zgen_run({"decide", "--batch", (d / "in.txt").string(), "--jobs", "4", "--format", "json", "--manifest",
                          (d / "m.json").string()});
  CHECK(r.code == 0);
  const json a = json::parse(r.out);
  REQUIRE(a.size() == 6);
  for (const auto& e : a) {
    const int single = zgen_run({"decide", e["input"].get<std::string>()}).code;
    CHECK((single == 0) == (e["verdict"] == "generating"));
  }
  const json m = fixtures::read_json(d / "m.json");
  CHECK(m["artifact_version"] == cli::kVersion);
  for (const auto& e : m["entries"]) {
    CHECK(e["certificate_verified"].get<bool>());
    CHECK(verify(load_cert(e["certificate"].get<std::string>())).ok);
  }
  std::ofstream(d / "bad.txt") << "2,3\n2,,3\n";
  const Run bad = zgen_run({"decide", "--batch", (d / "bad.txt").string()});
  CHECK(bad.code == cli::kExitInput);
  CHECK(bad.err.find(":2:") != std::string::npos);
}

TEST_CASE("cache coherence over 100 random vectors") {
  NoCacheEnv env;
  const fs::path d = scratch("cache");
  std::mt19937_64 rng(2024);
  std::vector<NatVec> hs;
  for (int i = 0; i < 100; ++i) hs.push_back(oracle::random_vec(rng, 1 + rng() % 3, 0, 7));
  auto literal = [](const NatVec& v) {
    const std::string s = to_string(v);
    return s.substr(1, s.size() - 2);
  };
  for (const auto& h : hs) zgen_run({"decide", literal(h), "--cache-dir", d.string()});
  // A permuted query hits the canonical entry.
  for (const auto& h : hs) {
    NatVec p(std::vector<Entry>(h.entries().rbegin(), h.entries().rend()));
    const Run r = zgen_run({"decide", literal(p), "--cache-dir", d.string(), "--format", "json"});
    const json j = json::parse(r.out);
    CHECK(j["cached"].get<bool>());
    const Verdict fresh = decide(p);
    CHECK(j["verdict"] == to_string(fresh.outcome));
    CHECK((r.code == 0) == oracle::generating(oracle::to_vec(p)));
  }
  // Stored digests name certificates that verify.
  std::ifstream in(d / "verdicts.jsonl");
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const json e = json::parse(line);
    CHECK(verify(load_cert(d / "certs" / (e["cert_digest"].get<std::string>() + ".json"))).ok);
  }
  CHECK(lines > 0);
}
