// Fixture corpus helpers shared by the unit tests and the acceptance binary.
#ifndef ZGEN_TESTS_FIXTURES_HPP_
#define ZGEN_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "zgen/certificates.hpp"
#include "zgen/generacy.hpp"

namespace fixtures {

using nlohmann::json;
namespace fs = std::filesystem;

inline const fs::path kDir = "data/certificates";

struct Discrepancy {
  std::string file;
  std::vector<std::size_t> rows;
  zgen::NatVec vector;
  std::string note;
};

inline std::vector<fs::path> certificate_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kDir)) {
    if (e.path().extension() == ".json" && e.path().filename() != "known_discrepancies.json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<std::string, Discrepancy> discrepancies() {
  std::ifstream in(kDir / "known_discrepancies.json");
  const json j = json::parse(in);
  std::map<std::string, Discrepancy> out;
  for (const auto& d : j.at("discrepancies")) {
    Discrepancy x;
    x.file = d.at("file").get<std::string>();
    x.rows = d.at("rows").get<std::vector<std::size_t>>();
    x.vector = zgen::NatVec(d.at("vector").get<std::vector<zgen::Entry>>());
    x.note = d.at("note").get<std::string>();
    out[x.file] = x;
  }
  return out;
}

inline json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

// Numeric leaves of the proof body. The claim itself (n, hbar) and the
// free-form meta are excluded: raising hbar keeps a witness valid.
inline void proof_leaves(json& j, std::vector<json*>& out, bool top) {
  if (j.is_number_integer()) {
    out.push_back(&j);
  } else if (j.is_array()) {
    for (auto& x : j) proof_leaves(x, out, false);
  } else if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (top && (k == "n" || k == "hbar" || k == "meta" || k == "type")) continue;
      proof_leaves(v, out, false);
    }
  }
}

// Row of a leaf, for telling apart mutations inside a known bad row.
inline std::size_t row_of(json& body, const json* leaf) {
  const char* key = body.contains("steps") ? "steps" : body.contains("rows") ? "rows" : nullptr;
  if (key == nullptr) return static_cast<std::size_t>(-1);
  for (std::size_t r = 0; r < body.at(key).size(); ++r) {
    std::vector<json*> in_row;
    proof_leaves(body.at(key)[r], in_row, false);
    if (std::find(in_row.begin(), in_row.end(), leaf) != in_row.end()) return r;
  }
  return static_cast<std::size_t>(-1);
}

struct FuzzResult {
  std::size_t mutations = 0;
  std::size_t rejected = 0;
  std::vector<std::string> accepted;
};

// Single-entry mutations of the proof body. A mutation is rejected when the
// certificate fails to parse or its failing-row set differs from the
// unmutated one; for a fixture that passes this means any failure.
// Mutations inside a known bad row are skipped, since one of them can
// restore the correct entry.
inline FuzzResult mutation_fuzz(const fs::path& file, std::size_t count, std::uint64_t seed,
                                const std::vector<std::size_t>& known_rows = {}) {
  const json base = read_json(file);
  const zgen::VerifyReport baseline = zgen::verify(zgen::cert_from_json(base));
  const std::vector<std::size_t> base_rows = baseline.failing_rows();
  std::mt19937_64 rng(seed);
  FuzzResult out;
  while (out.mutations < count) {
    json j = base;
    std::vector<json*> leaves;
    proof_leaves(j, leaves, true);
    json* leaf = leaves[rng() % leaves.size()];
    if (std::find(known_rows.begin(), known_rows.end(), row_of(j, leaf)) != known_rows.end()) continue;
    const long long old = leaf->get<long long>();
    long long v = old;
    while (v == old) v = static_cast<long long>(rng() % static_cast<std::uint64_t>(old + 3));
    *leaf = v;
    ++out.mutations;
    try {
      const zgen::VerifyReport r = zgen::verify(zgen::cert_from_json(j));
      if (r.ok || (!baseline.ok && r.failing_rows() == base_rows && r.problems == baseline.problems)) {
        out.accepted.push_back(j.dump());
      } else {
        ++out.rejected;
      }
    } catch (const std::exception&) {
      ++out.rejected;
    }
  }
  return out;
}

// Runs the engine on a vector and returns its extracted, verified witness.
inline zgen::VerifyReport regenerate(const zgen::NatVec& h, zgen::Certificate* out = nullptr) {
  zgen::EngineOptions o;
  o.provenance = true;
  zgen::Certificate cert;
  if (h.is_constant()) {
    auto d = zgen::decide_const(h[0], h.size(), o);
    if (d.verdict.outcome != zgen::Outcome::Generating) return {};
    cert = zgen::extract_witness(*d.state);
  } else {
    auto d = zgen::decide_general(h, o);
    if (d.verdict.outcome != zgen::Outcome::Generating) return {};
    cert = zgen::extract_witness(*d.state);
  }
  if (out) *out = cert;
  return zgen::verify(cert);
}

}  // namespace fixtures

#endif  // ZGEN_TESTS_FIXTURES_HPP_
