#ifndef ZGEN_CERTIFICATES_HPP_
#define ZGEN_CERTIFICATES_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "zgen/generacy.hpp"
#include "zgen/nvec.hpp"

namespace zgen {

// A summand of a constant-witness step: either the f of an earlier step
// (by 0-based index) or an explicit vector in the orbit of an earlier f.
using StepPart = std::variant<std::size_t, NatVec>;

struct ConstStep {
  NatVec f;
  NatVec fhat;
  std::size_t k = 0;
  std::vector<StepPart> parts;
  // Absent: any permutation is accepted.
  std::optional<Permutation> sigma;
};

// Proves that the constant hbar on n coordinates is 0-generating.
struct ConstWitnessCert {
  std::size_t n = 0;
  Entry hbar = 0;
  std::vector<ConstStep> steps;
  nlohmann::json meta = nlohmann::json::object();
};

struct Production {
  std::size_t target = 0;
  NatVec produced;
};

struct GeneralRow {
  // One vector per index j: 1_j or an earlier production for j.
  std::vector<NatVec> selected;
  NatVec sum;
  std::vector<Production> productions;
};

// Proves that hbar is 0-generating.
struct GeneralWitnessCert {
  std::size_t n = 0;
  NatVec hbar;
  std::vector<GeneralRow> rows;
  nlohmann::json meta = nlohmann::json::object();
};

// Proves that the constant hbar is not 0-generating: the up-set of M's
// orbit absorbs one recursion step and misses 0. M is stored up to orbit;
// the verifier adds the first-stage seed 1_n - 1_{n-1} itself.
struct NonGenInvariantCert {
  std::size_t n = 0;
  Entry hbar = 0;
  std::vector<NatVec> M;
  nlohmann::json meta = nlohmann::json::object();
};

// Per-index variant for an arbitrary hbar: up-sets of pools[i] contain 1_i,
// miss 0 and absorb every production aimed at index i.
struct GeneralInvariantCert {
  std::size_t n = 0;
  NatVec hbar;
  std::vector<std::vector<NatVec>> pools;
  nlohmann::json meta = nlohmann::json::object();
};

using Certificate = std::variant<ConstWitnessCert, GeneralWitnessCert, NonGenInvariantCert, GeneralInvariantCert>;

struct RowResult {
  // 0-based step or row number.
  std::size_t row = 0;
  bool ok = true;
  std::vector<std::string> problems;
};

struct VerifyReport {
  bool ok = false;
  // What a pass proves, e.g. "constant 4 on n=3 is 0-generating".
  std::string statement;
  std::vector<RowResult> rows;
  // Problems not tied to one row.
  std::vector<std::string> problems;

  // "pass", "anomalous-row" (some row fails) or "fail".
  [[nodiscard]] std::string classification() const;
  [[nodiscard]] std::optional<std::size_t> first_failing_row() const;
  [[nodiscard]] std::vector<std::size_t> failing_rows() const;
};

// Malformed certificate structure, including bad part references.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VerifyReport verify_const_witness(const ConstWitnessCert& cert);
VerifyReport verify_general_witness(const GeneralWitnessCert& cert);
VerifyReport verify_nongen_invariant(const NonGenInvariantCert& cert);
VerifyReport verify_general_invariant(const GeneralInvariantCert& cert);
VerifyReport verify(const Certificate& cert);

// Throw CertificateError unless the run reached 0 with provenance on.
ConstWitnessCert extract_witness(const ConstReach& run);
GeneralWitnessCert extract_witness(const ReachState& run);
// Throw CertificateError unless the run is at a fixpoint without 0.
NonGenInvariantCert extract_nongen_invariant(const ConstReach& run);
GeneralInvariantCert extract_nongen_invariant(const ReachState& run);

// Witness for the constant 1 + varphi(n+1) built from the double sequence
// f_{k,m+1} = 1_{n\k} + k * S(f_{k,m}).
ConstWitnessCert generate_shift_witness(std::size_t n);

// Schema v1. Parsing errors name the offending JSON path.
Certificate cert_from_json(const nlohmann::json& j);
nlohmann::json cert_to_json(const Certificate& cert);
// Parse errors include the line and column.
Certificate load_cert(const std::filesystem::path& path);
void save_cert(const Certificate& cert, const std::filesystem::path& path);

std::string cert_type(const Certificate& cert);

}  // namespace zgen

#endif  // ZGEN_CERTIFICATES_HPP_
