#ifndef ZGEN_EXTREMAL_HPP_
#define ZGEN_EXTREMAL_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zgen/certificates.hpp"
#include "zgen/generacy.hpp"
#include "zgen/nvec.hpp"
#include "zgen/rational.hpp"

namespace zgen {

// Largest c such that the constant c on n coordinates is not 0-generating.
struct SInfResult {
  std::size_t n = 0;
  // Exact: lower == upper == value. Otherwise lower <= s_inf(n) <= upper.
  bool exact = false;
  Entry value = 0;
  Entry lower = 0;
  Entry upper = 0;
  // Invariant for the constant `lower` (absent only when lower == 0).
  std::optional<NonGenInvariantCert> lower_cert;
  // Witness for the constant `upper + 1`.
  std::optional<ConstWitnessCert> upper_cert;
  // Resource that stopped the scan, if any.
  std::string resource;
};

// Scans c = 1, 2, ... until the first 0-generating constant. On a budget
// stop the upper end comes from the shift construction.
SInfResult s_inf(std::size_t n, const Budget& budget = {});

// Minimal monotone vectors x with sum 1/x(i) < n/t, i.e. harmonic mean > t.
struct FrontierSet {
  std::size_t n = 0;
  Rational t;
  // Lexicographically sorted antichain.
  std::vector<NatVec> minimal;
};

struct FrontierLimits {
  Entry max_coordinate = 1'000'000;
  std::size_t max_size = 100'000;
};

struct FrontierOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FrontierSet minimal_frontier(std::size_t n, const Rational& t, const FrontierLimits& limits = {});

// Vectors claimed 0-generating that together cover every harmonic mean > t.
struct HarmonicNet {
  std::size_t n = 0;
  Rational t;
  std::vector<NatVec> net;
};

HarmonicNet load_net(const std::filesystem::path& path);
void save_net(const HarmonicNet& net, const std::filesystem::path& path);

// The twelve vectors printed as the n=4 net. They miss six frontier
// elements at t=5, e.g. (3,5,7,9); curated_net(4) adds those.
std::vector<NatVec> printed_net_a4();
// A net at t = s_inf(n) for n <= 4 that passes verify_net; empty otherwise.
std::vector<NatVec> curated_net(std::size_t n);

// Returns true when the vector is 0-generating.
using GeneracyOracle = std::function<bool(const NatVec&)>;
// Engine decision backed by an extracted, verified witness.
bool certified_generating(const NatVec& h, const Budget& budget = {});

// Rows: one per net element (ok when 0-generating). Problems: frontier
// elements that dominate no net element. A pass proves s_{-1}(n) <= t.
VerifyReport verify_net(const HarmonicNet& net, const GeneracyOracle& oracle = {});

// Shrinks frontier elements one coordinate at a time while they stay
// 0-generating; the result is a net candidate, not necessarily minimal.
std::vector<NatVec> suggest_net(std::size_t n, const Rational& t, const GeneracyOracle& oracle = {});

// Harmonic mean of a vector that is not 0-generating; throws std::domain_error
// when the vector is 0-generating or has a zero entry.
Rational s1_lower_bound(const NatVec& x, const Budget& budget = {});

struct DefectBound {
  std::size_t n = 0;
  Rational s1_lower;
  // 1 - n/s1_lower.
  Rational bound;
};
DefectBound defect_bound(std::size_t n, const Rational& s1_lower);

struct TableOptions {
  // s_inf is computed for n up to this value and bracketed above it.
  std::size_t compute_sinf_up_to = 5;
  // Nets are verified for n up to this value (at most 4).
  std::size_t verify_nets_up_to = 4;
  // Lower bounds on s_{-1} from witness vectors are checked up to this n.
  std::size_t check_s1_witness_up_to = 5;
  Budget budget;
  std::filesystem::path net_dir;
  // Externally supplied lower bounds on s_{-1}(n); used where they exceed
  // the computed bound and flagged in the row.
  std::map<std::size_t, Rational> s1_supplied;
};

struct Table1Row {
  std::size_t n = 0;
  BigInt varphi;
  BigInt one_plus_floor_phi;
  SInfResult s_inf;
  // Interval text such as "5", ">= 9 9/49" or "[42, 121]".
  std::string s_inf_text;
  std::string s1_text;
  // Exact when nets verify; otherwise the certified lower bound.
  Rational s1_lower;
  bool s1_exact = false;
  bool s1_supplied = false;
  BigInt varphi_next;
  BigInt factorial;
};

struct Table2Row {
  std::size_t n = 0;
  std::string s1_text;
  Rational s1_lower;
  bool s1_supplied = false;
  Rational defect;
  // "0" when exact, "<= p/q" when only bounded.
  std::string defect_text;
};

std::vector<Table1Row> table1(std::size_t n_max, const TableOptions& options = {});
std::vector<Table2Row> table2(std::size_t n_max, const TableOptions& options = {});

// Values printed in the source tables, kept apart from computed values.
struct ReferenceRow {
  std::size_t n = 0;
  std::string varphi;
  std::string one_plus_floor_phi;
  std::string s_inf;
  std::string s1;
  std::string varphi_next;
  std::string factorial;
  std::string defect;
};
const std::vector<ReferenceRow>& reference_table();

// Printed weight-method parameters, rounded to two decimals.
struct WeightReferenceRow {
  std::size_t n = 0;
  double lambda = 0;
  double phi_at_lambda = 0;
  double c_lambda = 0;
  double comparison = 0;
};
const std::vector<WeightReferenceRow>& weight_reference_table();

// One entry per printed value known to be wrong, with the corrected value.
struct KnownDiscrepancy {
  std::string where;
  std::string printed;
  std::string actual;
  std::string note;
};
const std::vector<KnownDiscrepancy>& known_discrepancies();

// Vectors printed as lower-bound witnesses for s_{-1}(n), keyed by n.
std::optional<NatVec> s1_witness_vector(std::size_t n);

}  // namespace zgen

#endif  // ZGEN_EXTREMAL_HPP_
