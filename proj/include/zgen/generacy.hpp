#ifndef ZGEN_GENERACY_HPP_
#define ZGEN_GENERACY_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "zgen/nvec.hpp"

namespace zgen {

// Full keeps every reachable vector; Antichain keeps only minimal ones.
enum class Mode { Full, Antichain };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct Budget {
  std::uint64_t max_tuples = 1'000'000'000;
  std::chrono::milliseconds max_wall{600'000};
  std::uint64_t max_stages = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_set_size = 50'000'000;
};

enum class Outcome { Generating, NotGenerating, BudgetExceeded };

std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::NotGenerating;
  // Generating: stage at which 0 entered; NotGenerating: fixpoint stage; otherwise stage reached.
  std::size_t stage = 0;
  // Generating (general recursion): pool index that received 0.
  std::size_t witness_index = 0;
  // BudgetExceeded: "tuples", "wall", "stages", "set_size" or "box".
  std::string resource;
  std::uint64_t tuples = 0;

  [[nodiscard]] bool definitive() const { return outcome != Outcome::BudgetExceeded; }
};

// One derivation step of an engine run.
struct Derivation {
  // General: the pool element; constant: the new orbit element f.
  NatVec point;
  // General: pool index; constant: unused.
  std::size_t index = 0;
  std::size_t birth = 0;
  // General: 1_i seed with no parts.
  bool seed = false;
  // General: n summands, one per pool; constant: k summands.
  std::vector<std::size_t> parts;
  // The summands as they enter the sum (constant case: coordinate-permuted copies).
  std::vector<NatVec> part_vectors;
  // General: the sum; constant: fhat = indicator_tail(n, k) + sum of parts.
  NatVec sum;
  std::size_t k = 0;
};

class BudgetMeter;

// Evolving per-index reach sets of the general recursion.
class ReachState {
 public:
  explicit ReachState(NatVec h, Mode mode = Mode::Antichain, bool provenance = false);
  ReachState(ReachState&&) noexcept;
  ReachState& operator=(ReachState&&) noexcept;
  ~ReachState();

  [[nodiscard]] const NatVec& h() const;
  [[nodiscard]] Mode mode() const;
  [[nodiscard]] std::size_t stage() const;
  // Pool i at the current stage; in Antichain mode only its minimal elements.
  [[nodiscard]] std::vector<NatVec> pool(std::size_t i) const;
  // Elements added to pool i by the last step.
  [[nodiscard]] std::vector<NatVec> fresh(std::size_t i) const;
  [[nodiscard]] std::optional<std::size_t> zero_index() const;
  // False once a step added nothing.
  [[nodiscard]] bool changed() const;
  [[nodiscard]] bool has_provenance() const;
  [[nodiscard]] const std::vector<Derivation>& derivations() const;
  // Derivation of the zero vector, if reached with provenance on.
  [[nodiscard]] std::optional<std::size_t> zero_derivation() const;

  void step(BudgetMeter& meter);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// The single orbit-closed set of the constant-case recursion.
class ConstReach {
 public:
  ConstReach(Entry c, std::size_t n, Mode mode = Mode::Antichain, bool provenance = false);
  ConstReach(ConstReach&&) noexcept;
  ConstReach& operator=(ConstReach&&) noexcept;
  ~ConstReach();

  [[nodiscard]] Entry c() const;
  [[nodiscard]] std::size_t n() const;
  [[nodiscard]] Mode mode() const;
  [[nodiscard]] std::size_t stage() const;
  // Full: every member; Antichain: canonical minimal representatives.
  [[nodiscard]] std::vector<NatVec> members() const;
  [[nodiscard]] bool has_zero() const;
  [[nodiscard]] bool changed() const;
  [[nodiscard]] bool has_provenance() const;
  [[nodiscard]] const std::vector<Derivation>& derivations() const;
  [[nodiscard]] std::optional<std::size_t> zero_derivation() const;

  void step(BudgetMeter& meter);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b);
  // Throws BudgetExhausted when a limit is crossed.
  void charge(std::uint64_t tuples);
  void check_set_size(std::uint64_t size) const;
  void check_stage(std::uint64_t stage) const;
  [[nodiscard]] std::uint64_t tuples() const { return tuples_; }
  [[nodiscard]] std::chrono::milliseconds elapsed() const;

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t tuples_ = 0;
  std::uint64_t next_clock_check_ = 0;
};

struct BudgetExhausted {
  std::string resource;
};

// Single-step wrappers with an unlimited budget.
void step_general(ReachState& state);
void step_const(ConstReach& state);

struct EngineOptions {
  Mode mode = Mode::Antichain;
  Budget budget;
  bool provenance = false;
};

struct GeneralDecision {
  Verdict verdict;
  std::shared_ptr<ReachState> state;
};

struct ConstDecision {
  Verdict verdict;
  std::shared_ptr<ConstReach> state;
};

GeneralDecision decide_general(const NatVec& h, const EngineOptions& options = {});
ConstDecision decide_const(Entry c, std::size_t n, const EngineOptions& options = {});

// Definitive verdicts keyed by canonical form; safe for concurrent use.
class DecisionCache {
 public:
  std::optional<Verdict> find(const NatVec& h) const;
  void insert(const NatVec& h, const Verdict& v);
  [[nodiscard]] std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<NatVec, Verdict> map_;
};

struct DecideOptions {
  EngineOptions engine;
  // Constant inputs: also run the general recursion and require agreement.
  bool cross_check = false;
  DecisionCache* cache = nullptr;
};

// Constant inputs go to the constant recursion, others to the general one.
Verdict decide(const NatVec& h, const DecideOptions& options = {});

}  // namespace zgen

#endif  // ZGEN_GENERACY_HPP_
