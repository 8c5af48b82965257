#ifndef ZGEN_CLI_HPP_
#define ZGEN_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zgen/generacy.hpp"
#include "zgen/nvec.hpp"

namespace zgen::cli {

// Exit codes. Decisions: 0 generating, 1 not generating, 2 budget exceeded.
// Checks: 0 pass, 1 fail. Codes >= 10 are usage or input errors.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 10;
inline constexpr int kExitTier = 11;
inline constexpr int kExitInput = 12;
inline constexpr int kExitInternal = 13;

inline constexpr const char* kVersion = "1.0.0";

// Environment variable naming the verdict cache directory.
inline constexpr const char* kCacheEnv = "ZGEN_CACHE_DIR";

struct CacheEntry {
  // Sorted ascending.
  NatVec canonical;
  Outcome verdict = Outcome::NotGenerating;
  std::size_t stage = 0;
  // Digest of the certificate stored under certs/, empty when none was made.
  std::string cert_digest;
};

// Verdict cache persisted as one JSON object per line in verdicts.jsonl.
// Only definitive verdicts are stored. Safe for concurrent use.
class VerdictStore {
 public:
  explicit VerdictStore(std::filesystem::path dir);
  [[nodiscard]] std::optional<CacheEntry> find(const NatVec& h) const;
  void put(const CacheEntry& e);
  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] std::filesystem::path cert_path(const std::string& digest) const;

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
  std::unordered_map<NatVec, CacheEntry> map_;
};

// 16 hex digits of FNV-1a over the text.
std::string digest(const std::string& text);

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zgen::cli

#endif  // ZGEN_CLI_HPP_
