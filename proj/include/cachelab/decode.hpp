#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cachelab/delivery.hpp"

namespace cachelab {

// Raised when a transcript is missing (or inconsistent about) a segment the
// decode walk needs; carries the first unresolvable constituent.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& unresolved)
      : std::runtime_error("decode: unresolved " + unresolved), unresolved_(unresolved) {}
  const std::string& unresolved() const { return unresolved_; }

 private:
  std::string unresolved_;
};

// Reconstructs the file requested by `user` (original numbering) from its own
// cache record plus the broadcast transcript. Consumes segments through their
// labels only, so any reordering of the transcript decodes identically.
BitBlock decode_user(int user, const std::vector<BitBlock>& cache,
                     const DeliveryTranscript& transcript, const GroupingProfile& profile);

struct UserDecodeResult {
  int user = 0;
  int requested_file = 0;
  bool success = false;
  std::int64_t mismatched_bits = 0;
  std::string error;  // empty unless the decode walk aborted
};

struct DecodeReport {
  std::vector<UserDecodeResult> per_user;
  bool all_ok = false;
  Rational measured_rate;  // total_bits / F
  std::int64_t part1_bits = 0;
  std::int64_t part2_bits = 0;
  std::int64_t part3_bits = 0;
  std::int64_t total_bits = 0;
};

// Runs every user's decoder and compares against the library ground truth.
DecodeReport decode_all_users(const FileLibrary& library, const CacheContents& caches,
                              const DeliveryTranscript& transcript);

struct VerifyOptions {
  std::int64_t budget = 60000;    // max demand vectors for exhaustive mode
  std::uint64_t seed = 0;         // sampling seed above budget; also library-independent
  int workers = 0;                // 0 = CACHE_LAB_WORKERS env or hardware concurrency
  LevelPermutation permutation = LevelPermutation::kAscending;
};

struct VerifySummary {
  bool exhaustive = false;
  std::int64_t vectors_checked = 0;
  bool all_ok = false;
  bool rates_match_formula = false;  // measured == N'(1 - N'/2K) (or 1 when N' = 1)
  Rational max_rate;
  std::vector<int> argmax_demands;   // lexicographically first maximizer seen
  // Exhaustive mode: does {d : rate(d) == max} equal the worst-case class
  // (every vector with min(N,K) distinct demands)? Unset when not decidable
  // (sampled run, or K == 2 where the fallback ties the maximum).
  std::optional<bool> worst_case_class_exact;
  std::vector<std::string> failures;  // capped at a handful
};

// Runs placement + delivery + decode over demand vectors: all N^K of them
// when that fits the budget, otherwise a seeded sample of the worst-case
// class plus 1000 random vectors (flagged as non-exhaustive).
VerifySummary verify_all_demands(const SystemConfig& config, const FileLibrary& library,
                                 const VerifyOptions& options = {});

struct WorstCaseClass {
  bool all_files_requested = false;  // true when N < K, else all-distinct demands
  std::string description;

  bool contains(const DemandVector& d, const SystemConfig& config) const;
};

// The demand class attaining the worst-case rate: all N files requested when
// N < K, all users distinct when N >= K.
WorstCaseClass worst_case_profile(const SystemConfig& config);

// Worker count used by the verification pool: CACHE_LAB_WORKERS when set,
// otherwise the hardware concurrency.
int verification_workers(int requested = 0);

}  // namespace cachelab
