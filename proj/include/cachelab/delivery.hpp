#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cachelab/grouping.hpp"
#include "cachelab/placement.hpp"
#include "cachelab/rational.hpp"
#include "cachelab/system.hpp"

namespace cachelab {

// Broadcast segment kinds. All indices inside labels are canonical (files in
// [1, n_prime], positions in [1, K]); payloads carry the corresponding
// original-file bits. A label fully identifies its constituents given the
// demand vector, so decoding never depends on segment order.
enum class SegmentKind {
  kClearPiece,   // part 1: piece m of file j for the user at position k (group i)
  kGroupChain,   // part 2: W_{i,k} ^ W_{i,k+1}, full subfiles within group i
  kCrossChainA,  // part 3: W_{i,k}^{(m1)} ^ W_{i,k+1}^{(m1)}, k inside group j
  kCrossChainB,  // part 3: W_{j,k}^{(m2)} ^ W_{j,k+1}^{(m2)}, k inside group i
  kCrossSeed,    // part 3: W_{i,S_j}^{(m1)} ^ W_{j,S_i}^{(m2)}
  kSeedSubfile,  // single-file fallback: one clear subfile of the demanded file
};

struct SegmentLabel {
  SegmentKind kind = SegmentKind::kClearPiece;
  int part = 0;  // 1, 2 or 3
  int i = 0;     // group / lower pair index (kind-dependent, see above)
  int j = 0;     // canonical file / upper pair index
  int k = 0;     // canonical position (user or chain link start)
  int l = 0;     // part-3 level counter in [1, n_prime - 2]
  int m1 = 0;    // piece level (part 1 level lives here too)
  int m2 = 0;    // second piece level (cross seeds)

  friend bool operator==(const SegmentLabel&, const SegmentLabel&) = default;
};

struct Segment {
  SegmentLabel label;
  BitBlock payload;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Which enumeration of the residual level sets the part-3 pairing uses. The
// scheme is correct for any bijection; keeping two lets tests confirm
// decode-invariance under the choice.
enum class LevelPermutation { kAscending, kDescending };

// The broadcast X = (X_1, X_2, X_3) with exact per-part bit accounting.
// Label bits are bookkeeping only and never count toward the rate.
struct DeliveryTranscript {
  SystemConfig config;
  GroupingProfile profile;
  bool fallback = false;  // single-distinct-demand delivery
  std::vector<Segment> part1;
  std::vector<Segment> part2;
  std::vector<Segment> part3;

  std::int64_t part_bits(int part) const;
  std::int64_t total_bits() const;
  Rational rate() const;            // total_bits / F, exact
  Rational part_rate(int part) const;

  const std::vector<Segment>& part(int p) const;
};

// Part 1, per-user delivery: one clear piece per non-demanded file for every
// user; K * (n_prime - 1) segments of F / (K (n_prime - 1)) bits. Requires
// n_prime >= 2.
std::vector<Segment> deliver_part1(const FileLibrary& library, const GroupingProfile& profile);

// Part 2, within-group subfile chains; works for any n_prime >= 1 and is
// empty exactly when every group has a single user.
std::vector<Segment> deliver_part2(const FileLibrary& library, const GroupingProfile& profile);

// Part 3, pairwise group exchange; empty when n_prime == 2. Requires
// n_prime >= 2.
std::vector<Segment> deliver_part3(const FileLibrary& library, const GroupingProfile& profile,
                                   LevelPermutation perm = LevelPermutation::kAscending);

// Level sets for the pair (i < j): the residual levels enumerated by the
// chosen permutation. Exposed for tests and for the decoder's cross-checks.
std::vector<int> residual_levels_for_file_i(int i, int j, int n_prime, LevelPermutation perm);
std::vector<int> residual_levels_for_file_j(int i, int j, int n_prime, LevelPermutation perm);

// Full delivery: canonicalizes d, validates the caches against the library,
// and emits the three-part transcript (or the rate-1 single-file fallback
// when only one distinct file is demanded).
DeliveryTranscript deliver(const FileLibrary& library, const CacheContents& caches,
                           const DemandVector& d,
                           LevelPermutation perm = LevelPermutation::kAscending);

std::string to_string(SegmentKind kind);
SegmentKind segment_kind_from_string(const std::string& text);

}  // namespace cachelab
