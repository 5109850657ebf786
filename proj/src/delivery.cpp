#include "cachelab/delivery.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachelab {

namespace {

// Canonical (file, position) payload helpers: canonical file f at canonical
// position p maps to the original subfile (orig_file(f), orig_user(p)).

BitBlock canon_subfile(const FileLibrary& library, const GroupingProfile& profile, int file,
                       int pos) {
  return library.subfile(profile.orig_file(file), profile.orig_subfile(pos));
}

BitBlock canon_piece(const FileLibrary& library, const GroupingProfile& profile, int file, int pos,
                     int level) {
  return library.piece(profile.orig_file(file), profile.orig_subfile(pos), level,
                       profile.n_prime);
}

std::vector<int> residual_levels(int excluded_level, int n_prime, LevelPermutation perm) {
  std::vector<int> levels;
  levels.reserve(n_prime - 2);
  for (int m = 1; m <= n_prime - 1; ++m) {
    if (m != excluded_level) levels.push_back(m);
  }
  if (perm == LevelPermutation::kDescending) std::reverse(levels.begin(), levels.end());
  return levels;
}

void check_caches(const FileLibrary& library, const CacheContents& caches,
                  const SystemConfig& config) {
  if (library.config() != config) {
    throw std::invalid_argument("deliver: library does not match config");
  }
  if (static_cast<int>(caches.per_user.size()) != config.n_users) {
    throw std::invalid_argument("deliver: cache record count must equal K");
  }
  for (int k = 1; k <= config.n_users; ++k) {
    const auto& cache = caches.user_cache(k);
    if (static_cast<int>(cache.size()) != config.n_files - 1) {
      throw std::invalid_argument("deliver: cache chain must have N-1 entries");
    }
    for (int i = 1; i <= config.n_files - 1; ++i) {
      if (cache[i - 1] != xor_blocks(library.subfile(i, k), library.subfile(i + 1, k))) {
        throw std::invalid_argument("deliver: cache contents inconsistent with library");
      }
    }
  }
}

}  // namespace

std::vector<int> residual_levels_for_file_i(int i, int j, int n_prime, LevelPermutation perm) {
  // Level of file i's piece already delivered to group j in part 1.
  return residual_levels(piece_index(i, j), n_prime, perm);
}

std::vector<int> residual_levels_for_file_j(int i, int j, int n_prime, LevelPermutation perm) {
  return residual_levels(piece_index(j, i), n_prime, perm);
}

std::int64_t DeliveryTranscript::part_bits(int p) const {
  std::int64_t bits = 0;
  for (const auto& seg : part(p)) bits += static_cast<std::int64_t>(seg.payload.size_bits());
  return bits;
}

std::int64_t DeliveryTranscript::total_bits() const {
  return part_bits(1) + part_bits(2) + part_bits(3);
}

Rational DeliveryTranscript::rate() const {
  return Rational(total_bits(), config.file_bits);
}

Rational DeliveryTranscript::part_rate(int p) const {
  return Rational(part_bits(p), config.file_bits);
}

const std::vector<Segment>& DeliveryTranscript::part(int p) const {
  switch (p) {
    case 1: return part1;
    case 2: return part2;
    case 3: return part3;
    default: throw std::out_of_range("DeliveryTranscript: part must be 1, 2 or 3");
  }
}

std::vector<Segment> deliver_part1(const FileLibrary& library, const GroupingProfile& profile) {
  if (profile.n_prime < 2) {
    throw std::invalid_argument("deliver_part1: needs at least 2 distinct demands");
  }
  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(profile.n_users) * (profile.n_prime - 1));
  for (int i = 1; i <= profile.n_prime; ++i) {
    for (int k = profile.prefix(i - 1) + 1; k <= profile.prefix(i); ++k) {
      for (int j = 1; j <= profile.n_prime; ++j) {
        if (j == i) continue;
        const int m = piece_index(j, i);
        SegmentLabel label;
        label.kind = SegmentKind::kClearPiece;
        label.part = 1;
        label.i = i;
        label.j = j;
        label.k = k;
        label.m1 = m;
        segments.push_back({label, canon_piece(library, profile, j, k, m)});
      }
    }
  }
  return segments;
}

std::vector<Segment> deliver_part2(const FileLibrary& library, const GroupingProfile& profile) {
  std::vector<Segment> segments;
  for (int i = 1; i <= profile.n_prime; ++i) {
    for (int k = profile.prefix(i - 1) + 1; k <= profile.prefix(i) - 1; ++k) {
      SegmentLabel label;
      label.kind = SegmentKind::kGroupChain;
      label.part = 2;
      label.i = i;
      label.k = k;
      segments.push_back({label, xor_blocks(canon_subfile(library, profile, i, k),
                                            canon_subfile(library, profile, i, k + 1))});
    }
  }
  return segments;
}

std::vector<Segment> deliver_part3(const FileLibrary& library, const GroupingProfile& profile,
                                   LevelPermutation perm) {
  if (profile.n_prime < 2) {
    throw std::invalid_argument("deliver_part3: needs at least 2 distinct demands");
  }
  std::vector<Segment> segments;
  for (int i = 1; i <= profile.n_prime - 1; ++i) {
    for (int j = i + 1; j <= profile.n_prime; ++j) {
      const auto levels_i = residual_levels_for_file_i(i, j, profile.n_prime, perm);
      const auto levels_j = residual_levels_for_file_j(i, j, profile.n_prime, perm);
      for (int l = 1; l <= profile.n_prime - 2; ++l) {
        const int m1 = levels_i[l - 1];
        const int m2 = levels_j[l - 1];
        // File-i pieces chained across group j.
        for (int k = profile.prefix(j - 1) + 1; k <= profile.prefix(j) - 1; ++k) {
          SegmentLabel label;
          label.kind = SegmentKind::kCrossChainA;
          label.part = 3;
          label.i = i;
          label.j = j;
          label.l = l;
          label.m1 = m1;
          label.k = k;
          segments.push_back({label, xor_blocks(canon_piece(library, profile, i, k, m1),
                                                canon_piece(library, profile, i, k + 1, m1))});
        }
        // File-j pieces chained across group i.
        for (int k = profile.prefix(i - 1) + 1; k <= profile.prefix(i) - 1; ++k) {
          SegmentLabel label;
          label.kind = SegmentKind::kCrossChainB;
          label.part = 3;
          label.i = i;
          label.j = j;
          label.l = l;
          label.m2 = m2;
          label.k = k;
          segments.push_back({label, xor_blocks(canon_piece(library, profile, j, k, m2),
                                                canon_piece(library, profile, j, k + 1, m2))});
        }
        // Cross seed joining the two chains.
        SegmentLabel label;
        label.kind = SegmentKind::kCrossSeed;
        label.part = 3;
        label.i = i;
        label.j = j;
        label.l = l;
        label.m1 = m1;
        label.m2 = m2;
        segments.push_back(
            {label, xor_blocks(canon_piece(library, profile, i, profile.prefix(j), m1),
                               canon_piece(library, profile, j, profile.prefix(i), m2))});
      }
    }
  }
  return segments;
}

DeliveryTranscript deliver(const FileLibrary& library, const CacheContents& caches,
                           const DemandVector& d, LevelPermutation perm) {
  const SystemConfig& config = library.config();
  check_caches(library, caches, config);

  DeliveryTranscript transcript{config, canonicalize_demands(d, config), false, {}, {}, {}};
  const GroupingProfile& profile = transcript.profile;

  if (profile.n_prime >= 2) {
    transcript.part1 = deliver_part1(library, profile);
    transcript.part2 = deliver_part2(library, profile);
    transcript.part3 = deliver_part3(library, profile, perm);
    return transcript;
  }

  // Single distinct file: the piece split degenerates, so the demanded file
  // goes out as one clear seed subfile plus the K-1 within-group chain links
  // (an invertible recombination of all K subfiles). Every user replays the
  // chain from the seed; total is exactly F bits.
  transcript.fallback = true;
  SegmentLabel seed;
  seed.kind = SegmentKind::kSeedSubfile;
  seed.part = 1;
  seed.i = 1;
  seed.k = 1;
  transcript.part1.push_back({seed, canon_subfile(library, profile, 1, 1)});
  transcript.part2 = deliver_part2(library, profile);
  return transcript;
}

std::string to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kClearPiece: return "piece";
    case SegmentKind::kGroupChain: return "chain";
    case SegmentKind::kCrossChainA: return "xchain_a";
    case SegmentKind::kCrossChainB: return "xchain_b";
    case SegmentKind::kCrossSeed: return "xseed";
    case SegmentKind::kSeedSubfile: return "seed";
  }
  throw std::logic_error("to_string: unknown segment kind");
}

SegmentKind segment_kind_from_string(const std::string& text) {
  if (text == "piece") return SegmentKind::kClearPiece;
  if (text == "chain") return SegmentKind::kGroupChain;
  if (text == "xchain_a") return SegmentKind::kCrossChainA;
  if (text == "xchain_b") return SegmentKind::kCrossChainB;
  if (text == "xseed") return SegmentKind::kCrossSeed;
  if (text == "seed") return SegmentKind::kSeedSubfile;
  throw std::invalid_argument("segment_kind_from_string: unknown kind '" + text + "'");
}

}  // namespace cachelab
