#include "cachelab/decode.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "cachelab/rates.hpp"

namespace cachelab {

namespace {

std::string piece_name(int file, int pos, int level) {
  std::ostringstream os;
  os << "piece file=" << file << " pos=" << pos;
  if (level > 0) os << " level=" << level;
  return os.str();
}

// Label-keyed views over a transcript. Built once per decode; all lookups go
// through labels so segment order never matters.
struct TranscriptIndex {
  // (canonical file, canonical position) -> (level, payload) for part-1 pieces.
  std::map<std::pair<int, int>, std::pair<int, const BitBlock*>> clear_pieces;
  // (canonical file, position k) -> subfile link W_{i,k} ^ W_{i,k+1}.
  std::map<std::pair<int, int>, const BitBlock*> group_chain;

  struct PairExchange {
    int m1 = 0;
    int m2 = 0;
    const BitBlock* seed = nullptr;
    std::map<int, const BitBlock*> chain_a;  // file-i pieces across group j
    std::map<int, const BitBlock*> chain_b;  // file-j pieces across group i
  };
  // (i, j, l) -> exchange bundle for the pair of groups.
  std::map<std::tuple<int, int, int>, PairExchange> exchanges;

  const BitBlock* fallback_seed = nullptr;

  explicit TranscriptIndex(const DeliveryTranscript& t) {
    for (const auto& seg : t.part1) {
      if (seg.label.kind == SegmentKind::kClearPiece) {
        clear_pieces[{seg.label.j, seg.label.k}] = {seg.label.m1, &seg.payload};
      } else if (seg.label.kind == SegmentKind::kSeedSubfile) {
        fallback_seed = &seg.payload;
      }
    }
    for (const auto& seg : t.part2) {
      group_chain[{seg.label.i, seg.label.k}] = &seg.payload;
    }
    for (const auto& seg : t.part3) {
      auto& ex = exchanges[{seg.label.i, seg.label.j, seg.label.l}];
      switch (seg.label.kind) {
        case SegmentKind::kCrossChainA:
          ex.m1 = seg.label.m1;
          ex.chain_a[seg.label.k] = &seg.payload;
          break;
        case SegmentKind::kCrossChainB:
          ex.m2 = seg.label.m2;
          ex.chain_b[seg.label.k] = &seg.payload;
          break;
        case SegmentKind::kCrossSeed:
          ex.m1 = seg.label.m1;
          ex.m2 = seg.label.m2;
          ex.seed = &seg.payload;
          break;
        default:
          throw DecodeError("unexpected segment kind in part 3");
      }
    }
  }

  const BitBlock& clear_piece(int file, int pos, int expected_level) const {
    auto it = clear_pieces.find({file, pos});
    if (it == clear_pieces.end() || it->second.first != expected_level) {
      throw DecodeError(piece_name(file, pos, expected_level));
    }
    return *it->second.second;
  }

  const BitBlock& chain_link(int file, int pos) const {
    auto it = group_chain.find({file, pos});
    if (it == group_chain.end()) {
      throw DecodeError("subfile link file=" + std::to_string(file) +
                        " pos=" + std::to_string(pos));
    }
    return *it->second;
  }

  const PairExchange& exchange(int i, int j, int l) const {
    auto it = exchanges.find({i, j, l});
    if (it == exchanges.end() || it->second.seed == nullptr) {
      throw DecodeError("pair exchange i=" + std::to_string(i) + " j=" + std::to_string(j) +
                        " l=" + std::to_string(l));
    }
    return it->second;
  }

  static const BitBlock& cross_link(const std::map<int, const BitBlock*>& links, int pos,
                                    const char* what) {
    auto it = links.find(pos);
    if (it == links.end()) throw DecodeError(std::string(what) + " pos=" + std::to_string(pos));
    return *it->second;
  }
};

// Single-distinct-file delivery: replay the subfile chain from the clear seed.
// The cache is not needed; the broadcast alone carries the whole file.
BitBlock decode_fallback(const TranscriptIndex& index, const GroupingProfile& profile) {
  const int K = profile.n_users;
  if (index.fallback_seed == nullptr) throw DecodeError("seed subfile");
  std::vector<BitBlock> at_pos(K + 1);
  at_pos[1] = *index.fallback_seed;
  for (int k = 1; k <= K - 1; ++k) {
    at_pos[k + 1] = xor_blocks(at_pos[k], index.chain_link(1, k));
  }
  std::vector<BitBlock> ordered(K);
  for (int s = 1; s <= K; ++s) ordered[s - 1] = at_pos[profile.canon_position(s)];
  return concat_blocks(ordered);
}

BitBlock concat_levels(const std::vector<BitBlock>& pieces_by_level) {
  // Index 0 is unused; concatenate levels 1..L in order.
  return concat_blocks(std::span<const BitBlock>(pieces_by_level.data() + 1,
                                                 pieces_by_level.size() - 1));
}

}  // namespace

BitBlock decode_user(int user, const std::vector<BitBlock>& cache,
                     const DeliveryTranscript& transcript, const GroupingProfile& profile) {
  const SystemConfig& config = transcript.config;
  const int N = profile.n_files;
  const int K = profile.n_users;
  const int n_prime = profile.n_prime;
  if (user < 1 || user > K) throw std::out_of_range("decode_user: user index out of range");
  if (static_cast<int>(cache.size()) != N - 1) {
    throw std::invalid_argument("decode_user: cache record must have N-1 chain entries");
  }

  TranscriptIndex index(transcript);
  if (transcript.fallback) return decode_fallback(index, profile);

  const int me = profile.canon_position(user);
  const int group = profile.group_of_position(me);
  const std::int64_t pb = config.piece_bits(n_prime);
  const int levels = n_prime - 1;

  // Slice of cache entry `file` (covering original files file, file+1) at
  // piece granularity.
  auto cache_piece_link = [&](int file, int level) {
    return cache[file - 1].slice(static_cast<std::size_t>((level - 1) * pb),
                                 static_cast<std::size_t>(pb));
  };

  // (a) One clear piece per level unlocks the whole cache chain at that
  // level: own pieces of every original file, at every level.
  std::vector<std::vector<BitBlock>> own(N + 1, std::vector<BitBlock>(levels + 1));
  for (int level = 1; level <= levels; ++level) {
    const int canon_file = level < group ? level : level + 1;  // inverse of piece_index
    const int f0 = profile.orig_file(canon_file);
    own[f0][level] = index.clear_piece(canon_file, me, level);
    for (int f = f0 - 1; f >= 1; --f) {
      own[f][level] = xor_blocks(own[f + 1][level], cache_piece_link(f, level));
    }
    for (int f = f0 + 1; f <= N; ++f) {
      own[f][level] = xor_blocks(own[f - 1][level], cache_piece_link(f - 1, level));
    }
  }

  // Full subfiles of my demanded file, indexed by canonical position.
  std::vector<BitBlock> subfile_at(K + 1);
  subfile_at[me] = concat_levels(own[profile.orig_file(group)]);

  // (b) Within my group, walk the part-2 chain in both directions.
  for (int k = me; k <= profile.prefix(group) - 1; ++k) {
    subfile_at[k + 1] = xor_blocks(subfile_at[k], index.chain_link(group, k));
  }
  for (int k = me - 1; k >= profile.prefix(group - 1) + 1; --k) {
    subfile_at[k] = xor_blocks(subfile_at[k + 1], index.chain_link(group, k));
  }

  // (c) Other groups: one level of my file is overheard straight from their
  // part-1 pieces; the remaining levels arrive through the part-3 exchange:
  // walk my group's piece chain to the boundary, open the cross seed, then
  // unwind the other group's chain.
  for (int other = 1; other <= n_prime; ++other) {
    if (other == group) continue;
    const int lo = profile.prefix(other - 1) + 1;
    const int hi = profile.prefix(other);
    std::vector<std::vector<BitBlock>> pieces(hi - lo + 1, std::vector<BitBlock>(levels + 1));
    const int overheard = piece_index(group, other);
    for (int q = lo; q <= hi; ++q) {
      pieces[q - lo][overheard] = index.clear_piece(group, q, overheard);
    }

    for (int l = 1; l <= n_prime - 2; ++l) {
      const int a = std::min(group, other);
      const int b = std::max(group, other);
      const auto& ex = index.exchange(a, b, l);
      const bool low_side = group == a;
      const int my_start_level = low_side ? ex.m2 : ex.m1;
      const int target_level = low_side ? ex.m1 : ex.m2;
      const auto& my_chain = low_side ? ex.chain_b : ex.chain_a;
      const auto& other_chain = low_side ? ex.chain_a : ex.chain_b;

      BitBlock cur = own[profile.orig_file(other)][my_start_level];
      for (int k = me; k <= profile.prefix(group) - 1; ++k) {
        cur ^= TranscriptIndex::cross_link(my_chain, k, "cross link (own group)");
      }
      cur ^= *ex.seed;
      pieces[hi - lo][target_level] = cur;
      for (int k = hi - 1; k >= lo; --k) {
        cur ^= TranscriptIndex::cross_link(other_chain, k, "cross link (other group)");
        pieces[k - lo][target_level] = cur;
      }
    }

    for (int q = lo; q <= hi; ++q) {
      for (int level = 1; level <= levels; ++level) {
        if (static_cast<std::int64_t>(pieces[q - lo][level].size_bits()) != pb) {
          throw DecodeError(piece_name(group, q, level));
        }
      }
      subfile_at[q] = concat_levels(pieces[q - lo]);
    }
  }

  // (d) Reassemble in original subfile order, undoing the user permutation.
  std::vector<BitBlock> ordered(K);
  for (int s = 1; s <= K; ++s) ordered[s - 1] = subfile_at[profile.canon_position(s)];
  return concat_blocks(ordered);
}

DecodeReport decode_all_users(const FileLibrary& library, const CacheContents& caches,
                              const DeliveryTranscript& transcript) {
  const GroupingProfile& profile = transcript.profile;
  DecodeReport report;
  report.part1_bits = transcript.part_bits(1);
  report.part2_bits = transcript.part_bits(2);
  report.part3_bits = transcript.part_bits(3);
  report.total_bits = transcript.total_bits();
  report.measured_rate = transcript.rate();
  report.all_ok = true;
  for (int user = 1; user <= profile.n_users; ++user) {
    UserDecodeResult result;
    result.user = user;
    result.requested_file = profile.original_demands[user - 1];
    const BitBlock& want = library.file(result.requested_file);
    try {
      BitBlock got = decode_user(user, caches.user_cache(user), transcript, profile);
      result.mismatched_bits = static_cast<std::int64_t>(want.mismatch_count(got));
      result.success = result.mismatched_bits == 0;
    } catch (const DecodeError& e) {
      result.success = false;
      result.mismatched_bits = static_cast<std::int64_t>(want.size_bits());
      result.error = e.unresolved();
    }
    report.all_ok = report.all_ok && result.success;
    report.per_user.push_back(std::move(result));
  }
  return report;
}

namespace {

DemandVector demands_from_index(std::uint64_t idx, int n_files, int n_users) {
  DemandVector d;
  d.demands.assign(n_users, 1);
  for (int k = n_users; k >= 1; --k) {
    d.demands[k - 1] = static_cast<int>(idx % n_files) + 1;
    idx /= n_files;
  }
  return d;
}

std::string demands_to_string(const std::vector<int>& demands) {
  std::string out = "(";
  for (std::size_t i = 0; i < demands.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(demands[i]);
  }
  return out + ")";
}

int count_distinct(const std::vector<int>& demands) {
  std::vector<int> copy = demands;
  std::sort(copy.begin(), copy.end());
  return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

struct ChunkResult {
  bool all_ok = true;
  bool rates_match = true;
  bool argmax_matches_class = true;
  Rational max_rate = Rational(0);
  std::optional<std::uint64_t> argmax_index;
  std::vector<std::string> failures;
  std::int64_t checked = 0;
};

}  // namespace

bool WorstCaseClass::contains(const DemandVector& d, const SystemConfig& config) const {
  return count_distinct(d.demands) == std::min(config.n_files, config.n_users);
}

WorstCaseClass worst_case_profile(const SystemConfig& config) {
  WorstCaseClass cls;
  cls.all_files_requested = config.n_files < config.n_users;
  cls.description = cls.all_files_requested
                        ? "every file requested by at least one user"
                        : "all users request distinct files";
  return cls;
}

int verification_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CACHE_LAB_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

VerifySummary verify_all_demands(const SystemConfig& config, const FileLibrary& library,
                                 const VerifyOptions& options) {
  if (library.config() != config) {
    throw std::invalid_argument("verify_all_demands: library does not match config");
  }
  const int N = config.n_files;
  const int K = config.n_users;
  const CacheContents caches = place_caches(library, config);
  const int max_distinct = std::min(N, K);
  const Rational max_expected = delivered_rate_for_distinct(max_distinct, K);

  // Total demand vector count N^K, saturating well above any usable budget.
  std::uint64_t total = 1;
  bool overflow = false;
  for (int k = 0; k < K; ++k) {
    if (total > (1ULL << 62) / static_cast<std::uint64_t>(N)) {
      overflow = true;
      break;
    }
    total *= static_cast<std::uint64_t>(N);
  }
  const bool exhaustive =
      !overflow && total <= static_cast<std::uint64_t>(std::max<std::int64_t>(options.budget, 0));

  auto check_vector = [&](const DemandVector& d, ChunkResult& out, std::uint64_t idx) {
    const DeliveryTranscript transcript = deliver(library, caches, d, options.permutation);
    const DecodeReport report = decode_all_users(library, caches, transcript);
    out.checked += 1;
    const int n_prime = transcript.profile.n_prime;
    const Rational expected = delivered_rate_for_distinct(n_prime, K);
    if (!report.all_ok) {
      out.all_ok = false;
      if (out.failures.size() < 4) {
        std::string detail;
        for (const auto& u : report.per_user) {
          if (!u.success) {
            detail = "user " + std::to_string(u.user) +
                     (u.error.empty() ? " mismatched bits " + std::to_string(u.mismatched_bits)
                                      : " " + u.error);
            break;
          }
        }
        out.failures.push_back("d=" + demands_to_string(d.demands) + ": " + detail);
      }
    }
    if (report.measured_rate != expected) {
      out.rates_match = false;
      if (out.failures.size() < 4) {
        out.failures.push_back("d=" + demands_to_string(d.demands) + ": rate " +
                               report.measured_rate.to_string() + " != expected " +
                               expected.to_string());
      }
    }
    if (report.measured_rate > out.max_rate || !out.argmax_index.has_value()) {
      out.max_rate = report.measured_rate;
      out.argmax_index = idx;
    } else if (report.measured_rate == out.max_rate && idx < *out.argmax_index) {
      out.argmax_index = idx;
    }
    const bool attains_max = report.measured_rate == max_expected;
    const bool in_class = n_prime == max_distinct;
    if (attains_max != in_class) out.argmax_matches_class = false;
  };

  std::vector<ChunkResult> results;
  if (exhaustive) {
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(verification_workers(options.workers), total));
    results.resize(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          check_vector(demands_from_index(idx, N, K), results[w], idx);
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    // Sampled mode: seeded draws from the worst-case class plus uniform
    // vectors. Single chunk, deterministic order.
    results.resize(1);
    std::mt19937_64 rng(options.seed ^ 0x436163686C616221ULL);
    std::uniform_int_distribution<int> file_dist(1, N);
    const int samples = 1000;
    for (int s = 0; s < samples; ++s) {
      DemandVector d;
      d.demands.resize(K);
      std::vector<int> positions(K);
      for (int k = 0; k < K; ++k) positions[k] = k;
      std::shuffle(positions.begin(), positions.end(), rng);
      for (int k = 0; k < K; ++k) d.demands[k] = file_dist(rng);
      for (int f = 1; f <= max_distinct; ++f) d.demands[positions[f - 1]] = f;
      check_vector(d, results[0], 0);
    }
    for (int s = 0; s < samples; ++s) {
      DemandVector d;
      d.demands.resize(K);
      for (int k = 0; k < K; ++k) d.demands[k] = file_dist(rng);
      check_vector(d, results[0], 0);
    }
  }

  VerifySummary summary;
  summary.exhaustive = exhaustive;
  summary.all_ok = true;
  summary.rates_match_formula = true;
  bool argmax_matches = true;
  std::optional<std::uint64_t> best_index;
  for (const auto& r : results) {
    summary.vectors_checked += r.checked;
    summary.all_ok = summary.all_ok && r.all_ok;
    summary.rates_match_formula = summary.rates_match_formula && r.rates_match;
    argmax_matches = argmax_matches && r.argmax_matches_class;
    for (const auto& f : r.failures) {
      if (summary.failures.size() < 8) summary.failures.push_back(f);
    }
    if (!r.argmax_index.has_value()) continue;
    if (r.max_rate > summary.max_rate || !best_index.has_value()) {
      summary.max_rate = r.max_rate;
      best_index = r.argmax_index;
    } else if (r.max_rate == summary.max_rate && *r.argmax_index < *best_index) {
      best_index = r.argmax_index;
    }
  }
  if (exhaustive && best_index.has_value()) {
    summary.argmax_demands = demands_from_index(*best_index, N, K).demands;
  }
  // K == 2 ties the fallback with the two-file rate, so the argmax set is not
  // a clean class there; leave the structural verdict unset.
  if (exhaustive && K != 2) summary.worst_case_class_exact = argmax_matches;
  return summary;
}

}  // namespace cachelab
