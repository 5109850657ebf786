#pragma once

#include <vector>

#include "cachelab/system.hpp"

namespace cachelab {

// Demand vector d: one requested file per user, entries in [1, N].
struct DemandVector {
  std::vector<int> demands;
};

// Canonicalized demand structure. Users are reordered into groups so that
// group i (canonical positions S_{i-1}+1 .. S_i) requests canonical file i;
// demanded files are relabeled onto 1..n_prime. Tie-breaking is stable:
// groups ordered by ascending original file index, users within a group by
// ascending original user index.
//
// All stored index VALUES are 1-based; vectors are addressed 0-based.
struct GroupingProfile {
  int n_files = 0;   // N of the underlying config
  int n_users = 0;   // K
  int n_prime = 0;   // number of distinct demanded files

  std::vector<int> group_sizes;         // K_1..K_{n_prime}, all >= 1
  std::vector<int> prefix_sums;         // S_0..S_{n_prime}, S_0 = 0, S_{n_prime} = K
  std::vector<int> canon_to_orig_user;  // canonical position -> original user
  std::vector<int> orig_to_canon_user;  // original user -> canonical position
  std::vector<int> canon_to_orig_file;  // canonical file -> original file
  std::vector<int> orig_to_canon_file;  // original file -> canonical file, 0 if not demanded
  std::vector<int> original_demands;    // the original d, for reference

  int group_size(int i) const { return group_sizes[i - 1]; }
  int prefix(int i) const { return prefix_sums[i]; }  // S_i, i in [0, n_prime]

  // Group of a canonical position (1-based both ways).
  int group_of_position(int canon_pos) const;

  int orig_user(int canon_pos) const { return canon_to_orig_user[canon_pos - 1]; }
  int canon_position(int orig_user) const { return orig_to_canon_user[orig_user - 1]; }
  int orig_file(int canon_file) const { return canon_to_orig_file[canon_file - 1]; }

  // Original subfile index carried by canonical position p (the subfile tied
  // to the user sitting at p).
  int orig_subfile(int canon_pos) const { return orig_user(canon_pos); }
};

GroupingProfile canonicalize_demands(const DemandVector& d, const SystemConfig& config);

// Piece level delivered in part 1 for canonical file j to a user in group i:
// j if j < i, j - 1 if j > i. The map j -> level is a bijection from
// [n_prime] \ {i} onto [n_prime - 1]. j == i is rejected.
int piece_index(int file_j, int group_i);

}  // namespace cachelab
