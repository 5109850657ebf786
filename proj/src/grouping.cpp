#include "cachelab/grouping.hpp"

#include <stdexcept>

namespace cachelab {

int GroupingProfile::group_of_position(int canon_pos) const {
  if (canon_pos < 1 || canon_pos > n_users) {
    throw std::out_of_range("GroupingProfile: canonical position out of range");
  }
  for (int i = 1; i <= n_prime; ++i) {
    if (canon_pos <= prefix_sums[i]) return i;
  }
  throw std::logic_error("GroupingProfile: inconsistent prefix sums");
}

GroupingProfile canonicalize_demands(const DemandVector& d, const SystemConfig& config) {
  if (static_cast<int>(d.demands.size()) != config.n_users) {
    throw std::invalid_argument("canonicalize_demands: demand vector must have K entries");
  }
  for (int file : d.demands) {
    if (file < 1 || file > config.n_files) {
      throw std::invalid_argument("canonicalize_demands: demand outside [1, N]");
    }
  }

  GroupingProfile profile;
  profile.n_files = config.n_files;
  profile.n_users = config.n_users;
  profile.original_demands = d.demands;
  profile.orig_to_canon_file.assign(config.n_files, 0);

  // Groups in ascending original-file order; members in ascending user order.
  std::vector<std::vector<int>> members(config.n_files);
  for (int user = 1; user <= config.n_users; ++user) {
    members[d.demands[user - 1] - 1].push_back(user);
  }

  profile.prefix_sums.push_back(0);
  for (int file = 1; file <= config.n_files; ++file) {
    if (members[file - 1].empty()) continue;
    profile.canon_to_orig_file.push_back(file);
    profile.orig_to_canon_file[file - 1] = static_cast<int>(profile.canon_to_orig_file.size());
    profile.group_sizes.push_back(static_cast<int>(members[file - 1].size()));
    for (int user : members[file - 1]) profile.canon_to_orig_user.push_back(user);
    profile.prefix_sums.push_back(static_cast<int>(profile.canon_to_orig_user.size()));
  }
  profile.n_prime = static_cast<int>(profile.group_sizes.size());

  profile.orig_to_canon_user.assign(config.n_users, 0);
  for (int pos = 1; pos <= config.n_users; ++pos) {
    profile.orig_to_canon_user[profile.canon_to_orig_user[pos - 1] - 1] = pos;
  }
  return profile;
}

int piece_index(int file_j, int group_i) {
  if (file_j == group_i) {
    throw std::invalid_argument("piece_index: a group is never served a piece of its own file");
  }
  return file_j < group_i ? file_j : file_j - 1;
}

}  // namespace cachelab
