#pragma once

#include <optional>
#include <string>
#include <vector>

#include "propq/representation.hpp"

namespace propq {

/// Cayley table, generators and the 2-dimensional (1-dimensional for Z2)
/// irreducible representation for the built-in groups "S3", "Z2", "Q8".
struct BuiltinGroup {
  std::string name;
  std::vector<std::vector<int>> table;
  std::vector<int> generators;
  std::vector<Mat> irrep;
  std::string irrep_label;
};

const BuiltinGroup& builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// Group model + workhorse irrep for a built-in group.
std::pair<GroupModelPtr, RepresentationPtr> make_builtin(const std::string& name);

/// Searches for an isomorphism from the user table onto a built-in group and
/// transports the built-in irrep back; nullopt when no built-in matches.
std::optional<RepresentationPtr> builtin_irrep_for_table(GroupModelPtr group);

}  // namespace propq
