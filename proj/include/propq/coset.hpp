#pragma once

#include <memory>
#include <vector>

#include "propq/representation.hpp"

namespace propq {

/// G/H with quadrature weights and the quotient metric
/// rho(xH, yH) = min_{h in H} l(x^-1 y h).
struct CosetSpace {
  GroupModelPtr group;
  std::vector<int> reps;                  // representative element per coset
  std::vector<std::vector<int>> members;  // element indices per coset
  std::vector<double> weights;
  RMat metric;
  int base_index = 0;  // the coset eH
  std::vector<int> coset_of;
  /// True when H is (within tolerance) inside the z-axis torus of a sampled
  /// grid; the metric minimum is then taken over the whole circle.
  bool torus_stabilizer = false;

  int size() const { return static_cast<int>(reps.size()); }
};

using CosetSpacePtr = std::shared_ptr<const CosetSpace>;

CosetSpacePtr coset_space(GroupModelPtr group, const ProjectionData& stability);

}  // namespace propq
