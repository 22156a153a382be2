#pragma once

#include <memory>
#include <string>
#include <vector>

#include "propq/group.hpp"
#include "propq/linalg.hpp"

namespace propq {

/// A unitary irreducible representation given by one matrix per group element.
struct Representation {
  GroupModelPtr group;
  int dim = 1;
  std::vector<Mat> matrices;
  std::string label;
  double spin = -1;  // 2*spin+1 == dim for SU(2) spin representations
  /// ||Haar-average of alpha_x(T) - tau(T) 1|| observed on a random probe.
  double ergodicity_defect = 0;

  const Mat& unitary(int x) const { return matrices[x]; }
};

using RepresentationPtr = std::shared_ptr<const Representation>;

/// Wraps explicit matrices, checking unitarity and the homomorphism property
/// (exactly against the table for finite groups, against exact quaternion
/// products for sampled grids).
RepresentationPtr make_representation(GroupModelPtr group, std::vector<Mat> matrices,
                                      std::string label, double spin = -1);

/// Spin-j matrices evaluated from the grid quaternions. 2j must be a
/// nonnegative integer.
RepresentationPtr spin_representation(GroupModelPtr group, double j);

/// Matrix of the spin-j representation at a single SU(2) element.
Mat wigner_matrix(const Quaternion& q, int two_j);

/// Spin operators (Jx, Jy, Jz) in the weight basis m = j..-j.
std::vector<Mat> spin_operators(int two_j);

/// alpha_x(T) = U_x T U_x^*, applied block-entrywise so amplified inputs
/// (q*d square) are accepted as well.
Mat conjugation_action(const Representation& rep, int x, const Mat& t);

struct ProjectionData {
  RepresentationPtr rep;
  Mat projection;
  std::vector<int> stability_elements;
  double tol = 0;
};

/// Default coherent-state seed: the projection onto the first basis vector
/// (the highest weight vector for spin representations).
Mat highest_weight_projection(const Representation& rep);

/// stability_elements = {x : ||alpha_x(P) - P|| <= tol}. For finite groups the
/// set is verified to be a subgroup. tol < 0 selects the per-kind default.
ProjectionData stability_subgroup(RepresentationPtr rep, const Mat& p, double tol = -1);

}  // namespace propq
