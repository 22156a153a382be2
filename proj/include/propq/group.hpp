#pragma once

#include <memory>
#include <string>
#include <vector>

#include "propq/error.hpp"

namespace propq {

enum class GroupKind { Finite, SampledSU2 };

/// Unit quaternion; doubles as an SU(2) element via
/// U = w*1 - i(x*sx + y*sy + z*sz).
struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
  /// Rotation angle of the underlying SO(3) element, in [0, pi].
  double geodesic_angle() const;
  /// Angle between two SU(2) points on S^3 (distinguishes q from -q).
  double distance_to(const Quaternion& o) const;

  static Quaternion z_rotation(double t);
  static Quaternion y_rotation(double t);
  static Quaternion euler_zyz(double phi, double theta, double psi);
};

/// A group realized as data: a finite Cayley table or a deterministic sample
/// grid of SU(2), together with Haar weights and a conjugation-invariant
/// length function.
class GroupModel {
 public:
  GroupKind kind = GroupKind::Finite;
  int n = 0;
  int identity = 0;
  std::vector<double> lengths;
  std::vector<double> weights;
  std::vector<int> inverse_index;

  // Finite kind.
  std::vector<std::vector<int>> table;
  std::vector<int> class_index;  // conjugacy class id per element

  // Sampled kind.
  std::vector<Quaternion> quats;
  double comp_tol = 0;  // worst observed snap distance of compose()

  int size() const { return n; }
  bool finite() const { return kind == GroupKind::Finite; }
  int compose(int a, int b) const;
  int inverse(int a) const { return inverse_index[a]; }
  double length(int a) const { return lengths[a]; }
  double haar_weight(int a) const { return weights[a]; }
  const Quaternion& quaternion(int a) const;
  double composition_tolerance() const { return comp_tol; }
  /// Sum_x w_x l(x); the radius bound used for analytic caps.
  double mean_length() const;

  void check_index(int a) const {
    if (a < 0 || a >= n) throw ParameterError("group element index out of range");
  }
};

using GroupModelPtr = std::shared_ptr<const GroupModel>;

/// Builds a finite group from a Cayley table (table[a][b] = a*b). The length
/// function is the word length over generators and their inverses, then
/// symmetrized over conjugacy classes by taking the class maximum.
GroupModelPtr build_finite_group(const std::vector<std::vector<int>>& table,
                                 const std::vector<int>& generators);

/// Deterministic SU(2) sample: Gauss-Legendre polar nodes x uniform Euler
/// angles, plus a zero-weight copy of the z-axis circle so the identity and
/// the stabilizer of a highest-weight projection are grid points.
/// l(x) = 2*acos(|Re x|) is the rotation angle.
GroupModelPtr build_su2_grid(int resolution);

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace propq
