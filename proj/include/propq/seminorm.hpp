#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "propq/coset.hpp"
#include "propq/representation.hpp"

namespace propq {

/// Element of M_q(B): a (q*dim) square block matrix.
struct Observable {
  int q = 1;
  int dim = 1;
  Mat mat;
  bool hermitian = false;

  static Observable wrap(Mat m, int dim);
};

/// Sampled M_q-valued function on a coset space (1x1 blocks when q = 1).
struct SymbolFunction {
  CosetSpacePtr coset;
  int q = 1;
  std::vector<Mat> values;

  static SymbolFunction constant(CosetSpacePtr coset, const Mat& value);
  static SymbolFunction scalar(CosetSpacePtr coset, const RVec& values);
  double sup_norm() const;
  bool hermitian_valued(double tol = 1e-12) const;
  SymbolFunction adjoint() const;
};

/// Off-grid evaluation point for the sampled action seminorm: a unitary at a
/// group element that is not a grid node, with its length.
struct ExtraLipPoint {
  Mat unitary;
  double length;
};

/// Lipschitz-type seminorm. Operator kind evaluates
///   max_x ||alpha_x^q(X) - X|| / l(x)
/// over the stored group (plus enrichment points for sampled grids);
/// function kind evaluates max_{i != j} ||f_i - f_j|| / rho_ij.
/// Both act block-entrywise, so one object covers every amplification level.
class Seminorm {
 public:
  enum class Kind { OperatorLip, FunctionLip };

  Kind kind = Kind::OperatorLip;
  RepresentationPtr rep;
  GroupModelPtr group;
  std::shared_ptr<const std::vector<ExtraLipPoint>> extras;  // sampled kind only
  CosetSpacePtr coset;

  double operator()(const Mat& x) const;
  double operator()(const SymbolFunction& f) const;
  /// True when the value is only a grid lower estimate of the continuum sup.
  bool lower_estimate() const;
  int base_dim() const { return kind == Kind::OperatorLip ? rep->dim : 1; }
};

Seminorm operator_lip_seminorm(RepresentationPtr rep,
                               std::shared_ptr<const std::vector<ExtraLipPoint>> extras = nullptr);
Seminorm function_lip_seminorm(CosetSpacePtr coset);

double lip_norm_operator(const Representation& rep, const GroupModel& group, const Mat& x);
double lip_norm_function(const CosetSpace& coset, const SymbolFunction& f);

bool ball_membership(const Seminorm& sem, const Mat& x, double radius);
bool ball_membership(const Seminorm& sem, const SymbolFunction& f, double radius);

struct SlipnormAxiomReport {
  int trials = 0;
  double compression_worst_slack = 0;  // max of L_m(aAb) - |a| L_n(A) |b|
  double direct_sum_worst_dev = 0;     // max of |L_{m+n}(diag) - max(L_m, L_n)|
  double unit_value = 0;               // L_1(1)
  bool pass(double slack) const {
    return compression_worst_slack <= slack && direct_sum_worst_dev <= slack &&
           unit_value <= slack;
  }
};

/// Empirical check of the matrix slip-norm axioms on random observables at
/// amplification levels up to max_level.
SlipnormAxiomReport check_matrix_slipnorm_axioms(const Seminorm& family, int trials,
                                                 int max_level, std::uint64_t seed);

}  // namespace propq
