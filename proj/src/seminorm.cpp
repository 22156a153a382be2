#include "propq/seminorm.hpp"

#include <cmath>

namespace propq {

Observable Observable::wrap(Mat m, int dim) {
  if (m.rows() != m.cols() || m.rows() % dim != 0)
    throw ShapeError("observable is not a block matrix over the given dimension");
  Observable o;
  o.dim = dim;
  o.q = static_cast<int>(m.rows()) / dim;
  o.hermitian = hermitian_defect(m) <= 1e-12;
  o.mat = std::move(m);
  return o;
}

SymbolFunction SymbolFunction::constant(CosetSpacePtr coset, const Mat& value) {
  SymbolFunction f;
  f.coset = std::move(coset);
  f.q = static_cast<int>(value.rows());
  f.values.assign(f.coset->size(), value);
  return f;
}

SymbolFunction SymbolFunction::scalar(CosetSpacePtr coset, const RVec& values) {
  if (values.size() != coset->size())
    throw ShapeError("scalar function needs one value per coset point");
  SymbolFunction f;
  f.coset = std::move(coset);
  f.q = 1;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    Mat v(1, 1);
    v(0, 0) = values(i);
    f.values.push_back(v);
  }
  return f;
}

double SymbolFunction::sup_norm() const {
  double s = 0;
  for (const auto& v : values) s = std::max(s, operator_norm(v));
  return s;
}

bool SymbolFunction::hermitian_valued(double tol) const {
  for (const auto& v : values)
    if (hermitian_defect(v) > tol) return false;
  return true;
}

SymbolFunction SymbolFunction::adjoint() const {
  SymbolFunction f = *this;
  for (auto& v : f.values) v = v.adjoint().eval();
  return f;
}

namespace {

double action_lip_eval(const Representation& rep, const std::vector<ExtraLipPoint>* extras,
                       const Mat& x) {
  if (x.rows() != x.cols() || x.rows() % rep.dim != 0)
    throw ShapeError("operand dimension is not a multiple of the representation dimension");
  const auto& g = *rep.group;
  double best = 0;
  for (int e = 0; e < g.size(); ++e) {
    if (e == g.identity) continue;
    const double l = g.length(e);
    if (l <= 1e-14) continue;
    best = std::max(best, operator_norm(Mat(block_conjugate(x, rep.unitary(e)) - x)) / l);
  }
  if (extras)
    for (const auto& pt : *extras) {
      if (pt.length <= 1e-14) continue;
      best = std::max(best, operator_norm(Mat(block_conjugate(x, pt.unitary) - x)) / pt.length);
    }
  return best;
}

}  // namespace

double Seminorm::operator()(const Mat& x) const {
  if (kind != Kind::OperatorLip)
    throw ShapeError("function-side seminorm applied to an operator");
  return action_lip_eval(*rep, extras ? extras.get() : nullptr, x);
}

double Seminorm::operator()(const SymbolFunction& f) const {
  if (kind != Kind::FunctionLip)
    throw ShapeError("operator-side seminorm applied to a symbol function");
  if (f.coset.get() != coset.get())
    throw ShapeError("symbol function lives on a different coset space");
  return lip_norm_function(*coset, f);
}

bool Seminorm::lower_estimate() const {
  if (kind == Kind::OperatorLip) return !group->finite();
  return false;  // finite sample of an exactly known metric
}

Seminorm operator_lip_seminorm(RepresentationPtr rep,
                               std::shared_ptr<const std::vector<ExtraLipPoint>> extras) {
  Seminorm s;
  s.kind = Seminorm::Kind::OperatorLip;
  s.group = rep->group;
  s.rep = std::move(rep);
  s.extras = std::move(extras);
  return s;
}

Seminorm function_lip_seminorm(CosetSpacePtr coset) {
  Seminorm s;
  s.kind = Seminorm::Kind::FunctionLip;
  s.coset = std::move(coset);
  return s;
}

double lip_norm_operator(const Representation& rep, const GroupModel& group, const Mat& x) {
  if (rep.group.get() != &group)
    throw ParameterError("lip_norm_operator: group is not the representation's group");
  return action_lip_eval(rep, nullptr, x);
}

double lip_norm_function(const CosetSpace& coset, const SymbolFunction& f) {
  if (static_cast<int>(f.values.size()) != coset.size())
    throw ShapeError("symbol function needs one value per coset point");
  double best = 0;
  for (int i = 0; i < coset.size(); ++i)
    for (int j = i + 1; j < coset.size(); ++j)
      best = std::max(best, operator_norm(Mat(f.values[i] - f.values[j])) / coset.metric(i, j));
  return best;
}

bool ball_membership(const Seminorm& sem, const Mat& x, double radius) {
  if (radius <= 0) throw ParameterError("ball radius must be positive");
  if (hermitian_defect(x) > 1e-10) return false;
  return sem(x) <= radius;
}

bool ball_membership(const Seminorm& sem, const SymbolFunction& f, double radius) {
  if (radius <= 0) throw ParameterError("ball radius must be positive");
  if (!f.hermitian_valued(1e-10)) return false;
  return sem(f) <= radius;
}

SlipnormAxiomReport check_matrix_slipnorm_axioms(const Seminorm& family, int trials,
                                                 int max_level, std::uint64_t seed) {
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (family.kind != Seminorm::Kind::OperatorLip)
    throw ParameterError("axiom check expects the operator-side family");
  const int d = family.rep->dim;

  SlipnormAxiomReport report;
  report.trials = trials;
  report.unit_value = family(Mat::Identity(d, d));

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    std::uniform_int_distribution<int> level(1, max_level);
    const int n = level(rng), m = level(rng);

    // Axiom 1: L_m(a A b) <= |a| L_n(A) |b| for scalar rectangular a, b.
    const Mat amp_a = Mat::NullaryExpr(m, n, [&](Eigen::Index, Eigen::Index) {
      std::normal_distribution<double> gauss;
      return Cplx(gauss(rng), gauss(rng));
    });
    const Mat amp_b = Mat::NullaryExpr(n, m, [&](Eigen::Index, Eigen::Index) {
      std::normal_distribution<double> gauss;
      return Cplx(gauss(rng), gauss(rng));
    });
    const Mat a_obs = random_hermitian(n * d, rng);
    const Mat compressed = kron(amp_a, Mat::Identity(d, d)) * a_obs * kron(amp_b, Mat::Identity(d, d));
    const double lhs = family(compressed);
    const double rhs = operator_norm(amp_a) * family(a_obs) * operator_norm(amp_b);
    report.compression_worst_slack = std::max(report.compression_worst_slack, lhs - rhs);

    // Axiom 2: L_{m+n}(diag(A, C)) = max(L_n(A), L_m(C)).
    const Mat c_obs = random_hermitian(m * d, rng);
    Mat diag = Mat::Zero((n + m) * d, (n + m) * d);
    diag.topLeftCorner(n * d, n * d) = a_obs;
    diag.bottomRightCorner(m * d, m * d) = c_obs;
    const double whole = family(diag);
    const double parts = std::max(family(a_obs), family(c_obs));
    report.direct_sum_worst_dev = std::max(report.direct_sum_worst_dev, std::abs(whole - parts));
  }
  return report;
}

}  // namespace propq
