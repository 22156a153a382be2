#include "propq/representation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace propq {

namespace {

constexpr int kMaxTwoJ = 16;

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void validate_representation(const Representation& rep) {
  const auto& g = *rep.group;
  if (static_cast<int>(rep.matrices.size()) != g.size())
    throw ShapeError("representation needs one matrix per group element");
  for (const auto& u : rep.matrices) {
    if (u.rows() != rep.dim || u.cols() != rep.dim)
      throw ShapeError("representation matrices have inconsistent dimension");
    if (operator_norm(Mat(u * u.adjoint() - Mat::Identity(rep.dim, rep.dim))) > 1e-10)
      throw ValidationError("representation matrix is not unitary");
  }
  if (operator_norm(Mat(rep.matrices[g.identity] - Mat::Identity(rep.dim, rep.dim))) > 1e-10)
    throw ValidationError("representation does not map the identity to 1");
  if (g.finite()) {
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b)
        if (operator_norm(Mat(rep.matrices[g.table[a][b]] - rep.matrices[a] * rep.matrices[b])) >
            1e-10)
          throw ValidationError("representation is not a homomorphism at (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
  }
}

double ergodicity_probe(const Representation& rep) {
  const auto& g = *rep.group;
  std::mt19937_64 rng(mix_seed(0xE260D1C1u, rep.dim));
  const Mat t = random_hermitian(rep.dim, rng);
  Mat avg = Mat::Zero(rep.dim, rep.dim);
  for (int x = 0; x < g.size(); ++x) {
    if (g.haar_weight(x) == 0.0) continue;
    avg += g.haar_weight(x) * (rep.matrices[x] * t * rep.matrices[x].adjoint());
  }
  const Cplx tau = t.trace() / static_cast<double>(rep.dim);
  return operator_norm(Mat(avg - tau * Mat::Identity(rep.dim, rep.dim)));
}

}  // namespace

RepresentationPtr make_representation(GroupModelPtr group, std::vector<Mat> matrices,
                                      std::string label, double spin) {
  auto rep = std::make_shared<Representation>();
  rep->group = std::move(group);
  rep->matrices = std::move(matrices);
  if (rep->matrices.empty()) throw ShapeError("empty representation");
  rep->dim = static_cast<int>(rep->matrices[0].rows());
  rep->label = std::move(label);
  rep->spin = spin;
  validate_representation(*rep);
  rep->ergodicity_defect = ergodicity_probe(*rep);
  return rep;
}

std::vector<Mat> spin_operators(int two_j) {
  const int d = two_j + 1;
  const double j = two_j / 2.0;
  Mat jz = Mat::Zero(d, d), jp = Mat::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    const double m = j - r;
    jz(r, r) = m;
    if (r + 1 < d) jp(r, r + 1) = std::sqrt(j * (j + 1) - (m - 1) * m);  // J+ |j,m-1> -> |j,m>
  }
  const Mat jm = jp.adjoint();
  return {(jp + jm) / 2.0, (jp - jm) / Cplx(0, 2.0), jz};
}

Mat wigner_matrix(const Quaternion& q, int two_j) {
  if (two_j < 0 || two_j > kMaxTwoJ) throw ParameterError("spin out of supported range");
  const int d = two_j + 1;
  const Cplx a(q.w, -q.z), b(-q.y, -q.x);

  std::vector<Cplx> ap(two_j + 1), acp(two_j + 1), bp(two_j + 1), nbcp(two_j + 1);
  ap[0] = acp[0] = bp[0] = nbcp[0] = 1.0;
  for (int k = 1; k <= two_j; ++k) {
    ap[k] = ap[k - 1] * a;
    acp[k] = acp[k - 1] * std::conj(a);
    bp[k] = bp[k - 1] * b;
    nbcp[k] = nbcp[k - 1] * (-std::conj(b));
  }

  Mat u(d, d);
  for (int rp = 0; rp < d; ++rp) {
    const int jmp = two_j - rp;  // j + m'
    const int jmq = rp;          // j - m'
    for (int r = 0; r < d; ++r) {
      const int jm = two_j - r;  // j + m
      const int jn = r;          // j - m
      Cplx sum = 0;
      const int p_lo = std::max(0, jmp - jn);
      const int p_hi = std::min(jm, jmp);
      for (int p = p_lo; p <= p_hi; ++p) {
        const int qq = jmp - p;  // taken from the (j - m) factor
        const double comb = factorial(jm) / (factorial(p) * factorial(jm - p)) * factorial(jn) /
                            (factorial(qq) * factorial(jn - qq));
        sum += comb * ap[p] * nbcp[jm - p] * bp[qq] * acp[jn - qq];
      }
      u(rp, r) = sum * std::sqrt(factorial(jmp) * factorial(jmq) / (factorial(jm) * factorial(jn)));
    }
  }
  return u;
}

RepresentationPtr spin_representation(GroupModelPtr group, double j) {
  const double two_j = 2.0 * j;
  if (j < 0 || std::abs(two_j - std::round(two_j)) > 1e-12)
    throw ParameterError("spin must be a nonnegative half-integer");
  if (!group || group->kind != GroupKind::SampledSU2)
    throw ParameterError("spin representations require a sampled SU(2) group");
  const int tj = static_cast<int>(std::llround(two_j));

  auto rep = std::make_shared<Representation>();
  rep->group = group;
  rep->dim = tj + 1;
  rep->spin = j;
  rep->label = "spin-" + std::to_string(tj) + "/2";
  rep->matrices.reserve(group->size());
  for (int i = 0; i < group->size(); ++i)
    rep->matrices.push_back(wigner_matrix(group->quaternion(i), tj));
  validate_representation(*rep);
  rep->ergodicity_defect = ergodicity_probe(*rep);
  return rep;
}

Mat conjugation_action(const Representation& rep, int x, const Mat& t) {
  rep.group->check_index(x);
  if (t.rows() != t.cols() || t.rows() % rep.dim != 0)
    throw ShapeError("conjugation_action: operand dimension is not a multiple of the representation dimension");
  return block_conjugate(t, rep.matrices[x]);
}

Mat highest_weight_projection(const Representation& rep) {
  Mat p = Mat::Zero(rep.dim, rep.dim);
  p(0, 0) = 1.0;
  return p;
}

ProjectionData stability_subgroup(RepresentationPtr rep, const Mat& p, double tol) {
  if (!rep) throw ParameterError("null representation");
  if (p.rows() != rep->dim || p.cols() != rep->dim)
    throw ShapeError("projection dimension does not match the representation");
  if (tol < 0) tol = rep->group->finite() ? 1e-8 : 1e-6;

  const double proj_tol = std::max(tol, 1e-10);
  if (hermitian_defect(p) > proj_tol || operator_norm(Mat(p * p - p)) > proj_tol ||
      std::abs(p.trace().real() - 1.0) > proj_tol || std::abs(p.trace().imag()) > proj_tol)
    throw ValidationError("P is not a rank-one projection");

  ProjectionData out;
  out.rep = rep;
  out.projection = p;
  out.tol = tol;
  const auto& g = *rep->group;
  for (int x = 0; x < g.size(); ++x)
    if (operator_norm(Mat(conjugation_action(*rep, x, p) - p)) <= tol)
      out.stability_elements.push_back(x);

  if (g.finite()) {
    std::set<int> members(out.stability_elements.begin(), out.stability_elements.end());
    for (int a : out.stability_elements)
      for (int b : out.stability_elements)
        if (!members.count(g.table[a][b]))
          throw ValidationError(
              "stability set is not closed under composition; retry with a smaller tol");
  }
  return out;
}

}  // namespace propq
