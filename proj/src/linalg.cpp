#include "propq/linalg.hpp"

#include <cmath>

#include "propq/error.hpp"

namespace propq {

namespace {

// Closed form for 2x2 Hermitian spectral radius; the general path goes
// through Eigen's solver.
double hermitian_norm_2x2(const Mat& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double b2 = std::norm(m(0, 1));
  const double tr = a + d;
  const double disc = std::sqrt(std::max(0.0, (a - d) * (a - d) + 4.0 * b2));
  return std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
}

double hermitian_norm(const Mat& m) {
  if (m.rows() == 1) return std::abs(m(0, 0).real());
  if (m.rows() == 2) return hermitian_norm_2x2(m);
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

double operator_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() == m.cols()) {
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale) {
      return hermitian_norm((m + m.adjoint()) / 2.0);
    }
  }
  const Mat gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Mat> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double hermitian_defect(const Mat& m) { return operator_norm(Mat(m - m.adjoint())); }

bool is_hermitian(const Mat& m, double tol) {
  return m.rows() == m.cols() && hermitian_defect(m) <= tol;
}

double min_eigenvalue(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Mat random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Cplx(gauss(rng), gauss(rng));
  return (g + g.adjoint()) / 2.0;
}

std::vector<Mat> traceless_hermitian_basis(int dim) {
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(dim) * dim - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Mat sym = Mat::Zero(dim, dim);
      sym(i, j) = inv_sqrt2;
      sym(j, i) = inv_sqrt2;
      basis.push_back(sym);
      Mat asym = Mat::Zero(dim, dim);
      asym(i, j) = Cplx(0, -inv_sqrt2);
      asym(j, i) = Cplx(0, inv_sqrt2);
      basis.push_back(asym);
    }
  }
  for (int k = 1; k < dim; ++k) {
    Mat diag = Mat::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) diag(i, i) = norm;
    diag(k, k) = -static_cast<double>(k) * norm;
    basis.push_back(diag);
  }
  return basis;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat block_conjugate(const Mat& x, const Mat& u) {
  const int d = static_cast<int>(u.rows());
  if (x.rows() != x.cols() || x.rows() % d != 0)
    throw ShapeError("block_conjugate: operand is not a block matrix over the representation space");
  const int q = static_cast<int>(x.rows()) / d;
  Mat out(x.rows(), x.cols());
  const Mat uadj = u.adjoint();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      out.block(a * d, b * d, d, d) = u * x.block(a * d, b * d, d, d) * uadj;
  return out;
}

Mat blockwise_trace(const Mat& f, int q, int d) {
  if (f.rows() != q * d || f.cols() != q * d)
    throw ShapeError("blockwise_trace: expected a (q*d) square matrix");
  Mat out(q, q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) out(a, b) = f.block(a * d, b * d, d, d).trace();
  return out;
}

Mat embed_left_factor(const Mat& t, int dn) {
  return kron(t, Mat::Identity(dn, dn));
}

Mat embed_right_factor(const Mat& s, int q, int dm, int dn) {
  if (s.rows() != q * dn || s.cols() != q * dn)
    throw ShapeError("embed_right_factor: expected a (q*dn) square matrix");
  const int fiber = dm * dn;
  Mat out = Mat::Zero(q * fiber, q * fiber);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int i = 0; i < dm; ++i)
        for (int mu = 0; mu < dn; ++mu)
          for (int nu = 0; nu < dn; ++nu)
            out(a * fiber + i * dn + mu, b * fiber + i * dn + nu) = s(a * dn + mu, b * dn + nu);
  return out;
}

Mat block_ptrace_right(const Mat& f, int q, int dm, int dn) {
  const int fiber = dm * dn;
  if (f.rows() != q * fiber || f.cols() != q * fiber)
    throw ShapeError("block_ptrace_right: expected a (q*dm*dn) square matrix");
  Mat out = Mat::Zero(q * dm, q * dm);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) {
          Cplx s = 0;
          for (int mu = 0; mu < dn; ++mu)
            s += f(a * fiber + i * dn + mu, b * fiber + j * dn + mu);
          out(a * dm + i, b * dm + j) = s;
        }
  return out;
}

Mat block_ptrace_left(const Mat& f, int q, int dm, int dn) {
  const int fiber = dm * dn;
  if (f.rows() != q * fiber || f.cols() != q * fiber)
    throw ShapeError("block_ptrace_left: expected a (q*dm*dn) square matrix");
  Mat out = Mat::Zero(q * dn, q * dn);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int mu = 0; mu < dn; ++mu)
        for (int nu = 0; nu < dn; ++nu) {
          Cplx s = 0;
          for (int i = 0; i < dm; ++i)
            s += f(a * fiber + i * dn + mu, b * fiber + i * dn + nu);
          out(a * dn + mu, b * dn + nu) = s;
        }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace propq
