#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace propq {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Operator (spectral) norm. Uses the Hermitian eigensolver when the input
/// is Hermitian up to round-off, otherwise sqrt of the top eigenvalue of M*M.
double operator_norm(const Mat& m);

/// ||M - M*|| in operator norm.
double hermitian_defect(const Mat& m);

bool is_hermitian(const Mat& m, double tol = 1e-10);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Mat& m);

Mat random_hermitian(int dim, std::mt19937_64& rng);

/// Orthonormal basis (w.r.t. tr(A*B)) of the traceless Hermitian d x d matrices.
std::vector<Mat> traceless_hermitian_basis(int dim);

Mat kron(const Mat& a, const Mat& b);

/// (1_q ⊗ u) X (1_q ⊗ u)^* computed block-wise; X is (q*d) x (q*d), u is d x d.
Mat block_conjugate(const Mat& x, const Mat& u);

/// q x q matrix of unnormalized traces of the d x d blocks of F ((q*d) square).
Mat blockwise_trace(const Mat& f, int q, int d);

/// Layout helpers for M_q(B^m ⊗ B^n) stored as a (q*dm*dn) square matrix with
/// index (a, i, mu) -> a*dm*dn + i*dn + mu.
Mat embed_left_factor(const Mat& t, int dn);             // M_q(B^m) -> M_q(B^m ⊗ B^n); plain kron(t, 1_dn)
Mat embed_right_factor(const Mat& s, int q, int dm, int dn);  // M_q(B^n) -> M_q(B^m ⊗ B^n)
Mat block_ptrace_right(const Mat& f, int q, int dm, int dn);  // unnormalized trace over the B^n factor
Mat block_ptrace_left(const Mat& f, int q, int dm, int dn);   // unnormalized trace over the B^m factor

/// SplitMix64 combine, used to derive independent deterministic RNG streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace propq
