#pragma once

// Shared dense linear-algebra types and small tensor-product helpers used
// across the library. All operators act on the 2^N-dimensional spin-1/2
// chain space (optionally with one or two auxiliary C^2 factors in front).
//
// Conventions:
//  * local basis: index 0 = spin up, index 1 = spin down
//  * site 1 occupies the most significant bit of the global basis index,
//    auxiliary spaces (when present) are more significant still
//  * E(a,b) is the 2x2 elementary matrix with a 1 in row a, column b
//    (zero-based), so E(0,1) = sigma^+ and E(1,0) = sigma^-.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace sovchain {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RowVec = Eigen::RowVectorXcd;

inline constexpr cplx I1{0.0, 1.0};

inline Mat mat_id(Eigen::Index n) { return Mat::Identity(n, n); }

inline Mat elementary(int a, int b) {
  Mat e = Mat::Zero(2, 2);
  e(a, b) = 1.0;
  return e;
}

inline Mat sigma_x() { return (Mat(2, 2) << 0, 1, 1, 0).finished(); }
inline Mat sigma_y() { return (Mat(2, 2) << 0, -I1, I1, 0).finished(); }
inline Mat sigma_z() { return (Mat(2, 2) << 1, 0, 0, -1).finished(); }
inline Mat sigma_plus() { return elementary(0, 1); }
inline Mat sigma_minus() { return elementary(1, 0); }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Operator acting as `op` on one C^2 factor of an n_factors-fold tensor
// product, identity elsewhere. Factor 0 is the most significant.
inline Mat embed_one(const Mat& op, int factor, int n_factors) {
  Eigen::Index dim = Eigen::Index(1) << n_factors;
  Mat out = Mat::Zero(dim, dim);
  const int shift = n_factors - 1 - factor;
  const Eigen::Index bit = Eigen::Index(1) << shift;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int cb = int((col >> shift) & 1);
    const Eigen::Index base = col & ~bit;
    for (int rb = 0; rb < 2; ++rb) {
      const cplx v = op(rb, cb);
      if (v != 0.0) out(base | (Eigen::Index(rb) << shift), col) += v;
    }
  }
  return out;
}

// Two-site operator `op4` (4x4, row/col index = 2*iA + iB) acting on factors
// fA and fB of an n_factors-fold tensor product.
inline Mat embed_two(const Mat& op4, int fA, int fB, int n_factors) {
  Eigen::Index dim = Eigen::Index(1) << n_factors;
  Mat out = Mat::Zero(dim, dim);
  const int sA = n_factors - 1 - fA;
  const int sB = n_factors - 1 - fB;
  const Eigen::Index mA = Eigen::Index(1) << sA;
  const Eigen::Index mB = Eigen::Index(1) << sB;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int ca = int((col >> sA) & 1);
    const int cb = int((col >> sB) & 1);
    const Eigen::Index base = col & ~(mA | mB);
    for (int ra = 0; ra < 2; ++ra)
      for (int rb = 0; rb < 2; ++rb) {
        const cplx v = op4(2 * ra + rb, 2 * ca + cb);
        if (v != 0.0)
          out(base | (Eigen::Index(ra) << sA) | (Eigen::Index(rb) << sB),
              col) += v;
      }
  }
  return out;
}

// Operator `op` on site n (1-based) of an N-site chain.
inline Mat site_op(const Mat& op, int n, int n_sites) {
  return embed_one(op, n - 1, n_sites);
}

template <typename DerivedA, typename DerivedB>
double rel_residual(const Eigen::MatrixBase<DerivedA>& lhs,
                    const Eigen::MatrixBase<DerivedB>& rhs) {
  double scale = lhs.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

// Deterministic complex draws for randomized identity sweeps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  cplx box(double scale = 1.0) { return scale * cplx(real(), real()); }
  Vec cvec(Eigen::Index n, double scale = 1.0) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = box(scale);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sovchain
