#pragma once

// Dense construction of the rational six-vertex objects on an open chain:
// R-matrix, boundary K-matrices, bulk and double-row monodromy matrices,
// the one-parameter transfer-matrix family and the associated Hamiltonians.
//
// Operators carrying one auxiliary space are stored as four quantum-space
// blocks [[A,B],[C,D]] (auxiliary index outermost).

#include <array>
#include <functional>
#include <stdexcept>

#include "sovchain/boundary.hpp"
#include "sovchain/chain.hpp"
#include "sovchain/types.hpp"

namespace sovchain {

// 4x4 rational R-matrix; index = 2*i_first + i_second.
inline Mat r_matrix(cplx lambda, cplx eta) {
  Mat r = Mat::Zero(4, 4);
  r(0, 0) = r(3, 3) = lambda + eta;
  r(1, 1) = r(2, 2) = lambda;
  r(1, 2) = r(2, 1) = eta;
  return r;
}

// General non-diagonal 2x2 boundary matrix.
inline Mat k_matrix(cplx lambda, cplx zeta, cplx kappa, cplx tau) {
  if (zeta == 0.0) throw std::domain_error("k_matrix: zeta must be nonzero");
  Mat k(2, 2);
  k(0, 0) = (zeta + lambda) / zeta;
  k(0, 1) = 2.0 * kappa * std::exp(tau) * lambda / zeta;
  k(1, 0) = 2.0 * kappa * std::exp(-tau) * lambda / zeta;
  k(1, 1) = (zeta - lambda) / zeta;
  return k;
}

inline Mat k_minus(cplx lambda, const BoundaryParams& bp, cplx eta) {
  return k_matrix(lambda - eta / 2.0, bp.zeta_minus, bp.kappa_minus, bp.tau_minus);
}
inline Mat k_plus(cplx lambda, const BoundaryParams& bp, cplx eta) {
  return k_matrix(lambda + eta / 2.0, bp.zeta_plus, bp.kappa_plus, bp.tau_plus);
}

// Quantum determinants of the scalar boundary matrices and of the double-row
// monodromies.
inline cplx detq_k_plus(cplx lambda, const BoundaryParams& bp, cplx eta) {
  cplx zb = bp.zbar_plus();
  return 2.0 * (lambda + eta) * (lambda * lambda / (zb * zb) - 1.0);
}
inline cplx detq_k_minus(cplx lambda, const BoundaryParams& bp, cplx eta) {
  cplx zb = bp.zbar_minus();
  return -2.0 * (lambda - eta) * (lambda * lambda / (zb * zb) - 1.0);
}
inline cplx detq_u_minus(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  return chain.detq_bulk(lambda) * chain.detq_bulk(-lambda) * detq_k_minus(lambda, bp, chain.eta);
}
inline cplx detq_u_plus(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  return chain.detq_bulk(lambda) * chain.detq_bulk(-lambda) * detq_k_plus(lambda, bp, chain.eta);
}

// Quantum-space blocks of an operator with one auxiliary C^2 factor.
struct Monodromy {
  Mat A, B, C, D;

  Eigen::Index qdim() const { return A.rows(); }

  Mat full() const {
    Eigen::Index d = qdim();
    Mat m(2 * d, 2 * d);
    m.block(0, 0, d, d) = A;
    m.block(0, d, d, d) = B;
    m.block(d, 0, d, d) = C;
    m.block(d, d, d, d) = D;
    return m;
  }

  Monodromy operator*(const Monodromy& o) const {
    return {A * o.A + B * o.C, A * o.B + B * o.D,
            C * o.A + D * o.C, C * o.B + D * o.D};
  }

  // multiply by a scalar 2x2 matrix acting on the auxiliary space
  Monodromy aux_mul_left(const Mat& k) const {  // (k (x) Id) * this
    return {k(0, 0) * A + k(0, 1) * C, k(0, 0) * B + k(0, 1) * D,
            k(1, 0) * A + k(1, 1) * C, k(1, 0) * B + k(1, 1) * D};
  }
  Monodromy aux_transpose() const { return {A, C, B, D}; }

  Mat aux_trace() const { return A + D; }
};

// M(lambda) = R_{0N}(lambda - xi_N - eta/2) ... R_{01}(lambda - xi_1 - eta/2)
inline Monodromy bulk_monodromy(cplx lambda, const ChainSpec& chain) {
  const int N = chain.n_sites;
  const int nf = N + 1;  // auxiliary factor in front
  Eigen::Index dim = Eigen::Index(1) << nf;
  Mat m = Mat::Identity(dim, dim);
  for (int n = N; n >= 1; --n) {
    Mat r = r_matrix(lambda - chain.xi[n - 1] - chain.eta / 2.0, chain.eta);
    m = m * embed_two(r, 0, n, nf);
  }
  Eigen::Index d = chain.dim();
  return {m.block(0, 0, d, d), m.block(0, d, d, d),
          m.block(d, 0, d, d), m.block(d, d, d, d)};
}

// hat M(lambda) = (-1)^N sigma_0^y M^{t_0}(-lambda) sigma_0^y
inline Monodromy hat_monodromy(const Monodromy& at_minus_lambda, int n_sites) {
  double s = (n_sites % 2 == 0) ? 1.0 : -1.0;
  const Monodromy& m = at_minus_lambda;
  return {s * m.D, -s * m.B, -s * m.C, s * m.A};
}

inline Monodromy hat_monodromy(cplx lambda, const ChainSpec& chain) {
  return hat_monodromy(bulk_monodromy(-lambda, chain), chain.n_sites);
}

// U_-(lambda) = M(lambda) K_-(lambda) hat M(lambda), for a caller-supplied
// 2x2 boundary matrix (original, triangular or diagonal picture).
inline Monodromy u_minus_with_k(cplx lambda, const ChainSpec& chain, const Mat& k2) {
  Monodromy m = bulk_monodromy(lambda, chain);
  Monodromy mh = hat_monodromy(bulk_monodromy(-lambda, chain), chain.n_sites);
  return m * mh.aux_mul_left(k2);
}

// U_+^{t_0}(lambda) = M^{t_0}(lambda) K_+^{t_0}(lambda) hat M^{t_0}(lambda);
// stored blocks are [[A_+, C_+],[B_+, D_+]].
inline Monodromy u_plus_t0_with_k(cplx lambda, const ChainSpec& chain, const Mat& k2) {
  Monodromy mt = bulk_monodromy(lambda, chain).aux_transpose();
  Monodromy mht = hat_monodromy(bulk_monodromy(-lambda, chain), chain.n_sites).aux_transpose();
  return mt * mht.aux_mul_left(k2.transpose());
}

inline Monodromy u_minus(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  return u_minus_with_k(lambda, chain, k_minus(lambda, bp, chain.eta));
}
inline Monodromy u_plus_t0(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  return u_plus_t0_with_k(lambda, chain, k_plus(lambda, bp, chain.eta));
}

// T(lambda) = tr_0 { K_+(lambda) U_-(lambda) }, generic boundary matrices.
inline Mat transfer_with_k(cplx lambda, const ChainSpec& chain, const Mat& k2m, const Mat& k2p) {
  Monodromy u = u_minus_with_k(lambda, chain, k2m);
  return u.aux_mul_left(k2p).aux_trace();
}

inline Mat transfer_matrix(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  return transfer_with_k(lambda, chain, k_minus(lambda, bp, chain.eta),
                         k_plus(lambda, bp, chain.eta));
}

// Same family through the other trace, tr_0 { K_-(lambda) U_+(lambda) }.
inline Mat transfer_matrix_via_plus(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  Monodromy upt = u_plus_t0(lambda, chain, bp);
  // tr{K_- U_+} = tr{K_-^{t} U_+^{t_0}}
  return upt.aux_mul_left(k_minus(lambda, bp, chain.eta).transpose()).aux_trace();
}

// Central value T(+-eta/2) = 2 (-1)^N detq M(0).
inline cplx transfer_central_value(const ChainSpec& chain) {
  double s = (chain.n_sites % 2 == 0) ? 1.0 : -1.0;
  return 2.0 * s * chain.detq_bulk(0.0);
}

enum class HamiltonianSource { explicit_form, from_transfer };

// Heisenberg chain with boundary fields, built from Pauli matrices.
inline Mat hamiltonian_explicit(const ChainSpec& chain, const BoundaryParams& bp) {
  const int N = chain.n_sites;
  Eigen::Index d = chain.dim();
  Mat h = Mat::Zero(d, d);
  for (int i = 1; i < N; ++i) {
    h += site_op(sigma_x(), i, N) * site_op(sigma_x(), i + 1, N);
    h += site_op(sigma_y(), i, N) * site_op(sigma_y(), i + 1, N);
    h += site_op(sigma_z(), i, N) * site_op(sigma_z(), i + 1, N);
  }
  cplx eta = chain.eta;
  h += eta / bp.zeta_minus *
       (site_op(sigma_z(), 1, N) +
        2.0 * bp.kappa_minus * (std::exp(bp.tau_minus) * site_op(sigma_plus(), 1, N) +
                                std::exp(-bp.tau_minus) * site_op(sigma_minus(), 1, N)));
  h += eta / bp.zeta_plus *
       (site_op(sigma_z(), N, N) +
        2.0 * bp.kappa_plus * (std::exp(bp.tau_plus) * site_op(sigma_plus(), N, N) +
                               std::exp(-bp.tau_plus) * site_op(sigma_minus(), N, N)));
  return h;
}

// Normalized transfer-matrix derivative at lambda = eta/2 (homogeneous chain
// only); equals the explicit Hamiltonian up to an additive constant.
inline Mat hamiltonian_from_transfer(const ChainSpec& chain, const BoundaryParams& bp,
                                     double step_scale = 1e-5) {
  for (cplx x : chain.xi)
    if (x != 0.0)
      throw std::domain_error("hamiltonian_from_transfer: chain must be homogeneous");
  const cplx eta = chain.eta;
  const double h = step_scale * std::abs(eta);
  Mat tp = transfer_matrix(eta / 2.0 + h, chain, bp);
  Mat tm = transfer_matrix(eta / 2.0 - h, chain, bp);
  Mat deriv = (tp - tm) / (2.0 * h);
  cplx trkp = k_plus(eta / 2.0, bp, eta).trace();
  cplx trkm = k_minus(eta / 2.0, bp, eta).trace();
  cplx norm = 2.0 * std::pow(eta, 1.0 - 2.0 * chain.n_sites) / (trkp * trkm);
  return norm * deriv;
}

inline Mat hamiltonian(const ChainSpec& chain, const BoundaryParams& bp,
                       HamiltonianSource source = HamiltonianSource::explicit_form) {
  return source == HamiltonianSource::explicit_form
             ? hamiltonian_explicit(chain, bp)
             : hamiltonian_from_transfer(chain, bp);
}

// ---------------------------------------------------------------------------
// defining-relation residuals (Yang-Baxter, RTT, reflection, inversion)

inline double ybe_residual(cplx lambda, cplx mu, cplx eta) {
  Mat r12 = embed_two(r_matrix(lambda - mu, eta), 0, 1, 3);
  Mat r13 = embed_two(r_matrix(lambda, eta), 0, 2, 3);
  Mat r23 = embed_two(r_matrix(mu, eta), 1, 2, 3);
  return rel_residual(r12 * r13 * r23, r23 * r13 * r12);
}

namespace detail {
// Lift a one-auxiliary-space operator to two auxiliary spaces (a,b in front
// of the quantum space), acting on the chosen one.
inline Mat lift_two_aux(const Monodromy& m, int which_aux) {
  Eigen::Index d = m.qdim();
  Mat out = Mat::Zero(4 * d, 4 * d);
  std::array<std::array<const Mat*, 2>, 2> blk{{{&m.A, &m.B}, {&m.C, &m.D}}};
  for (int ra = 0; ra < 2; ++ra)
    for (int ca = 0; ca < 2; ++ca) {
      const Mat& q = *blk[ra][ca];
      for (int other = 0; other < 2; ++other) {
        int row = which_aux == 0 ? 2 * ra + other : 2 * other + ra;
        int col = which_aux == 0 ? 2 * ca + other : 2 * other + ca;
        out.block(row * d, col * d, d, d) = q;
      }
    }
  return out;
}

inline Mat r_two_aux(cplx lambda, cplx eta, Eigen::Index qdim) {
  return kron(r_matrix(lambda, eta), mat_id(qdim));
}
}  // namespace detail

inline double rtt_residual(cplx lambda, cplx mu, const ChainSpec& chain) {
  Mat ma = detail::lift_two_aux(bulk_monodromy(lambda, chain), 0);
  Mat mb = detail::lift_two_aux(bulk_monodromy(mu, chain), 1);
  Mat r = detail::r_two_aux(lambda - mu, chain.eta, chain.dim());
  return rel_residual(r * ma * mb, mb * ma * r);
}

// Reflection equation for V_-(lambda) = U_-(lambda + eta/2).
inline double reflection_residual_minus(cplx lambda, cplx mu, const ChainSpec& chain,
                                        const BoundaryParams& bp) {
  cplx eta = chain.eta;
  Mat ua = detail::lift_two_aux(u_minus(lambda + eta / 2.0, chain, bp), 0);
  Mat ub = detail::lift_two_aux(u_minus(mu + eta / 2.0, chain, bp), 1);
  Mat rm = detail::r_two_aux(lambda - mu, eta, chain.dim());
  Mat rp = detail::r_two_aux(lambda + mu, eta, chain.dim());
  return rel_residual(rm * ua * rp * ub, ub * rp * ua * rm);
}

// Reflection equation for V_+(lambda) = U_+^{t_0}(-lambda - eta/2).
inline double reflection_residual_plus(cplx lambda, cplx mu, const ChainSpec& chain,
                                       const BoundaryParams& bp) {
  cplx eta = chain.eta;
  Mat ua = detail::lift_two_aux(u_plus_t0(-lambda - eta / 2.0, chain, bp), 0);
  Mat ub = detail::lift_two_aux(u_plus_t0(-mu - eta / 2.0, chain, bp), 1);
  Mat rm = detail::r_two_aux(lambda - mu, eta, chain.dim());
  Mat rp = detail::r_two_aux(lambda + mu, eta, chain.dim());
  return rel_residual(rm * ua * rp * ub, ub * rp * ua * rm);
}

// U_-(lambda+eta/2) U_-(-lambda+eta/2) = detq U_-(lambda) / (2(lambda-eta)).
inline double inversion_residual_minus(cplx lambda, const ChainSpec& chain,
                                       const BoundaryParams& bp) {
  Mat prod = (u_minus(lambda + chain.eta / 2.0, chain, bp) *
              u_minus(-lambda + chain.eta / 2.0, chain, bp))
                 .full();
  cplx rhs = detq_u_minus(lambda, chain, bp) / (2.0 * (lambda - chain.eta));
  return rel_residual(prod, rhs * mat_id(prod.rows()));
}

// T(xi_a - eta/2) T(xi_a + eta/2) = detq K_+- detq U_-+ / (eta^2 - 4 xi_a^2),
// with the scalar side also expressible through the dressed function A.
struct QdetReport {
  double max_operator_residual = 0.0;  // operator product vs scalar * Id
  double max_scalar_residual = 0.0;    // scalar form vs A-function form
};

inline QdetReport quantum_determinant_identity_check(const ChainSpec& chain,
                                                     const BoundaryParams& bp) {
  QdetReport rep;
  ScalarFunctions sf(chain, bp);
  cplx eta = chain.eta;
  for (int a = 1; a <= chain.n_sites; ++a) {
    cplx x = chain.xi[a - 1];
    Mat lhs = transfer_matrix(x - eta / 2.0, chain, bp) *
              transfer_matrix(x + eta / 2.0, chain, bp);
    cplx rhs = detq_k_plus(x, bp, eta) * detq_u_minus(x, chain, bp) /
               (eta * eta - 4.0 * x * x);
    cplx rhs_swapped = detq_k_minus(x, bp, eta) * detq_u_plus(x, chain, bp) /
                       (eta * eta - 4.0 * x * x);
    cplx rhs_dressed = sf.A(x + eta / 2.0) * sf.A(-x + eta / 2.0);
    rep.max_operator_residual = std::max(
        rep.max_operator_residual, rel_residual(lhs, rhs * mat_id(lhs.rows())));
    double sres = std::abs(rhs - rhs_dressed) / (std::abs(rhs) + std::abs(rhs_dressed));
    sres = std::max(sres, std::abs(rhs - rhs_swapped) / (std::abs(rhs) + std::abs(rhs_swapped)));
    rep.max_scalar_residual = std::max(rep.max_scalar_residual, sres);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// interpolation of the transfer matrix on a shifted-inhomogeneity grid

// Coefficient functions for the degree-(N+1) polynomial in lambda^2 through
// the nodes (eta/2)^2 and (xi_b^{(h_b)})^2 with prescribed leading term.
struct TransferInterpolation {
  const ChainSpec& chain;
  std::vector<int> h;  // h_b in {0,1}, size N

  cplx node(int b) const { return chain.xi_shift(b, h[b - 1]); }

  cplx u(cplx lambda) const {
    cplx e2 = chain.eta / 2.0;
    cplx p = lambda * lambda - e2 * e2;
    for (int b = 1; b <= chain.n_sites; ++b) {
      cplx xb = node(b);
      p *= lambda * lambda - xb * xb;
    }
    return p;
  }

  cplx s(cplx lambda) const {
    cplx e2 = chain.eta / 2.0;
    cplx p = 1.0;
    for (int b = 1; b <= chain.n_sites; ++b) {
      cplx xb = node(b);
      p *= (lambda * lambda - xb * xb) / (e2 * e2 - xb * xb);
    }
    return p;
  }

  cplx r(int a, cplx lambda) const {
    cplx e2 = chain.eta / 2.0;
    cplx xa = node(a);
    cplx p = (lambda * lambda - e2 * e2) / (xa * xa - e2 * e2);
    for (int b = 1; b <= chain.n_sites; ++b) {
      if (b == a) continue;
      cplx xb = node(b);
      p *= (lambda * lambda - xb * xb) / (xa * xa - xb * xb);
    }
    return p;
  }
};

// Rebuild T(lambda) from its values on the h-grid; exercises t_{N+1}, the
// central value and the interpolation coefficients together.
inline Mat transfer_via_interpolation(cplx lambda, const ChainSpec& chain,
                                      const BoundaryParams& bp, const std::vector<int>& h) {
  TransferInterpolation ti{chain, h};
  Mat acc = bp.t_leading() * ti.u(lambda) * mat_id(chain.dim());
  acc += transfer_central_value(chain) * ti.s(lambda) * mat_id(chain.dim());
  for (int a = 1; a <= chain.n_sites; ++a)
    acc += ti.r(a, lambda) * transfer_matrix(ti.node(a), chain, bp);
  return acc;
}

}  // namespace sovchain
