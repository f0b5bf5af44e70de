#pragma once

// Similarity transformation bringing both boundary matrices to triangular
// form: a single 2x2 matrix W applied on every site (Gamma_W = W^{xN}) and on
// the auxiliary space. Under the constrained choice of tau_+ the transformed
// K_- becomes diagonal and K_+ stays properly triangular, which is the
// picture in which separate states and their scalar products are computed.
//
// Shift bookkeeping (fixed numerically against the original picture):
//   Kbar_-(lambda) = I + (lambda - eta/2)/zbar_- (sigma^z + cbar_- sigma^-)
//   Kbar_+(lambda) = I + (lambda + eta/2)/zbar_+ (sigma^z + bbar_+ sigma^+)
// consistent with K_-(lambda) = K(lambda - eta/2; .) and
// K_+(lambda) = K(lambda + eta/2; .).

#include <stdexcept>

#include "sovchain/algebra.hpp"

namespace sovchain {

struct GaugeData {
  BoundaryParams bp;
  Mat w;      // 2x2
  Mat w_inv;  // 2x2
  cplx cbar_minus;
  cplx bbar_plus;

  Mat k_bar_minus(cplx lambda, cplx eta) const {
    return mat_id(2) + (lambda - eta / 2.0) / bp.zbar_minus() *
                           (sigma_z() + cbar_minus * sigma_minus());
  }
  Mat k_bar_plus(cplx lambda, cplx eta) const {
    return mat_id(2) + (lambda + eta / 2.0) / bp.zbar_plus() *
                           (sigma_z() + bbar_plus * sigma_plus());
  }

  Mat gamma_w(int n_sites) const {
    Mat g = Mat::Ones(1, 1);
    for (int n = 0; n < n_sites; ++n) g = kron(g, w);
    return g;
  }
  Mat gamma_w_inv(int n_sites) const {
    Mat g = Mat::Ones(1, 1);
    for (int n = 0; n < n_sites; ++n) g = kron(g, w_inv);
    return g;
  }
};

inline GaugeData gauge_matrix(const BoundaryParams& bp) {
  bp.validate();
  if (bp.kappa_minus == 0.0 || bp.kappa_plus == 0.0)
    throw std::domain_error(
        "gauge_matrix: kappa=0 has no triangularizing gauge; use the diagonal "
        "picture directly");
  cplx rm = bp.root_minus(), rp = bp.root_plus();
  GaugeData g;
  g.bp = bp;
  g.w = Mat(2, 2);
  g.w(0, 0) = 1.0;
  g.w(0, 1) = (-1.0 + double(bp.eps_minus) * rm) /
              (2.0 * bp.kappa_minus * std::exp(-bp.tau_minus));
  g.w(1, 0) = (1.0 - double(bp.eps_plus) * rp) /
              (2.0 * bp.kappa_plus * std::exp(bp.tau_plus));
  g.w(1, 1) = 1.0;
  cplx det = g.w(0, 0) * g.w(1, 1) - g.w(0, 1) * g.w(1, 0);
  if (std::abs(det) < 1e-12) throw std::domain_error("gauge_matrix: W singular");
  g.w_inv = Mat(2, 2);
  g.w_inv(0, 0) = g.w(1, 1) / det;
  g.w_inv(0, 1) = -g.w(0, 1) / det;
  g.w_inv(1, 0) = -g.w(1, 0) / det;
  g.w_inv(1, 1) = g.w(0, 0) / det;

  g.cbar_minus = 2.0 * double(bp.eps_minus) * bp.kappa_minus * std::exp(-bp.tau_minus) / rm *
                 (1.0 + (1.0 + double(bp.eps_minus) * rm) * (1.0 - double(bp.eps_plus) * rp) /
                            (4.0 * bp.kappa_plus * bp.kappa_minus *
                             std::exp(bp.tau_plus - bp.tau_minus)));
  g.bbar_plus = 2.0 * double(bp.eps_plus) * bp.kappa_plus * std::exp(bp.tau_plus) / rp *
                (1.0 + (1.0 - double(bp.eps_minus) * rm) * (1.0 + double(bp.eps_plus) * rp) /
                           (4.0 * bp.kappa_plus * bp.kappa_minus *
                            std::exp(bp.tau_plus - bp.tau_minus)));
  return g;
}

// cbar_- * bbar_+ in closed form; vanishing of omega_eps kills exactly one
// of the two off-diagonal couplings.
inline cplx cbar_bbar_product(const BoundaryParams& bp) {
  int eps = bp.eps_plus * bp.eps_minus;
  return double(eps) * std::exp(bp.tau_minus - bp.tau_plus) * omega_epsilon(bp, eps) /
         (4.0 * bp.kappa_plus * bp.kappa_minus * bp.root_plus() * bp.root_minus());
}

// Boundary parameters with tau_+ fixed so that cbar_- = 0 while bbar_+ != 0:
// unparallel fields isospectral to the parallel pair (zbar_-, zbar_+).
inline BoundaryParams constrained_bp(cplx kappa_minus, cplx kappa_plus, cplx tau_minus,
                                     cplx zeta_minus, cplx zeta_plus, int eps_minus = +1,
                                     int eps_plus = +1) {
  if (kappa_minus == 0.0 || kappa_plus == 0.0)
    throw std::domain_error("constrained_bp: kappa must be nonzero");
  if (kappa_plus == kappa_minus || kappa_plus == -kappa_minus)
    throw std::domain_error("constrained_bp: kappa_+ = +-kappa_- not allowed");
  BoundaryParams bp;
  bp.kappa_minus = kappa_minus;
  bp.kappa_plus = kappa_plus;
  bp.tau_minus = tau_minus;
  bp.zeta_minus = zeta_minus;
  bp.zeta_plus = zeta_plus;
  bp.eps_minus = eps_minus;
  bp.eps_plus = eps_plus;
  cplx rm = bp.root_minus(), rp = bp.root_plus();
  cplx arg = std::exp(tau_minus) * (double(eps_minus) * rm + 1.0) *
             (double(eps_plus) * rp - 1.0) / (4.0 * kappa_plus * kappa_minus);
  bp.tau_plus = std::log(arg);
  bp.validate();
  return bp;
}

enum class GaugeDirection { to_bar, from_bar };

// Gamma_W O Gamma_W^{-1} (to_bar) or the inverse conjugation.
inline Mat conjugate_operator(const Mat& op, const GaugeData& g, int n_sites,
                              GaugeDirection dir = GaugeDirection::to_bar) {
  Mat gw = g.gamma_w(n_sites);
  Mat gwi = g.gamma_w_inv(n_sites);
  if (op.rows() != gw.rows())
    throw std::domain_error("conjugate_operator: dimension mismatch");
  return dir == GaugeDirection::to_bar ? Mat(gw * op * gwi) : Mat(gwi * op * gw);
}

// Transfer matrix in the triangular picture, built directly from Kbar.
inline Mat transfer_bar(cplx lambda, const ChainSpec& chain, const GaugeData& g) {
  return transfer_with_k(lambda, chain, g.k_bar_minus(lambda, chain.eta),
                         g.k_bar_plus(lambda, chain.eta));
}

// Diagonal (hat) picture: K-matrices of the parallel model with couplings
// zbar_+- ; equal to the original construction at kappa = 0.
inline Mat transfer_hat(cplx lambda, const ChainSpec& chain, const BoundaryParams& bp) {
  BoundaryParams d = diagonal_counterpart(bp);
  return transfer_matrix(lambda, chain, d);
}

}  // namespace sovchain
