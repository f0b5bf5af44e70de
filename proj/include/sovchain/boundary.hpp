#pragma once

// Boundary field parametrization of the open chain. Each end carries a
// coupling zeta, an off-diagonal strength kappa and a phase tau; eps_{-},
// eps_{+} select the branch of sqrt(1+4 kappa^2) entering the reduced
// couplings zbar_{+-}.

#include <cmath>
#include <stdexcept>

#include "sovchain/types.hpp"

namespace sovchain {

struct BoundaryParams {
  cplx zeta_minus{1.0};
  cplx zeta_plus{1.0};
  cplx kappa_minus{0.0};
  cplx kappa_plus{0.0};
  cplx tau_minus{0.0};
  cplx tau_plus{0.0};
  int eps_minus = +1;
  int eps_plus = +1;

  void validate() const {
    if (zeta_minus == 0.0 || zeta_plus == 0.0)
      throw std::domain_error("BoundaryParams: zeta must be nonzero");
    if (eps_minus * eps_minus != 1 || eps_plus * eps_plus != 1)
      throw std::domain_error("BoundaryParams: eps must be +-1");
    if (1.0 + 4.0 * kappa_minus * kappa_minus == 0.0 ||
        1.0 + 4.0 * kappa_plus * kappa_plus == 0.0)
      throw std::domain_error("BoundaryParams: 1+4 kappa^2 vanishes");
  }

  // principal branch of sqrt(1+4 kappa^2)
  cplx root_minus() const { return std::sqrt(1.0 + 4.0 * kappa_minus * kappa_minus); }
  cplx root_plus() const { return std::sqrt(1.0 + 4.0 * kappa_plus * kappa_plus); }

  cplx zbar_minus() const { return double(eps_minus) * zeta_minus / root_minus(); }
  cplx zbar_plus() const { return double(eps_plus) * zeta_plus / root_plus(); }

  // leading lambda^{2(N+1)} coefficient of the transfer matrix
  cplx t_leading() const {
    return 2.0 / (zeta_plus * zeta_minus) *
           (1.0 + 4.0 * kappa_plus * kappa_minus * std::cosh(tau_plus - tau_minus));
  }

  bool is_diagonal() const { return kappa_minus == 0.0 && kappa_plus == 0.0; }
};

// omega_eps(kappa_pm, tau_pm); its vanishing marks the constrained regime in
// which the spectrum is governed by a homogeneous TQ relation.
inline cplx omega_epsilon(const BoundaryParams& bp, int eps) {
  return 1.0 + 4.0 * bp.kappa_plus * bp.kappa_minus * std::cosh(bp.tau_plus - bp.tau_minus) -
         double(eps) * std::sqrt((1.0 + 4.0 * bp.kappa_plus * bp.kappa_plus) *
                                 (1.0 + 4.0 * bp.kappa_minus * bp.kappa_minus));
}

inline cplx omega_epsilon(const BoundaryParams& bp) {
  return omega_epsilon(bp, bp.eps_minus * bp.eps_plus);
}

// Parallel (diagonal) parameter set sharing the reduced couplings of bp.
inline BoundaryParams diagonal_counterpart(const BoundaryParams& bp) {
  BoundaryParams d;
  d.zeta_minus = bp.zbar_minus();
  d.zeta_plus = bp.zbar_plus();
  return d;
}

}  // namespace sovchain
