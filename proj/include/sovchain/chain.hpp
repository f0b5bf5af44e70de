#pragma once

// Chain geometry: length N, crossing parameter eta and the inhomogeneities
// xi_1..xi_N, together with the scalar functions built from them.
//
// Shift convention: xi_n^{(h)} = xi_n + (1-2h) eta/2, h in {0,1}, so
// xi^{(0)} = xi + eta/2 and xi^{(1)} = xi - eta/2.

#include <stdexcept>
#include <string>
#include <vector>

#include "sovchain/boundary.hpp"
#include "sovchain/types.hpp"

namespace sovchain {

struct ChainSpec {
  int n_sites = 0;
  cplx eta{0.0, 1.0};
  std::vector<cplx> xi;

  ChainSpec() = default;
  ChainSpec(int n, cplx eta_, std::vector<cplx> xi_, double margin = 1e-6)
      : n_sites(n), eta(eta_), xi(std::move(xi_)) {
    if (n_sites <= 0) throw std::domain_error("ChainSpec: N must be positive");
    if (int(xi.size()) != n_sites)
      throw std::domain_error("ChainSpec: wrong number of inhomogeneities");
    check_genericity(margin);
  }

  // xi_j and xi_j +- xi_k must stay away from {0, -eta, eta}
  void check_genericity(double margin) const {
    auto bad = [&](cplx v) {
      return std::abs(v) < margin || std::abs(v - eta) < margin ||
             std::abs(v + eta) < margin;
    };
    for (int j = 0; j < n_sites; ++j) {
      if (bad(xi[j]))
        throw std::domain_error("ChainSpec: xi_" + std::to_string(j + 1) +
                                " violates genericity");
      for (int k = 0; k < n_sites; ++k) {
        if (j == k) continue;
        if (bad(xi[j] - xi[k]) || bad(xi[j] + xi[k]))
          throw std::domain_error("ChainSpec: xi_" + std::to_string(j + 1) +
                                  ", xi_" + std::to_string(k + 1) +
                                  " violate genericity");
      }
    }
  }

  Eigen::Index dim() const { return Eigen::Index(1) << n_sites; }

  cplx xi_shift(int n, int h) const {  // n is 1-based
    return xi[n - 1] + (1.0 - 2.0 * h) * eta / 2.0;
  }

  cplx a(cplx lambda) const {
    cplx p = 1.0;
    for (cplx x : xi) p *= lambda - x + eta / 2.0;
    return p;
  }
  cplx d(cplx lambda) const {
    cplx p = 1.0;
    for (cplx x : xi) p *= lambda - x - eta / 2.0;
    return p;
  }

  cplx detq_bulk(cplx lambda) const { return a(lambda + eta / 2.0) * d(lambda - eta / 2.0); }

  cplx k_n(int n) const { return (xi[n - 1] + eta) / (xi[n - 1] - eta); }

  // f_n: pair factor over the other inhomogeneities
  cplx f_n(int n) const {
    cplx p = -1.0;
    for (int a_ = 1; a_ <= n_sites; ++a_) {
      if (a_ == n) continue;
      cplx xn = xi[n - 1], xa = xi[a_ - 1];
      p *= (xn - xa + eta) * (xn + xa + eta) / ((xn - xa - eta) * (xn + xa - eta));
    }
    return p;
  }
};

// Default inhomogeneity pattern xi_n = n * delta, rejecting collisions.
inline ChainSpec make_chain(int n_sites, cplx eta, cplx delta = cplx(0.173, 0.059),
                            double margin = 1e-6) {
  std::vector<cplx> xi(n_sites);
  for (int n = 0; n < n_sites; ++n) xi[n] = double(n + 1) * delta;
  return ChainSpec(n_sites, eta, std::move(xi), margin);
}

// Scalar data combining chain and boundary parameters.
struct ScalarFunctions {
  const ChainSpec& chain;
  cplx zp, zm;  // reduced boundary couplings zbar_{+}, zbar_{-}

  ScalarFunctions(const ChainSpec& c, const BoundaryParams& bp)
      : chain(c), zp(bp.zbar_plus()), zm(bp.zbar_minus()) {}
  ScalarFunctions(const ChainSpec& c, cplx zbar_plus, cplx zbar_minus)
      : chain(c), zp(zbar_plus), zm(zbar_minus) {}

  // The dressed function carrying the quantum-determinant data; has a simple
  // pole at lambda = 0 which cancels in the combinations used downstream.
  cplx A(cplx lambda) const {
    const cplx eta = chain.eta;
    double sign = (chain.n_sites % 2 == 0) ? 1.0 : -1.0;
    return sign * (2.0 * lambda + eta) / (2.0 * lambda) *
           (lambda - eta / 2.0 + zp) * (lambda - eta / 2.0 + zm) / (zp * zm) *
           chain.a(lambda) * chain.d(-lambda);
  }

  // logarithmic derivative of A, for Newton solvers
  cplx A_logderiv(cplx lambda) const {
    const cplx eta = chain.eta;
    cplx s = 2.0 / (2.0 * lambda + eta) - 1.0 / lambda +
             1.0 / (lambda - eta / 2.0 + zp) + 1.0 / (lambda - eta / 2.0 + zm);
    for (cplx x : chain.xi) {
      s += 1.0 / (lambda - x + eta / 2.0);
      s -= 1.0 / (-lambda - x - eta / 2.0);
    }
    return s;
  }

  cplx g_n(int n) const {
    cplx x = chain.xi[n - 1];
    return (x + zp) * (x + zm) / ((x - zp) * (x - zm));
  }

  // (xi_n - eta)/(xi_n + eta) * A(xi_n^{(0)}) / A(-xi_n^{(1)}), which also
  // equals f_n * g_n; used as the left-eigenstate dressing factor.
  cplx left_factor(int n) const {
    cplx x = chain.xi[n - 1];
    return (x - chain.eta) / (x + chain.eta) * A(chain.xi_shift(n, 0)) /
           A(-chain.xi_shift(n, 1));
  }
};

}  // namespace sovchain
