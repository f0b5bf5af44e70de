// scratch probe used during development; not installed
#include <cstdio>

#include "sovchain/algebra.hpp"

using namespace sovchain;

int main() {
  Rng rng(42);
  cplx eta(0.21, 0.93);

  // R-matrix basics
  {
    Mat r0 = r_matrix(0.0, eta);
    Mat p = Mat::Zero(4, 4);
    p(0, 0) = p(3, 3) = p(1, 2) = p(2, 1) = 1.0;
    std::printf("R(0)=etaP residual      %.3e\n", rel_residual(r0, eta * p));
    std::printf("YBE residual            %.3e\n",
                ybe_residual(cplx(0.37, 0.11), cplx(-0.52, 0.23), cplx(0, 1)));
  }

  BoundaryParams bp;
  bp.zeta_minus = cplx(0.8, 0.3);
  bp.zeta_plus = cplx(-0.5, 0.9);
  bp.kappa_minus = cplx(0.4, -0.1);
  bp.kappa_plus = cplx(0.25, 0.15);
  bp.tau_minus = cplx(0.3, 0.2);
  bp.tau_plus = cplx(-0.1, 0.4);

  ChainSpec chain = make_chain(3, eta);

  std::printf("RTT residual            %.3e\n",
              rtt_residual(rng.box(), rng.box(), chain));

  // bulk quantum determinant as operator at N=2
  {
    ChainSpec c2 = make_chain(2, eta);
    cplx l = rng.box();
    Monodromy mp = bulk_monodromy(l + eta / 2.0, c2);
    Monodromy mm = bulk_monodromy(l - eta / 2.0, c2);
    Mat qd = mp.A * mm.D - mp.B * mm.C;
    std::printf("detqM operator residual %.3e\n",
                rel_residual(qd, c2.detq_bulk(l) * mat_id(c2.dim())));
  }

  std::printf("reflection minus        %.3e\n",
              reflection_residual_minus(rng.box(), rng.box(), make_chain(2, eta), bp));
  std::printf("reflection plus         %.3e\n",
              reflection_residual_plus(rng.box(), rng.box(), make_chain(2, eta), bp));
  std::printf("inversion U-            %.3e\n",
              inversion_residual_minus(rng.box(), make_chain(2, eta), bp));

  // transfer family: commutativity, parity, both traces, central value
  {
    cplx l = rng.box(), m = rng.box();
    Mat tl = transfer_matrix(l, chain, bp);
    Mat tm = transfer_matrix(m, chain, bp);
    std::printf("[T(l),T(m)] residual    %.3e\n", rel_residual(tl * tm, tm * tl));
    std::printf("T parity residual       %.3e\n",
                rel_residual(tl, transfer_matrix(-l, chain, bp)));
    std::printf("two-trace residual      %.3e\n",
                rel_residual(tl, transfer_matrix_via_plus(l, chain, bp)));
    Mat tc = transfer_matrix(eta / 2.0, chain, bp);
    std::printf("central value residual  %.3e\n",
                rel_residual(tc, transfer_central_value(chain) * mat_id(chain.dim())));
    Mat tc2 = transfer_matrix(-eta / 2.0, chain, bp);
    std::printf("central value (-)       %.3e\n",
                rel_residual(tc2, transfer_central_value(chain) * mat_id(chain.dim())));
    // leading coefficient via large |lambda|
    cplx big(837.0, 291.0);
    Mat tb = transfer_matrix(big, chain, bp);
    cplx lead = tb.trace() / double(chain.dim()) / std::pow(big, 2.0 * (chain.n_sites + 1));
    std::printf("t_{N+1} relative error  %.3e\n",
                std::abs(lead - bp.t_leading()) / std::abs(bp.t_leading()));
  }

  // quantum determinant identity + dressed scalar form
  {
    auto rep = quantum_determinant_identity_check(make_chain(2, eta), bp);
    std::printf("qdet operator residual  %.3e\n", rep.max_operator_residual);
    std::printf("qdet scalar residual    %.3e\n", rep.max_scalar_residual);
  }

  // interpolation formula
  {
    std::vector<int> h = {1, 0, 1};
    cplx l = rng.box();
    std::printf("interpolation residual  %.3e\n",
                rel_residual(transfer_matrix(l, chain, bp),
                             transfer_via_interpolation(l, chain, bp, h)));
  }

  // diagonal case: t = A(lambda) + A(-lambda) must be an eigenvalue of T
  {
    BoundaryParams diag;
    diag.zeta_minus = cplx(0.8, 0.3);
    diag.zeta_plus = cplx(-0.5, 0.9);
    ChainSpec c2 = make_chain(2, eta);
    ScalarFunctions sf(c2, diag);
    cplx l = rng.box();
    cplx t_ref = sf.A(l) + sf.A(-l);
    Eigen::ComplexEigenSolver<Mat> es(transfer_matrix(l, c2, diag));
    double best = 1e300;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      best = std::min(best, std::abs(es.eigenvalues()(i) - t_ref));
    std::printf("A+Abar in spectrum      %.3e (|t|=%.3e)\n", best, std::abs(t_ref));
  }

  // Hamiltonian: explicit vs transfer derivative (homogeneous chain)
  {
    ChainSpec hom(2, eta, {0.0, 0.0}, 0.0);
    Mat he = hamiltonian_explicit(hom, bp);
    Mat ht = hamiltonian_from_transfer(hom, bp);
    Mat dd = he - ht;
    cplx c = dd.trace() / double(hom.dim());
    std::printf("H explicit vs transfer  %.3e\n",
                rel_residual(he, ht + c * mat_id(hom.dim())));
  }
  return 0;
}
// ---- gauge probe (appended) ----
#include "sovchain/gauge.hpp"
namespace {
struct GaugeProbe {
  GaugeProbe() {
    using namespace sovchain;
    std::printf("---- gauge ----\n");
    BoundaryParams bp;
    bp.zeta_minus = cplx(0.8, 0.3);
    bp.zeta_plus = cplx(-0.5, 0.9);
    bp.kappa_minus = cplx(0.4, -0.1);
    bp.kappa_plus = cplx(0.25, 0.15);
    bp.tau_minus = cplx(0.3, 0.2);
    bp.tau_plus = cplx(-0.1, 0.4);
    cplx eta(0.21, 0.93);
    GaugeData g = gauge_matrix(bp);
    // triangular form of W K_-(lambda) W^-1 vs k_bar_minus, both shifts
    cplx l(0.37, -0.29);
    Mat kbm = g.w * k_minus(l, bp, eta) * g.w_inv;
    Mat kbp = g.w * k_plus(l, bp, eta) * g.w_inv;
    std::printf("Kbar- residual (shift -eta/2) %.3e\n", rel_residual(kbm, g.k_bar_minus(l, eta)));
    std::printf("Kbar+ residual (shift +eta/2) %.3e\n", rel_residual(kbp, g.k_bar_plus(l, eta)));
    Mat alt_m = mat_id(2) + (l + eta/2.0)/bp.zbar_minus()*(sigma_z()+g.cbar_minus*sigma_minus());
    std::printf("Kbar- residual (shift +eta/2) %.3e\n", rel_residual(kbm, alt_m));
    std::printf("lower-left of Kbar-          %.3e\n", std::abs(kbm(1,0)));
    std::printf("cbar*bbar identity           %.3e\n",
                std::abs(g.cbar_minus*g.bbar_plus - cbar_bbar_product(bp)));
    // constrained bp
    BoundaryParams cb = constrained_bp(cplx(0.3,0.0), cplx(0.7,0.0), cplx(0.0,0.0),
                                       cplx(0,2), cplx(0,3));
    GaugeData gc = gauge_matrix(cb);
    std::printf("constrained cbar_-           %.3e\n", std::abs(gc.cbar_minus));
    std::printf("constrained |bbar_+|         %.3e\n", std::abs(gc.bbar_plus));
    std::printf("constrained |omega|          %.3e\n", std::abs(omega_epsilon(cb)));
    // spectra of T and Tbar agree; Tbar built both ways
    ChainSpec c2 = make_chain(2, eta);
    Mat t = transfer_matrix(l, c2, bp);
    Mat tbar_direct = transfer_bar(l, c2, g);
    Mat tbar_conj = conjugate_operator(t, g, 2, GaugeDirection::to_bar);
    std::printf("Tbar conj vs direct          %.3e\n", rel_residual(tbar_direct, tbar_conj));
    // sigma_z conjugation from the section-6 W (eps=+1): W^-1 sigma^z W
    Mat sz_bar = g.w_inv * sigma_z() * g.w;
    Mat expect = (sigma_z() + 2.0*bp.kappa_minus*(std::exp(bp.tau_minus)*sigma_plus()
                + std::exp(-bp.tau_minus)*sigma_minus())) / bp.root_minus();
    std::printf("sigma_z bar (general bp)     %.3e\n", rel_residual(sz_bar, expect));
    // same but under the constraint (the section-6 statement assumes it)
    GaugeData g2 = gauge_matrix(cb);
    Mat sz_bar2 = g2.w_inv * sigma_z() * g2.w;
    Mat expect2 = (sigma_z() + 2.0*cb.kappa_minus*(std::exp(cb.tau_minus)*sigma_plus()
                 + std::exp(-cb.tau_minus)*sigma_minus())) / cb.root_minus();
    std::printf("sigma_z bar (constrained)    %.3e\n", rel_residual(sz_bar2, expect2));
  }
} gauge_probe_instance;
}
namespace {
struct GaugeProbe2 {
  GaugeProbe2() {
    using namespace sovchain;
    BoundaryParams bp;
    bp.zeta_minus = cplx(0.8, 0.3);
    bp.zeta_plus = cplx(-0.5, 0.9);
    bp.kappa_minus = cplx(0.4, -0.1);
    bp.kappa_plus = cplx(0.25, 0.15);
    bp.tau_minus = cplx(0.3, 0.2);
    bp.tau_plus = cplx(-0.1, 0.4);
    for (int em : {+1, -1}) for (int ep : {+1, -1}) {
      bp.eps_minus = em; bp.eps_plus = ep;
      GaugeData g = gauge_matrix(bp);
      int eps = em * ep;
      cplx derived = 2.0 * double(eps) * omega_epsilon(bp, eps) / (bp.root_plus() * bp.root_minus());
      std::printf("eps=(%+d,%+d)  cb*bb=%+.6f%+.6fi  derived=%+.6f%+.6fi  diff=%.2e\n",
                  em, ep, std::real(g.cbar_minus * g.bbar_plus), std::imag(g.cbar_minus * g.bbar_plus),
                  std::real(derived), std::imag(derived),
                  std::abs(g.cbar_minus * g.bbar_plus - derived));
    }
  }
} gauge_probe2_instance;
}
