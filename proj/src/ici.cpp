#include "twor/ici.hpp"

#include "twor/fft.hpp"
#include "twor/opcount.hpp"
#include "twor/ramp.hpp"

namespace twor {

InterferenceMatrix interference_matrix(double eps, int n) {
  require_cfo_range(eps);
  InterferenceMatrix m;
  m.n = n;
  m.epsilon = eps;
  m.lambda = dirichlet_lambda(eps, n);
  // Pi(p,q) depends on (p-q) only: entry (d) = dirichlet_lambda(eps - d).
  m.col0.resize(n);
  for (int d = 0; d < n; ++d) m.col0[d] = dirichlet_lambda(eps - d, n);
  return m;
}

VecC apply_interference(double eps, const VecC& v) {
  return apply_FH(apply_ramp(eps, apply_F(v)));
}

VecC reconstruct_ici(double eps1, const VecC& s1, double eps2, const VecC& s2) {
  require(s1.size() == s2.size(), "terminal signals must share N");
  const int n = static_cast<int>(s1.size());
  VecC ici = VecC::Zero(n);
  for (const auto& [eps, s] : {std::pair<double, const VecC*>{eps1, &s1},
                               std::pair<double, const VecC*>{eps2, &s2}}) {
    if (eps == 0.0) continue;  // Pi = Lambda = I, zero contribution
    const cxd lambda = dirichlet_lambda(eps, n);
    ici += apply_interference(eps, *s) - lambda * (*s);
    ops::record(ops::Stage::Vector, 2 * static_cast<std::uint64_t>(n), n);
  }
  return ici;
}

VecC reconstruct_ici(const ParamEstimate& est, const SubcarrierAllocation& a) {
  std::array<VecC, 2> s;
  for (int i = 0; i < 2; ++i) {
    s[i] = apply_D(est.h[i], a.n);
    s[i].array() *= allocate(a, est.x[i]).array();
    ops::record(ops::Stage::Diag, 0, a.n);
  }
  return reconstruct_ici(est.eps[0], s[0], est.eps[1], s[1]);
}

VecC cancel(const VecC& y_freq, const VecC& ici, const SubcarrierAllocation& a) {
  require(y_freq.size() == ici.size(), "cancel length mismatch");
  ops::record(ops::Stage::Vector, static_cast<std::uint64_t>(a.k()), 0);
  return deallocate(a, y_freq) - deallocate(a, ici);
}

}  // namespace twor
