#pragma once

#include "twor/estimate.hpp"
#include "twor/ofdm.hpp"
#include "twor/types.hpp"

namespace twor {

/// One terminal's interference matrix Pi = F^H E(eps) F. Pi is unitary and
/// circulant, so it is held as its first column plus the (constant) diagonal
/// value rather than a dense matrix.
struct InterferenceMatrix {
  int n = 0;
  double epsilon = 0.0;
  VecC col0;    // Pi(:,0); Pi(p,q) = col0((p-q) mod n)
  cxd lambda;   // every diagonal entry; 1 exactly when eps == 0
};

InterferenceMatrix interference_matrix(double eps, int n);

inline cxd pi_entry(const InterferenceMatrix& m, int p, int q) {
  return m.col0[((p - q) % m.n + m.n) % m.n];
}

/// Pi v computed as F^H (E(eps) (F v)) — three transform passes, never a
/// dense product.
VecC apply_interference(double eps, const VecC& v);

/// Reconstructed ICI (Pi_1 - Lambda_1) s1 + (Pi_2 - Lambda_2) s2 from the
/// frequency-domain terminal signals s_i = X_i D h_i. A terminal with
/// eps == 0 contributes exact zeros (Pi = Lambda = I).
VecC reconstruct_ici(double eps1, const VecC& s1, double eps2, const VecC& s2);

/// Convenience overload building s_i = X_i D h_i from a joint estimate.
VecC reconstruct_ici(const ParamEstimate& est, const SubcarrierAllocation& a);

/// Interference cancellation: the K allocated entries of (y_freq - ici).
VecC cancel(const VecC& y_freq, const VecC& ici, const SubcarrierAllocation& a);

}  // namespace twor
