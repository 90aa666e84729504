#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace twor {

using cxd = std::complex<double>;
using VecC = Eigen::VectorXcd;
using VecD = Eigen::VectorXd;
using VecI = Eigen::VectorXi;
using MatC = Eigen::MatrixXcd;
using MatD = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Sample domain of a baseband block.
enum class Domain { Time, Frequency };

/// Length-N vector of complex baseband samples tagged with its domain.
struct ComplexBlock {
  VecC samples;
  Domain domain = Domain::Time;

  ComplexBlock() = default;
  ComplexBlock(VecC s, Domain d) : samples(std::move(s)), domain(d) {}
  Eigen::Index size() const { return samples.size(); }
};

inline bool all_finite(const VecC& v) {
  return v.array().isFinite().all();
}

/// Dense L x L Hermitian solve failed the positive-definiteness check.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A lifted QC parity-check graph violated a structural requirement
/// (4-cycle present, rank deficient, unliftable proto entry).
class CodeConstructionError : public std::runtime_error {
 public:
  explicit CodeConstructionError(const std::string& what)
      : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline void require_cfo_range(double epsilon) {
  if (!(epsilon > -0.5 && epsilon < 0.5))
    throw std::domain_error("normalized CFO must lie in (-1/2, 1/2), got " +
                            std::to_string(epsilon));
}

}  // namespace twor
