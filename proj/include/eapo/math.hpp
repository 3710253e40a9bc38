#pragma once

// Small numeric kernels over Eigen expressions. Free functions, templated on
// the derived expression type so callers can pass blocks/maps without copies.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace eapo::math {

template <typename Derived>
typename Derived::Scalar logsumexp(const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  if (z.size() == 0) throw std::invalid_argument("logsumexp: empty input");
  const Scalar m = z.maxCoeff();
  if (!std::isfinite(m)) return m;
  return m + std::log((z.derived().array() - m).exp().sum());
}

template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> softmax(
    const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  const Scalar lse = logsumexp(z);
  return (z.derived().array() - lse).exp().matrix();
}

// Population (uncorrected) mean/std pair.
template <typename Derived>
std::pair<typename Derived::Scalar, typename Derived::Scalar> mean_std(
    const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  if (v.size() == 0) throw std::invalid_argument("mean_std: empty input");
  const Scalar mean = v.mean();
  const Scalar var = (v.derived().array() - mean).square().sum() /
                     static_cast<Scalar>(v.size());
  return {mean, std::sqrt(var)};
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace eapo::math
