#include "entanglekit/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>

#include "entanglekit/errors.hpp"
#include "num_format.hpp"

namespace entanglekit {

SchmidtVector SchmidtVector::from_raw(std::vector<double> raw, bool normalize, double norm_tol,
                                      double zero_tol) {
  if (raw.empty()) {
    throw EmptyInput("Schmidt vector requires at least one coefficient");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < -norm_tol || std::isnan(raw[i])) {
      throw NegativeCoefficient("coefficient " + std::to_string(i + 1) + " is " +
                                detail::num(raw[i]) + ", expected >= 0");
    }
    if (raw[i] < 0.0) raw[i] = 0.0;
  }
  double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (normalize) {
    if (sum <= 0.0) {
      throw NotNormalized("cannot normalize an all-zero vector");
    }
    for (double& x : raw) x /= sum;
  } else if (std::abs(sum - 1.0) > norm_tol) {
    throw NotNormalized("coefficients sum to " + detail::num(sum) + ", expected 1 within " +
                        detail::num(norm_tol));
  }
  std::sort(raw.begin(), raw.end(), std::greater<>());
  std::size_t rank = raw.size();
  while (rank > 0 && raw[rank - 1] <= zero_tol) --rank;
  return SchmidtVector(std::move(raw), rank, zero_tol);
}

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

double entropy_of_entanglement(const SchmidtVector& v) {
  double h = 0.0;
  for (double mu : v.coeffs()) h -= xlog2x(mu);
  return h;
}

double purity(const SchmidtVector& v) {
  double p = 0.0;
  for (double mu : v.coeffs()) p += mu * mu;
  return p;
}

double concurrence_squared(const SchmidtVector& v) { return 2.0 * (1.0 - purity(v)); }

double concurrence(const SchmidtVector& v) {
  return std::sqrt(std::max(0.0, concurrence_squared(v)));
}

double negativity(const SchmidtVector& v) {
  double s = 0.0;
  for (double mu : v.coeffs()) s += std::sqrt(std::max(0.0, mu));
  return (s * s - 1.0) / 2.0;
}

MeasureSet measures(const SchmidtVector& v) {
  MeasureSet m;
  m.entropy = entropy_of_entanglement(v);
  m.purity = purity(v);
  m.concurrence_squared = 2.0 * (1.0 - m.purity);
  m.concurrence = std::sqrt(std::max(0.0, m.concurrence_squared));
  m.negativity = negativity(v);
  m.effective_rank = v.effective_rank();
  return m;
}

}  // namespace entanglekit
