#include "entanglekit/comparability.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "entanglekit/errors.hpp"

namespace entanglekit {

std::string to_string(Comparability c) {
  switch (c) {
    case Comparability::Equivalent:
      return "Equivalent";
    case Comparability::AConvertsToB:
      return "AConvertsToB";
    case Comparability::BConvertsToA:
      return "BConvertsToA";
    case Comparability::Incomparable:
      return "Incomparable";
  }
  return "Unknown";
}

std::vector<double> pad(const SchmidtVector& v, std::size_t m) {
  if (m < v.size()) {
    throw TargetShorterThanInput("cannot pad length " + std::to_string(v.size()) +
                                 " vector to shorter length " + std::to_string(m));
  }
  std::vector<double> out(v.coeffs().begin(), v.coeffs().end());
  out.resize(m, 0.0);
  return out;
}

namespace {

std::vector<double> prefix_sums(const std::vector<double>& v) {
  std::vector<double> p(v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    p[i] = acc;
  }
  return p;
}

}  // namespace

bool is_majorized_by(const SchmidtVector& a, const SchmidtVector& b, double tol) {
  std::size_t m = std::max(a.size(), b.size());
  std::vector<double> pa = prefix_sums(pad(a, m));
  std::vector<double> pb = prefix_sums(pad(b, m));
  for (std::size_t k = 0; k < m; ++k) {
    if (pa[k] > pb[k] + tol) return false;
  }
  return true;
}

ComparabilityResult classify(const SchmidtVector& a, const SchmidtVector& b, double tol) {
  std::size_t m = std::max(a.size(), b.size());
  std::vector<double> va = pad(a, m);
  std::vector<double> vb = pad(b, m);

  bool equal = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(va[i] - vb[i]) > tol) {
      equal = false;
      break;
    }
  }
  if (equal) return {Comparability::Equivalent, 0, 0};

  std::vector<double> pa = prefix_sums(va);
  std::vector<double> pb = prefix_sums(vb);
  std::size_t first_a_over = 0, first_b_over = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (first_a_over == 0 && pa[k] > pb[k] + tol) first_a_over = k + 1;
    if (first_b_over == 0 && pb[k] > pa[k] + tol) first_b_over = k + 1;
  }
  if (first_a_over != 0 && first_b_over != 0) {
    return {Comparability::Incomparable, first_a_over, first_b_over};
  }
  if (first_a_over != 0) return {Comparability::BConvertsToA, 0, 0};
  if (first_b_over != 0) return {Comparability::AConvertsToB, 0, 0};
  // Coefficients differ somewhere yet every prefix sum ties within tol:
  // majorization holds in both directions, so either conversion works.
  return {Comparability::AConvertsToB, 0, 0};
}

EpsilonProfile epsilon_profile(const SchmidtVector& a, const SchmidtVector& b, double tol) {
  if (!is_majorized_by(a, b, tol)) {
    throw NotComparableInDirection("epsilon profile requires a majorized by b");
  }
  std::size_t m = std::max(a.size(), b.size());
  std::vector<double> pa = prefix_sums(pad(a, m));
  std::vector<double> pb = prefix_sums(pad(b, m));
  EpsilonProfile prof;
  prof.eps.assign(m + 1, 0.0);
  for (std::size_t k = 1; k < m; ++k) prof.eps[k] = pb[k - 1] - pa[k - 1];
  // eps[0] and eps[m] stay exactly zero: both sequences start empty and end
  // at total weight 1.
  return prof;
}

double concurrence_gap(const SchmidtVector& a, const SchmidtVector& b, double tol) {
  EpsilonProfile prof = epsilon_profile(a, b, tol);
  std::size_t m = prof.eps.size() - 1;
  std::vector<double> alpha = pad(a, m);

  double linear = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    double next = (i < m) ? alpha[i] : 0.0;
    linear += (alpha[i - 1] - next) * prof.eps[i];
  }
  double quadratic = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    double d = prof.eps[i] - prof.eps[i - 1];
    quadratic += d * d;
  }
  return 2.0 * (2.0 * linear + quadratic);
}

}  // namespace entanglekit
