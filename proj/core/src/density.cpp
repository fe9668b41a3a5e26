#include "entanglekit/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "entanglekit/errors.hpp"
#include "num_format.hpp"
#include "entanglekit/rng.hpp"

namespace entanglekit {

double PureStateVector::norm_squared() const {
  double s = 0.0;
  for (double a : amplitudes) s += a * a;
  return s;
}

double DensityMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool DensityMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (std::abs(at(i, j) - at(j, i)) > tol) return false;
  return true;
}

double DensityMatrix::trace_of_square() const {
  double s = 0.0;
  for (double e : entries_) s += e * e;
  return s;
}

PureStateVector embed_state(const SchmidtVector& v, std::size_t dim_a, std::size_t dim_b) {
  if (v.effective_rank() > std::min(dim_a, dim_b)) {
    throw RankExceedsDims("effective rank " + std::to_string(v.effective_rank()) +
                          " does not fit in " + std::to_string(dim_a) + "x" +
                          std::to_string(dim_b));
  }
  PureStateVector s;
  s.dim_a = dim_a;
  s.dim_b = dim_b;
  s.amplitudes.assign(dim_a * dim_b, 0.0);
  for (std::size_t i = 0; i < v.effective_rank(); ++i) {
    s.amp(i, i) = std::sqrt(v[i]);
  }
  return s;
}

namespace {

// Rotates rows (on A) or columns (on B) of the amplitude grid within a random
// two-dimensional plane. Composing 20 of these per side gives a generic
// orthogonal local basis change while staying exactly norm-preserving.
void apply_givens_rows(PureStateVector& s, std::size_t p, std::size_t q, double theta) {
  double c = std::cos(theta), sn = std::sin(theta);
  for (std::size_t j = 0; j < s.dim_b; ++j) {
    double xp = s.amp(p, j), xq = s.amp(q, j);
    s.amp(p, j) = c * xp - sn * xq;
    s.amp(q, j) = sn * xp + c * xq;
  }
}

void apply_givens_cols(PureStateVector& s, std::size_t p, std::size_t q, double theta) {
  double c = std::cos(theta), sn = std::sin(theta);
  for (std::size_t i = 0; i < s.dim_a; ++i) {
    double xp = s.amp(i, p), xq = s.amp(i, q);
    s.amp(i, p) = c * xp - sn * xq;
    s.amp(i, q) = sn * xp + c * xq;
  }
}

}  // namespace

PureStateVector embed_state(const SchmidtVector& v, std::size_t dim_a, std::size_t dim_b,
                            std::uint64_t rotation_seed) {
  PureStateVector s = embed_state(v, dim_a, dim_b);
  std::mt19937_64 rng = substream(rotation_seed, 0);
  constexpr int kRotations = 20;
  auto pick_pair = [&](std::size_t dim) {
    std::size_t p = static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(dim));
    std::size_t q = static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(dim - 1));
    p = std::min(p, dim - 1);
    q = std::min(q, dim - 2);
    if (q >= p) ++q;
    return std::pair<std::size_t, std::size_t>{p, q};
  };
  if (dim_a > 1) {
    for (int r = 0; r < kRotations; ++r) {
      auto [p, q] = pick_pair(dim_a);
      apply_givens_rows(s, p, q, 2.0 * 3.14159265358979323846 * unit_uniform(rng));
    }
  }
  if (dim_b > 1) {
    for (int r = 0; r < kRotations; ++r) {
      auto [p, q] = pick_pair(dim_b);
      apply_givens_cols(s, p, q, 2.0 * 3.14159265358979323846 * unit_uniform(rng));
    }
  }
  return s;
}

DensityMatrix reduce_a(const PureStateVector& s) {
  DensityMatrix rho(s.dim_a);
  for (std::size_t i = 0; i < s.dim_a; ++i) {
    for (std::size_t k = i; k < s.dim_a; ++k) {
      double acc = 0.0;
      for (std::size_t j = 0; j < s.dim_b; ++j) acc += s.amp(i, j) * s.amp(k, j);
      rho.at(i, k) = acc;
      rho.at(k, i) = acc;
    }
  }
  return rho;
}

DensityMatrix full_density(const PureStateVector& s) {
  std::size_t n = s.amplitudes.size();
  DensityMatrix rho(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) rho.at(u, w) = s.amplitudes[u] * s.amplitudes[w];
  return rho;
}

DensityMatrix partial_transpose_a(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b) {
  DensityMatrix out(dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t ip = 0; ip < dim_a; ++ip)
        for (std::size_t jp = 0; jp < dim_b; ++jp)
          out.at(i * dim_b + j, ip * dim_b + jp) = rho.at(ip * dim_b + j, i * dim_b + jp);
  return out;
}

std::vector<double> eig_sym(DensityMatrix m, double tol) {
  const std::size_t n = m.dim();
  if (!m.is_symmetric(tol)) {
    throw NotSymmetric("eig_sym requires a symmetric matrix");
  }
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
  };
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > tol) {
    if (++sweep > kMaxSweeps) {
      throw NoConvergence("Jacobi eigensolver did not converge in 100 sweeps");
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (apq == 0.0) continue;
        double app = m.at(p, p), aqq = m.at(q, q);
        double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
        double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < n; ++k) {
          double akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = m.at(p, k), aqk = m.at(q, k);
          m.at(p, k) = c * apk - s * aqk;
          m.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m.at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

double negativity_via_pt(const PureStateVector& s) {
  DensityMatrix pt = partial_transpose_a(full_density(s), s.dim_a, s.dim_b);
  std::vector<double> eig = eig_sym(std::move(pt));
  double neg_sum = 0.0, abs_sum = 0.0;
  for (double lambda : eig) {
    if (lambda < 0.0) neg_sum += lambda;
    abs_sum += std::abs(lambda);
  }
  double via_negatives = -neg_sum;
  double via_trace_norm = (abs_sum - 1.0) / 2.0;
  if (std::abs(via_negatives - via_trace_norm) > 1e-10) {
    throw PropertyViolation("negativity routes disagree: |negatives| = " +
                            detail::num(via_negatives) + ", (trace norm - 1)/2 = " +
                            detail::num(via_trace_norm));
  }
  return via_negatives;
}

std::vector<double> analytic_pt_spectrum(const SchmidtVector& v, std::size_t dim_a,
                                         std::size_t dim_b) {
  if (v.effective_rank() > std::min(dim_a, dim_b)) {
    throw RankExceedsDims("effective rank " + std::to_string(v.effective_rank()) +
                          " does not fit in " + std::to_string(dim_a) + "x" +
                          std::to_string(dim_b));
  }
  std::vector<double> spectrum;
  spectrum.reserve(dim_a * dim_b);
  std::size_t r = v.effective_rank();
  for (std::size_t i = 0; i < r; ++i) spectrum.push_back(v[i]);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      double s = std::sqrt(v[i] * v[j]);
      spectrum.push_back(s);
      spectrum.push_back(-s);
    }
  }
  spectrum.resize(dim_a * dim_b, 0.0);
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

double entropy_via_eigen(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lambda : eig_sym(rho)) {
    if (lambda > 1e-12) h -= lambda * std::log2(lambda);
  }
  return h;
}

double concurrence_via_reduced(const DensityMatrix& rho_a) {
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - rho_a.trace_of_square())));
}

}  // namespace entanglekit
