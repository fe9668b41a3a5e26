#pragma once

// Test-side eigenvalue oracle, independent of the Jacobi solver under test:
// characteristic polynomial by the Faddeev-LeVerrier recurrence, then real
// roots by recursive derivative interleaving plus bisection. Only valid for
// matrices with all-real (symmetric case) and, for exact counts, simple
// eigenvalues; the tests that use it draw random matrices where ties have
// probability zero and assert the recovered count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "entanglekit/density.hpp"

namespace ektest {

/// Monic polynomial x^n + c[0] x^(n-1) + ... + c[n-1].
struct Poly {
  std::vector<double> c;
  std::size_t degree() const { return c.size(); }
};

inline double eval(const Poly& p, double x) {
  double acc = 1.0;
  for (double coeff : p.c) acc = acc * x + coeff;
  return acc;
}

inline Poly derivative_monic(const Poly& p) {
  std::size_t n = p.degree();
  Poly d;
  d.c.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d.c[i] = p.c[i] * static_cast<double>(n - 1 - i) / static_cast<double>(n);
  }
  return d;
}

inline Poly char_poly(const entanglekit::DensityMatrix& a) {
  std::size_t n = a.dim();
  std::vector<double> m(n * n, 0.0);  // running Faddeev-LeVerrier matrix
  Poly p;
  p.c.resize(n);
  double ck = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * (m + ck * I)
    std::vector<double> shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted[i * n + i] += ck;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) acc += a.at(i, l) * shifted[l * n + j];
        m[i * n + j] = acc;
      }
    }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += m[i * n + i];
    ck = -tr / static_cast<double>(k);
    p.c[k - 1] = ck;
  }
  return p;
}

/// All real roots in ascending order, assuming every root is real.
inline std::vector<double> all_real_roots(const Poly& p) {
  std::size_t n = p.degree();
  if (n == 0) return {};
  if (n == 1) return {-p.c[0]};

  std::vector<double> inner = all_real_roots(derivative_monic(p));
  double bound = 1.0;
  for (double coeff : p.c) bound = std::max(bound, std::abs(coeff));
  bound += 1.0;  // Cauchy bound for a monic polynomial

  std::vector<double> pts;
  pts.push_back(-bound);
  pts.insert(pts.end(), inner.begin(), inner.end());
  pts.push_back(bound);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    double flo = eval(p, lo), fhi = eval(p, hi);
    if (flo == 0.0) {
      roots.push_back(lo);
      continue;
    }
    if (flo * fhi > 0.0) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * bound; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = eval(p, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((flo < 0.0) == (fm < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Eigenvalues of a symmetric matrix by the polynomial oracle, descending.
inline std::vector<double> eig_by_charpoly(const entanglekit::DensityMatrix& a) {
  std::vector<double> roots = all_real_roots(char_poly(a));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace ektest
