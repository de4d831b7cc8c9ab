#pragma once

// Partial (multivariate) Bell polynomials, truncated power-series composition
// and Hermite-Kampe de Feriet polynomials.  The value type T is Rational for
// exact work or double / Real for floating evaluation.

#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "dobinski/exact.hpp"

namespace dobinski {

/// Multiplicities nu_1..nu_n of the part sizes 1..n of an integer partition.
struct MultiplicityVector {
  std::vector<unsigned> nu;

  unsigned total() const;  // sum_j j nu_j
  unsigned parts() const;  // sum_j nu_j

  friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// All partitions of n into exactly k parts, as multiplicity vectors of length
/// n, in ascending lexicographic order of (nu_1, nu_2, ...).
/// Throws std::invalid_argument unless 1 <= k <= n.
std::vector<MultiplicityVector> partitions_n_into_k(unsigned n, unsigned k);

/// n! / prod_j (nu_j! (j!)^nu_j)
Integer partition_weight(const MultiplicityVector& nu);

/// Partial Bell polynomial B_{n,k}(g_1, ..., g_{n-k+1}); g[0] holds g_1.
template <class T>
T multivariate_bell(unsigned n, unsigned k, std::span<const T> g) {
  if (k == 0 || k > n) throw std::invalid_argument("multivariate_bell: requires 1 <= k <= n");
  if (g.size() < n - k + 1) throw std::invalid_argument("multivariate_bell: need g_1..g_{n-k+1}");
  T total(0);
  for (const auto& mv : partitions_n_into_k(n, k)) {
    T term = from_integer<T>(partition_weight(mv));
    for (unsigned j = 1; j <= n; ++j) {
      if (mv.nu[j - 1] != 0) term *= ipow(g[j - 1], mv.nu[j - 1]);
    }
    total += term;
  }
  return total;
}

template <class T>
T multivariate_bell(unsigned n, unsigned k, const std::vector<T>& g) {
  return multivariate_bell<T>(n, k, std::span<const T>(g));
}

/// Ordinary coefficients c_0..c_K of sum_n c_n x^n. The Taylor coefficients
/// f_n = n! c_n are produced with taylor().
template <class T>
struct TruncatedSeries {
  static constexpr bool exact = std::is_same_v<T, Rational>;

  std::vector<T> coeffs;

  unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
  T taylor(unsigned n) const { return coeffs.at(n) * from_integer<T>(factorial(n)); }

  static TruncatedSeries from_taylor(std::span<const T> taylor_coeffs) {
    TruncatedSeries out;
    out.coeffs.reserve(taylor_coeffs.size());
    for (unsigned n = 0; n < taylor_coeffs.size(); ++n) {
      out.coeffs.push_back(taylor_coeffs[n] / from_integer<T>(factorial(n)));
    }
    return out;
  }
};

/// f(g(x)) through x^order via sum_k B_{n,k}(g_1, ...) f_k. Requires g(0) = 0
/// and both inputs known through order.
template <class T>
TruncatedSeries<T> compose_series(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g, unsigned order) {
  if (g.coeffs.empty() || g.coeffs[0] != T(0)) {
    throw std::invalid_argument("compose_series: inner series must have zero constant term");
  }
  if (f.coeffs.size() <= order || g.coeffs.size() <= order) {
    throw std::invalid_argument("compose_series: inputs shorter than requested order");
  }
  std::vector<T> g_taylor(order);
  for (unsigned j = 1; j <= order; ++j) g_taylor[j - 1] = g.taylor(j);

  TruncatedSeries<T> out;
  out.coeffs.assign(order + 1, T(0));
  out.coeffs[0] = f.coeffs[0];
  for (unsigned n = 1; n <= order; ++n) {
    T acc(0);
    for (unsigned k = 1; k <= n; ++k) {
      acc += multivariate_bell<T>(n, k, std::span<const T>(g_taylor).first(n - k + 1)) * f.taylor(k);
    }
    out.coeffs[n] = acc / from_integer<T>(factorial(n));
  }
  return out;
}

/// H_n^(M)(g1, gM) = n! sum_r g1^(n-Mr) gM^r / ((n-Mr)! r!), the Taylor
/// coefficients of exp(g1 x + gM x^M).
template <class T>
T hermite_kdf(unsigned n, unsigned M, const T& g1, const T& gM) {
  if (M < 2) throw std::invalid_argument("hermite_kdf: requires M >= 2");
  const Integer n_factorial = factorial(n);
  T total(0);
  for (unsigned r = 0; M * r <= n; ++r) {
    const Integer weight = n_factorial / (factorial(n - M * r) * factorial(r));
    total += from_integer<T>(weight) * ipow(g1, n - M * r) * ipow(gM, r);
  }
  return total;
}

/// H_n(a,b,c) = n! sum_r c^r H^(2)_{n-3r}(a,b) / ((n-3r)! r!), the Taylor
/// coefficients of exp(a x + b x^2 + c x^3).
template <class T>
T hermite3(unsigned n, const T& a, const T& b, const T& c) {
  const Integer n_factorial = factorial(n);
  T total(0);
  for (unsigned r = 0; 3 * r <= n; ++r) {
    const Integer weight = n_factorial / (factorial(n - 3 * r) * factorial(r));
    total += from_integer<T>(weight) * ipow(c, r) * hermite_kdf<T>(n - 3 * r, 2, a, b);
  }
  return total;
}

}  // namespace dobinski
