#pragma once

// Formal power series truncated at a fixed order.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"

namespace compsum {

/// Coefficients c_0..c_K of a series in z, where K = order(). Operations
/// never look past the order; binary operations truncate to the smaller one.
template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, C{}) {}
  TruncatedSeries(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, C{});
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  C& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i)
      for (std::size_t j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return out;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// The truncated series as a polynomial in z.
  Polynomial<C> to_polynomial() const
    requires std::is_same_v<C, Rational>
  {
    return Polynomial<C>(coeffs_, Var::z);
  }

 private:
  std::vector<C> coeffs_;
};

/// exp of a series with zero constant term, via n g_n = sum_k k s_k g_{n-k}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& sigma, const C& one) {
  if (!is_zero(sigma[0])) throw std::domain_error("series_exp: nonzero constant term");
  TruncatedSeries<C> g(sigma.order());
  g[0] = one;
  for (std::size_t n = 1; n <= sigma.order(); ++n) {
    C acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      if (is_zero(sigma[k])) continue;
      acc += sigma[k] * g[n - k] * Rational(static_cast<long>(k));
    }
    g[n] = acc * ratio(1, static_cast<long>(n));
  }
  return g;
}

inline TruncatedSeries<Rational> series_exp(const TruncatedSeries<Rational>& sigma) {
  return series_exp(sigma, Rational(1));
}

/// Inverse of series_exp: the series d with d_0 = 0 and exp(d) = g, for g_0 = 1.
inline TruncatedSeries<Rational> series_log(const TruncatedSeries<Rational>& g) {
  if (g[0] != 1) throw std::domain_error("series_log: constant term must be 1");
  TruncatedSeries<Rational> d(g.order());
  // n g_n = sum_{k=1..n} k d_k g_{n-k}, solved for d_n since g_0 = 1.
  for (std::size_t n = 1; n <= g.order(); ++n) {
    Rational acc = g[n] * static_cast<long>(n);
    for (std::size_t k = 1; k < n; ++k) acc -= d[k] * g[n - k] * static_cast<long>(k);
    d[n] = acc / static_cast<long>(n);
  }
  return d;
}

}  // namespace compsum
