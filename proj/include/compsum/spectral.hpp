#pragma once

// Spectral residues of nu-parameterized recurrences
//
//   f_0 = 1,   (nu - n) f_n = sum_{j<n} a_{jn} f_j,
//
// i.e. rho_n = Res(f_n, nu = n). Residues are computed three ways: from the
// symbolic solution in nu, by direct evaluation at nu = n, and as a
// composition sum. The scalar type S is Rational, or a polynomial in t when
// the recurrence coefficients carry a marker.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "compsum/composition.hpp"
#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"
#include "compsum/series.hpp"

namespace compsum {

/// Recurrence constants a_{jk} for 0 <= j < k <= bound.
template <class S = Rational>
class CoefficientArray {
 public:
  explicit CoefficientArray(int bound)
      : bound_(bound), entries_(static_cast<std::size_t>(bound) * (bound + 1) / 2, S{}) {
    if (bound < 0) throw std::invalid_argument("negative array bound");
  }

  int bound() const { return bound_; }
  const S& operator()(int j, int k) const { return entries_[index(j, k)]; }
  void set(int j, int k, S value) { entries_[index(j, k)] = std::move(value); }

 private:
  std::size_t index(int j, int k) const {
    if (j < 0 || j >= k || k > bound_) throw std::out_of_range("coefficient index outside 0 <= j < k <= bound");
    return static_cast<std::size_t>(k) * (k - 1) / 2 + j;
  }
  int bound_;
  std::vector<S> entries_;
};

/// U(z) = U_1 z + U_2 z^2 + ... + U_K z^K; the constant term is absent.
template <class S = Rational>
class Potential {
 public:
  Potential() = default;
  explicit Potential(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(coeffs_.size()); }
  /// U_k, zero for k > order.
  S operator()(int k) const {
    if (k < 1) throw std::out_of_range("potential coefficients start at U_1");
    return k <= order() ? coeffs_[k - 1] : S{};
  }
  const std::vector<S>& coefficients() const { return coeffs_; }

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  std::vector<S> coeffs_;
};

/// rho_1..rho_K, stored from index 0.
template <class S = Rational>
using ResidueSequence = std::vector<S>;

/// numerator(nu) / prod_{k in roots} (nu - k) with distinct positive integer
/// roots. The numerator need not be coprime to the denominator; residues
/// are read off the simple poles either way.
template <class S = Rational>
class NuRationalFunction {
 public:
  NuRationalFunction() : numerator_(Var::nu) {}
  NuRationalFunction(Polynomial<S> numerator, std::vector<int> roots)
      : numerator_(std::move(numerator)), roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end());
    if (std::adjacent_find(roots_.begin(), roots_.end()) != roots_.end())
      throw std::invalid_argument("denominator roots must be simple");
    if (!roots_.empty() && roots_.front() < 1) throw std::invalid_argument("denominator roots must be positive");
    if (numerator_.is_zero()) roots_.clear();
  }
  static NuRationalFunction constant(const S& c) { return NuRationalFunction(Polynomial<S>(c, Var::nu), {}); }

  const Polynomial<S>& numerator() const { return numerator_; }
  const std::vector<int>& denominator_roots() const { return roots_; }
  bool is_zero() const { return numerator_.is_zero(); }
  bool has_root(int k) const { return std::binary_search(roots_.begin(), roots_.end(), k); }

  S evaluate(const Rational& nu) const {
    Rational den(1);
    for (int k : roots_) den *= nu - k;
    if (compsum::is_zero(den)) throw std::domain_error("evaluation at a pole");
    return numerator_.evaluate(nu) * Rational(1 / den);
  }

  /// Res(f, nu = n); zero when n is not a pole.
  S residue(int n) const {
    if (!has_root(n)) return S{};
    Rational den(1);
    for (int k : roots_)
      if (k != n) den *= n - k;
    return numerator_.evaluate(Rational(n)) * Rational(1 / den);
  }

  /// f / (nu - k); k must not already be a pole.
  NuRationalFunction divided_by_linear(int k) const {
    if (is_zero()) return *this;
    if (has_root(k)) throw std::domain_error("would create a double pole");
    auto roots = roots_;
    roots.push_back(k);
    return NuRationalFunction(numerator_, std::move(roots));
  }

  /// Cancels every denominator factor (nu - k) that divides the numerator.
  NuRationalFunction reduced() const {
    Polynomial<S> num = numerator_;
    std::vector<int> kept;
    for (int k : roots_) {
      if (compsum::is_zero(num.evaluate(Rational(k)))) num = num.divided_by_linear(Rational(k));
      else kept.push_back(k);
    }
    return NuRationalFunction(std::move(num), std::move(kept));
  }

  NuRationalFunction scaled(const S& c) const {
    return NuRationalFunction(numerator_ * Polynomial<S>(c, Var::nu), roots_);
  }

  friend NuRationalFunction operator+(const NuRationalFunction& a, const NuRationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<int> all;
    std::set_union(a.roots_.begin(), a.roots_.end(), b.roots_.begin(), b.roots_.end(), std::back_inserter(all));
    return NuRationalFunction(a.lifted_numerator(all) + b.lifted_numerator(all), all);
  }
  friend NuRationalFunction operator-(const NuRationalFunction& a, const NuRationalFunction& b) {
    return a + b.scaled(S(-1));
  }

  /// Equality as rational functions (cross-multiplied numerators).
  friend bool operator==(const NuRationalFunction& a, const NuRationalFunction& b) {
    std::vector<int> all;
    std::set_union(a.roots_.begin(), a.roots_.end(), b.roots_.begin(), b.roots_.end(), std::back_inserter(all));
    return a.lifted_numerator(all) == b.lifted_numerator(all);
  }

 private:
  // Numerator over the common denominator prod_{k in all} (nu - k).
  Polynomial<S> lifted_numerator(const std::vector<int>& all) const {
    Polynomial<S> num = numerator_;
    for (int k : all)
      if (!has_root(k)) num = num.times_linear(Rational(k));
    return num;
  }

  Polynomial<S> numerator_;
  std::vector<int> roots_;
};

/// f_0..f_{n_max} as exact rational functions of nu.
template <class S>
std::vector<NuRationalFunction<S>> solve_symbolic(const CoefficientArray<S>& a, int n_max, const S& one) {
  if (n_max > a.bound()) throw std::out_of_range("n_max exceeds the coefficient array bound");
  std::vector<NuRationalFunction<S>> f;
  f.push_back(NuRationalFunction<S>::constant(one));
  for (int n = 1; n <= n_max; ++n) {
    NuRationalFunction<S> rhs;
    for (int j = 0; j < n; ++j) {
      const S& c = a(j, n);
      if (compsum::is_zero(c) || f[j].is_zero()) continue;
      rhs = rhs + f[j].scaled(c);
    }
    f.push_back(rhs.reduced().divided_by_linear(n).reduced());
  }
  return f;
}

inline std::vector<NuRationalFunction<Rational>> solve_symbolic(const CoefficientArray<Rational>& a, int n_max) {
  return solve_symbolic(a, n_max, Rational(1));
}

template <class S>
S residue_at_pole(const NuRationalFunction<S>& f, int n) {
  return f.residue(n);
}

/// rho_n = Res(f_n, nu = n) from the symbolic solution.
template <class S>
ResidueSequence<S> residues_symbolic(const CoefficientArray<S>& a, int n_max, const S& one) {
  auto f = solve_symbolic(a, n_max, one);
  ResidueSequence<S> rho;
  for (int n = 1; n <= n_max; ++n) rho.push_back(f[n].residue(n));
  return rho;
}

inline ResidueSequence<Rational> residues_symbolic(const CoefficientArray<Rational>& a, int n_max) {
  return residues_symbolic(a, n_max, Rational(1));
}

/// rho_n = sum_{j<n} a_{jn} f_j(n): the f_j with j < n are regular at nu = n,
/// so they can be evaluated there by running the recurrence numerically.
template <class S>
S residue_by_evaluation(const CoefficientArray<S>& a, int n, const S& one) {
  if (n < 1 || n > a.bound()) throw std::out_of_range("residue index outside the array");
  std::vector<S> f{one};
  for (int m = 1; m < n; ++m) {
    S acc{};
    for (int j = 0; j < m; ++j)
      if (!compsum::is_zero(a(j, m))) acc += a(j, m) * f[j];
    f.push_back(acc * ratio(1, n - m));
  }
  S rho{};
  for (int j = 0; j < n; ++j)
    if (!compsum::is_zero(a(j, n))) rho += a(j, n) * f[j];
  return rho;
}

/// rho_1..rho_{n_max} by the recurrence alone, in O(n_max^3) operations;
/// the composition sums take 2^{n-1} terms at each n.
template <class S>
ResidueSequence<S> residues_by_recurrence(const CoefficientArray<S>& a, int n_max, const S& one) {
  ResidueSequence<S> rho;
  for (int n = 1; n <= n_max; ++n) rho.push_back(residue_by_evaluation(a, n, one));
  return rho;
}

/// Composition-sum form of the residues: with s_0 = 0,
///   rho_n = sum_{|p|=n} prod_{j=0}^{l-1} a_{s_j s_{j+1}} / prod_{j=1}^{l-1} (n - s_j).
/// The denominator is s_{p'}, the partial-sum product of the reversed
/// composition.
template <class S>
ResidueSequence<S> residues_by_composition(const CoefficientArray<S>& a, int n_max, const S& one) {
  if (n_max > a.bound()) throw std::out_of_range("n_max exceeds the coefficient array bound");
  ResidueSequence<S> rho;
  for (int n = 1; n <= n_max; ++n) {
    S total{};
    for_each_composition(n, PartFilter::all(), [&](const Composition& c) {
      S term = one;
      int prev = 0;
      for (int s : c.partial_sums()) {
        const S& entry = a(prev, s);
        if (compsum::is_zero(entry)) return;
        term = term * entry;
        prev = s;
      }
      total += term * reciprocal(reversed_s_weight(c));
    });
    rho.push_back(std::move(total));
  }
  return rho;
}

inline ResidueSequence<Rational> residues_by_composition(const CoefficientArray<Rational>& a, int n_max) {
  return residues_by_composition(a, n_max, Rational(1));
}

/// (nu - n) phi_n = sum_j U_{n-j} phi_j, i.e. a_{jn} = U_{n-j}.
template <class S>
CoefficientArray<S> from_first_order_potential(const Potential<S>& u, int bound = -1) {
  if (bound < 0) bound = u.order();
  CoefficientArray<S> a(bound);
  for (int n = 1; n <= bound; ++n)
    for (int j = 0; j < n; ++j) a.set(j, n, u(n - j));
  return a;
}

/// n (nu - n) phi_n = sum_j U_{n-j} phi_j, i.e. a_{jn} = U_{n-j} / n.
template <class S>
CoefficientArray<S> from_second_order_potential(const Potential<S>& u, int bound = -1) {
  if (bound < 0) bound = u.order();
  CoefficientArray<S> a(bound);
  for (int n = 1; n <= bound; ++n)
    for (int j = 0; j < n; ++j) a.set(j, n, u(n - j) * ratio(1, n));
  return a;
}

/// Residues of the second-order recurrence:
///   rho_n = (1/n) sum_{|p|=n} U_p / (s_p s_{p'}),   U_p = prod_i U_{p_i}.
template <class S>
ResidueSequence<S> residues_second_order(const Potential<S>& u, int n_max, const S& one) {
  ResidueSequence<S> rho;
  for (int n = 1; n <= n_max; ++n) {
    S total{};
    for_each_composition(n, PartFilter::all(), [&](const Composition& c) {
      S term = one;
      for (int p : c.parts()) {
        S up = u(p);
        if (compsum::is_zero(up)) return;
        term = term * up;
      }
      BigInt den = s_weight(c) * reversed_s_weight(c) * n;
      total += term * reciprocal(den);
    });
    rho.push_back(std::move(total));
  }
  return rho;
}

inline ResidueSequence<Rational> residues_second_order(const Potential<Rational>& u, int n_max) {
  return residues_second_order(u, n_max, Rational(1));
}

/// The unique potential whose second-order residues are rho. Since
/// rho_n = U_n / n + (terms in U_1..U_{n-1}), U_n follows by forward
/// substitution.
template <class S>
Potential<S> potential_from_residues(const ResidueSequence<S>& rho, const S& one) {
  const int order = static_cast<int>(rho.size());
  std::vector<S> u(order, S{});
  for (int n = 1; n <= order; ++n) {
    auto a = from_second_order_potential(Potential<S>(u), n);
    S lower = residue_by_evaluation(a, n, one);  // U_n is still zero here
    u[n - 1] = (rho[n - 1] - lower) * Rational(n);
  }
  return Potential<S>(std::move(u));
}

inline Potential<Rational> potential_from_residues(const ResidueSequence<Rational>& rho) {
  return potential_from_residues(rho, Rational(1));
}

/// Compares the residues of the first-order recurrence for U with those of
/// its gauge transform psi = exp(sigma) phi, sigma = sum_k U_k z^k / k.
struct GaugeReport {
  /// Res(phi_n, nu = n).
  ResidueSequence<Rational> direct;
  /// Res(psi_n, nu = n) with psi_n = sum_k E_k phi_{n-k}, E = exp(sigma).
  ResidueSequence<Rational> transformed;
  /// n E_n, read off the transformed equation (nu - n) psi_n = nu E_n.
  ResidueSequence<Rational> from_transformed_equation;
  /// psi_n built from the phi's equals nu E_n / (nu - n) identically in nu.
  bool psi_solves_transformed_equation = true;
  bool equal = true;
};

inline GaugeReport gauge_check_first_order(const Potential<Rational>& u, int n_max) {
  TruncatedSeries<Rational> sigma(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) sigma[k] = u(k) / Rational(k);
  const auto e = series_exp(sigma);
  const auto phi = solve_symbolic(from_first_order_potential(u, n_max), n_max);

  GaugeReport report;
  for (int n = 1; n <= n_max; ++n) {
    NuRationalFunction<Rational> psi;
    for (int k = 0; k <= n; ++k)
      if (!is_zero(e[k])) psi = psi + phi[n - k].scaled(e[k]);
    const NuRationalFunction<Rational> expected(Polynomial<Rational>({Rational(0), e[n]}, Var::nu), {n});
    report.psi_solves_transformed_equation = report.psi_solves_transformed_equation && psi == expected;
    report.direct.push_back(phi[n].residue(n));
    report.transformed.push_back(psi.residue(n));
    report.from_transformed_equation.push_back(e[n] * n);
  }
  report.equal = report.psi_solves_transformed_equation && report.direct == report.transformed &&
                 report.direct == report.from_transformed_equation;
  return report;
}

/// The three exactly solvable second-order potentials.
enum class Identity { id1, id2, id3 };

inline const char* identity_name(Identity which) {
  switch (which) {
    case Identity::id1: return "id1";
    case Identity::id2: return "id2";
    case Identity::id3: return "id3";
  }
  return "?";
}

/// U_1..U_order of the potential whose residues the identity describes, with
/// t carried as a polynomial coefficient:
///   id1: U(z) = t sum_k k z^k
///   id2: U(z) = z + t z^2
///   id3: U_k = k t^{(k-1)/2} for odd k, else 0. This is the odd-k potential
///        with z rescaled so that only integral powers of t appear.
inline Potential<CountingPolynomial> identity_potential(Identity which, int order) {
  std::vector<CountingPolynomial> u;
  for (int k = 1; k <= order; ++k) {
    switch (which) {
      case Identity::id1:
        u.push_back(CountingPolynomial::monomial(Rational(k), 1));
        break;
      case Identity::id2:
        u.push_back(k == 1 ? CountingPolynomial(Rational(1)) : k == 2 ? CountingPolynomial::monomial(Rational(1), 1)
                                                                       : CountingPolynomial());
        break;
      case Identity::id3:
        u.push_back(k % 2 == 1 ? CountingPolynomial::monomial(Rational(k), static_cast<std::size_t>(k / 2))
                               : CountingPolynomial());
        break;
    }
  }
  return Potential<CountingPolynomial>(std::move(u));
}

/// Closed-form residues of the solvable potentials, as polynomials in t:
///   id1: prod_{j=1}^{n} (t + j(j-1)) / (n! (n-1)!)
///   id2: prod_{k=0}^{floor((n-1)/2)} (1 + t (n-1-2k)^2) / (n! (n-1)!)
///   id3: prod_{k = n-1, n-3, ... > 0} (1 + (k^4 - k^2) t), left at the
///        normalization of the composition-sum identity, i.e. n!(n-1)! times
///        the residue of identity_potential(id3).
inline CountingPolynomial closed_form_residue(Identity which, int n) {
  if (n < 1) throw std::invalid_argument("closed_form_residue needs n >= 1");
  const Rational norm = reciprocal(factorial(n) * factorial(n - 1));
  std::vector<Rational> constants;
  switch (which) {
    case Identity::id1: {
      // t + j(j-1) = j(j-1) (1 + t / (j(j-1))) for j >= 2; j = 1 contributes t.
      CountingPolynomial out = CountingPolynomial::monomial(Rational(1), 1);
      for (int j = 2; j <= n; ++j) out = out * CountingPolynomial({Rational(j * (j - 1)), Rational(1)});
      return out * norm;
    }
    case Identity::id2:
      for (int k = 0; 2 * k <= n - 1; ++k) constants.emplace_back((n - 1 - 2 * k) * (n - 1 - 2 * k));
      return product_of_linear_factors(constants) * norm;
    case Identity::id3:
      for (int k = n - 1; k > 0; k -= 2) {
        BigInt k2 = BigInt(k) * k;
        constants.emplace_back(k2 * k2 - k2);
      }
      return product_of_linear_factors(constants);
  }
  throw std::invalid_argument("unknown identity");
}

/// psi_n = (alpha)_n (alpha - nu)_n / (n! (1 - nu)_n), the hypergeometric
/// coefficients of the gauge-transformed id1 equation.
inline Rational hypergeom_coefficient(const Rational& alpha, const Rational& nu, unsigned n) {
  Rational den = pochhammer(Rational(1) - nu, n) * Rational(factorial(n));
  if (is_zero(den)) throw std::domain_error("hypergeom_coefficient: (1 - nu)_n vanishes");
  return pochhammer(alpha, n) * pochhammer(alpha - nu, n) / den;
}

/// Res(psi_n, nu = n). Only the factor (n - nu) of (1 - nu)_n vanishes at
/// nu = n, so the residue is -(alpha)_n (alpha - n)_n / (n! (1 - n)_{n-1}).
inline Rational hypergeom_residue(const Rational& alpha, unsigned n) {
  if (n < 1) throw std::invalid_argument("hypergeom_residue needs n >= 1");
  Rational rest = pochhammer(Rational(1) - Rational(n), n - 1) * Rational(factorial(n));
  return -pochhammer(alpha, n) * pochhammer(alpha - Rational(n), n) / rest;
}

}  // namespace compsum
