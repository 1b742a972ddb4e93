#pragma once

// Composition-sum identities checked as exact polynomial equalities, and the
// labelled-counting (deck/hand) reading of the first-order identity.

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compsum/composition.hpp"
#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"
#include "compsum/series.hpp"
#include "compsum/spectral.hpp"

namespace compsum {

struct IdentityReport {
  std::string name;
  int n = 0;
  CountingPolynomial left;
  CountingPolynomial right;
  bool equal = false;
  /// Lowest exponent whose coefficients differ, when !equal.
  std::optional<long> first_mismatch_exponent;
};

inline IdentityReport make_report(std::string name, int n, CountingPolynomial left, CountingPolynomial right) {
  IdentityReport r{std::move(name), n, std::move(left), std::move(right), false, std::nullopt};
  const long top = std::max(r.left.degree(), r.right.degree());
  for (long k = 0; k <= top; ++k) {
    if (r.left.coeff(k) != r.right.coeff(k)) {
      r.first_mismatch_exponent = k;
      break;
    }
  }
  r.equal = !r.first_mismatch_exponent.has_value();
  return r;
}

namespace detail {

// sum over admissible compositions of ((n-1)!)^2 / (s_p s_{p'}) * extra(p) * t^exponent(p)
template <class Extra, class Exponent>
CountingPolynomial double_weight_sum(int n, const PartFilter& filter, Extra extra, Exponent exponent) {
  const BigInt top = factorial(n - 1) * factorial(n - 1);
  std::vector<BigInt> coeffs;
  BigInt den, term;
  for_each_composition(n, filter, [&](const Composition& c) {
    den = s_weight(c) * reversed_s_weight(c);
    mpz_divexact(term.get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
    term *= extra(c);
    const std::size_t e = exponent(c);
    if (coeffs.size() <= e) coeffs.resize(e + 1, BigInt(0));
    coeffs[e] += term;
  });
  std::vector<Rational> out(coeffs.begin(), coeffs.end());
  return CountingPolynomial(std::move(out), Var::t);
}

inline BigInt product_of_parts(const Composition& c) {
  BigInt out(1);
  for (int p : c.parts()) out *= p;
  return out;
}

inline void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("identity index n must be >= 1");
}

}  // namespace detail

/// sum_{|p|=n} (n-1)!/s_p (n-1)!/s_{p'} (prod p_i) t^l
inline CountingPolynomial lhs_id1(int n) {
  detail::require_positive(n);
  return detail::double_weight_sum(
      n, PartFilter::all(), detail::product_of_parts, [](const Composition& c) { return c.length(); });
}

/// prod_{j=1}^{n} (t + j(j-1))
inline CountingPolynomial rhs_id1(int n) {
  detail::require_positive(n);
  CountingPolynomial out = CountingPolynomial::monomial(Rational(1), 1);
  for (int j = 2; j <= n; ++j) out = out * CountingPolynomial({Rational(j * (j - 1)), Rational(1)});
  return out;
}

/// sum over compositions of n by {1,2} of (n-1)!/s_p (n-1)!/s_{p'} t^{n-l}
inline CountingPolynomial lhs_id2(int n) {
  detail::require_positive(n);
  return detail::double_weight_sum(
      n, PartFilter::in_set({1, 2}), [](const Composition&) { return BigInt(1); },
      [n](const Composition& c) { return static_cast<std::size_t>(n) - c.length(); });
}

/// prod (1 + k^2 t) over k = n-1, n-3, ... > 0
inline CountingPolynomial rhs_id2(int n) {
  detail::require_positive(n);
  std::vector<Rational> constants;
  for (int k = n - 1; k > 0; k -= 2) constants.emplace_back(k * k);
  return product_of_linear_factors(constants);
}

/// sum over odd-part compositions of n of (n-1)!/s_p (n-1)!/s_{p'} (prod p_i) t^{(n-l)/2}
inline CountingPolynomial lhs_id3(int n) {
  detail::require_positive(n);
  return detail::double_weight_sum(n, PartFilter::odd(), detail::product_of_parts, [n](const Composition& c) {
    const std::size_t gap = static_cast<std::size_t>(n) - c.length();
    // odd parts force l = n (mod 2)
    if (gap % 2 != 0) throw std::logic_error("odd-part composition with n - l odd");
    return gap / 2;
  });
}

/// prod (1 + (k^4 - k^2) t) over k = n-1, n-3, ... > 0
inline CountingPolynomial rhs_id3(int n) {
  detail::require_positive(n);
  std::vector<Rational> constants;
  for (int k = n - 1; k > 0; k -= 2) {
    BigInt k2 = BigInt(k) * k;
    constants.emplace_back(k2 * k2 - k2);
  }
  return product_of_linear_factors(constants);
}

inline IdentityReport verify(Identity which, int n) {
  switch (which) {
    case Identity::id1: return make_report("id1", n, lhs_id1(n), rhs_id1(n));
    case Identity::id2: return make_report("id2", n, lhs_id2(n), rhs_id2(n));
    case Identity::id3: return make_report("id3", n, lhs_id3(n), rhs_id3(n));
  }
  throw std::invalid_argument("unknown identity");
}

/// Coefficients 0..order of 1 + sum_n (sum_{|p|=n} U_p / s_p) z^n / n. The
/// constant 1 stands for the empty composition of 0.
template <class S>
std::vector<S> first_order_composition_series(const Potential<S>& u, int order, const S& one) {
  std::vector<S> out{one};
  for (int n = 1; n <= order; ++n) {
    S total{};
    for_each_composition(n, PartFilter::all(), [&](const Composition& c) {
      S term = one;
      for (int p : c.parts()) {
        S up = u(p);
        if (is_zero(up)) return;
        term = term * up;
      }
      total += term * reciprocal(s_weight(c) * n);
    });
    out.push_back(std::move(total));
  }
  return out;
}

/// Composition side against exp(sum_k U_k z^k / k), both to z^order.
inline IdentityReport first_order_identity(const Potential<Rational>& u, int order) {
  if (order < 1) throw std::invalid_argument("first_order_identity needs order >= 1");
  auto lhs = first_order_composition_series(u, order, Rational(1));
  TruncatedSeries<Rational> sigma(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) sigma[k] = u(k) / Rational(k);
  return make_report("first-order", order, CountingPolynomial(std::move(lhs), Var::z),
                     series_exp(sigma).to_polynomial());
}

/// Card counts d_1..d_K of a deck.
class Deck {
 public:
  Deck() = default;
  explicit Deck(std::vector<BigInt> cards) : cards_(std::move(cards)) {
    for (const auto& d : cards_)
      if (sgn(d) < 0) throw std::invalid_argument("deck cardinalities must be nonnegative");
  }
  int size() const { return static_cast<int>(cards_.size()); }
  /// d_k; zero past the end.
  BigInt operator()(int k) const {
    if (k < 1) throw std::out_of_range("deck weights start at 1");
    return k <= size() ? cards_[k - 1] : BigInt(0);
  }
  const std::vector<BigInt>& cards() const { return cards_; }

 private:
  std::vector<BigInt> cards_;
};

/// Connected labelled graphs on k vertices, k = 1..max_weight, taken from the
/// logarithm of the all-graphs series sum_n 2^{C(n,2)} z^n / n!.
inline Deck connected_graph_deck(int max_weight) {
  TruncatedSeries<Rational> all(static_cast<std::size_t>(max_weight));
  for (int n = 0; n <= max_weight; ++n) all[n] = Rational(pow2(n * (n - 1) / 2)) / Rational(factorial(n));
  auto log = series_log(all);
  std::vector<BigInt> cards;
  for (int k = 1; k <= max_weight; ++k) {
    Rational d = log[k] * Rational(factorial(k));
    cards.push_back(d.get_num());
  }
  return Deck(std::move(cards));
}

/// h_{n,l} for l = 1..n (index l-1): number of hands of weight n and size l,
///   h_{nl} = sum_{|p|=n, l parts} n! / (s_p n prod (p_i - 1)!) prod d_{p_i}.
inline std::vector<BigInt> hands_by_composition(const Deck& deck, int n) {
  if (n < 1) throw std::invalid_argument("hands_by_composition needs n >= 1");
  std::vector<Rational> h(static_cast<std::size_t>(n), Rational(0));
  const Rational nfact(factorial(n));
  for_each_composition(n, PartFilter::all(), [&](const Composition& c) {
    BigInt cards(1), den = s_weight(c) * n;
    for (int p : c.parts()) {
      cards *= deck(p);
      den *= factorial(p - 1);
    }
    if (sgn(cards) == 0) return;
    h[c.length() - 1] += nfact * Rational(cards) / Rational(den);
  });
  std::vector<BigInt> out;
  for (const auto& v : h) {
    if (v.get_den() != 1) throw std::logic_error("hand count is not an integer");
    out.push_back(v.get_num());
  }
  return out;
}

/// h_{n,l} for l = 1..n read off n! [z^n] exp(y d(z)), d(z) = sum_k d_k z^k / k!.
inline std::vector<BigInt> hands_by_exponential_formula(const Deck& deck, int n) {
  TruncatedSeries<CountingPolynomial> sigma(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    sigma[k] = CountingPolynomial::monomial(Rational(deck(k)) / Rational(factorial(k)), 1, Var::y);
  auto h = series_exp(sigma, CountingPolynomial(Rational(1), Var::y));
  std::vector<BigInt> out;
  for (int l = 1; l <= n; ++l) {
    Rational v = h[n].coeff(l) * Rational(factorial(n));
    if (v.get_den() != 1) throw std::logic_error("exponential formula produced a non-integer count");
    out.push_back(v.get_num());
  }
  return out;
}

inline CountingPolynomial hand_polynomial(const std::vector<BigInt>& h) {
  std::vector<Rational> coeffs{Rational(0)};
  for (const auto& v : h) coeffs.emplace_back(v);
  return CountingPolynomial(std::move(coeffs), Var::y);
}

/// One report per weight n = 1..n_max: left is sum_l h_{nl} y^l from the
/// ordered-hand composition count, right is the same slice of exp(y d(z)).
inline std::vector<IdentityReport> exp_formula_check(const Deck& deck, int n_max) {
  std::vector<IdentityReport> slices;
  for (int n = 1; n <= n_max; ++n)
    slices.push_back(make_report("exp-formula", n, hand_polynomial(hands_by_composition(deck, n)),
                                 hand_polynomial(hands_by_exponential_formula(deck, n))));
  return slices;
}

/// Labelled graphs on n vertices counted by number of connected components
/// (index l-1), by walking all 2^{C(n,2)} edge sets.
inline std::vector<BigInt> component_census(int n) {
  if (n < 1 || n > 7) throw std::out_of_range("component_census supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<unsigned long> counts(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const unsigned long graphs = 1UL << edges.size();
  for (unsigned long mask = 0; mask < graphs; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(mask >> e & 1UL)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    ++counts[components - 1];
  }
  return std::vector<BigInt>(counts.begin(), counts.end());
}

}  // namespace compsum
