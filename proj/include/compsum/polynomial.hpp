#pragma once

// Dense univariate polynomials over an exact coefficient ring.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compsum/rational.hpp"

namespace compsum {

/// Name of the formal indeterminate a polynomial is written in.
enum class Var { t, z, nu, y };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::z: return "z";
    case Var::nu: return "nu";
    case Var::y: return "y";
  }
  return "?";
}

class IndeterminateMismatch : public std::invalid_argument {
 public:
  IndeterminateMismatch(Var a, Var b)
      : std::invalid_argument(std::string("indeterminate mismatch: ") + var_name(a) + " vs " +
                              var_name(b)) {}
};

template <class C>
class Polynomial;
template <class C>
bool is_zero(const Polynomial<C>& p);

/// Coefficients indexed by exponent; trailing zeros are always trimmed, so
/// the zero polynomial has no coefficients. Constants are compatible with
/// every indeterminate; two non-constant operands must share their tag.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  explicit Polynomial(Var var) : var_(var) {}
  Polynomial(const C& constant, Var var = Var::t) : var_(var) {
    coeffs_.push_back(constant);
    trim();
  }
  Polynomial(std::vector<C> coeffs, Var var) : coeffs_(std::move(coeffs)), var_(var) { trim(); }
  Polynomial(std::initializer_list<C> coeffs, Var var = Var::t) : coeffs_(coeffs), var_(var) {
    trim();
  }

  /// The monomial c * var^k.
  static Polynomial monomial(const C& c, std::size_t k, Var var = Var::t) {
    std::vector<C> v(k + 1, C{});
    v[k] = c;
    return Polynomial(std::move(v), var);
  }

  Var var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const C> coefficients() const { return coeffs_; }

  /// Coefficient of var^k, zero beyond the degree.
  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C{}; }
  C leading() const { return coeffs_.empty() ? C{} : coeffs_.back(); }

  template <class X>
  auto evaluate(const X& x) const {
    C acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Drops every term of degree > order.
  Polynomial truncated(std::size_t order) const {
    if (coeffs_.size() <= order + 1) return *this;
    return Polynomial(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1), var_);
  }

  Polynomial& operator+=(const Polynomial& o) {
    var_ = join(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C{});
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    var_ = join(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C{});
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Var v = a.join(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(v);
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (compsum::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out), v);
  }
  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }

  /// Exact comparison of coefficient lists; the tag only matters when both
  /// sides are non-constant.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_) return false;
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by (var - root).
  Polynomial times_linear(const Rational& root) const {
    if (is_zero()) return *this;
    std::vector<C> out(coeffs_.size() + 1, C{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i + 1] += coeffs_[i];
      out[i] -= coeffs_[i] * root;
    }
    return Polynomial(std::move(out), var_);
  }

  /// Exact division by (var - root); requires evaluate(root) == 0.
  Polynomial divided_by_linear(const Rational& root) const {
    if (coeffs_.size() <= 1) {
      if (is_zero()) return *this;
      throw std::domain_error("nonzero constant is not divisible by a linear factor");
    }
    std::vector<C> quotient(coeffs_.size() - 1, C{});
    C carry{};
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
      carry = coeffs_[i] + carry * root;
      quotient[i - 1] = carry;
    }
    C remainder = coeffs_[0] + carry * root;
    if (!compsum::is_zero(remainder)) throw std::domain_error("linear factor does not divide");
    return Polynomial(std::move(quotient), var_);
  }

  Polynomial retagged(Var v) const { return Polynomial(coeffs_, v); }

 private:
  Var join(const Polynomial& o) const {
    if (is_constant()) return o.is_constant() ? var_ : o.var_;
    if (!o.is_constant() && o.var_ != var_) throw IndeterminateMismatch(var_, o.var_);
    return var_;
  }
  void trim() {
    while (!coeffs_.empty() && compsum::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
  Var var_ = Var::t;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

using CountingPolynomial = Polynomial<Rational>;

/// prod_c (1 + c * t).
inline CountingPolynomial product_of_linear_factors(std::span<const Rational> constants,
                                                    Var var = Var::t) {
  std::vector<Rational> acc{Rational(1)};
  for (const auto& c : constants) {
    if (is_zero(c)) continue;
    acc.push_back(Rational(0));
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] += c * acc[i - 1];
  }
  return CountingPolynomial(std::move(acc), var);
}

inline CountingPolynomial product_of_linear_factors(std::initializer_list<Rational> constants,
                                                   Var var = Var::t) {
  return product_of_linear_factors(std::span<const Rational>(constants.begin(), constants.size()),
                                   var);
}

/// True when every coefficient is an integer.
inline bool has_integer_coefficients(const CountingPolynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

namespace detail {
inline std::string coefficient_text(const Rational& c) { return to_string(c); }
template <class C>
std::string coefficient_text(const Polynomial<C>& c);
}  // namespace detail

/// Human-readable form, e.g. "1 + 10t + 9t^2". Rational coefficients are
/// printed as p/q.
template <class C>
std::string to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::string name = var_name(p.var());
  auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    std::string c = detail::coefficient_text(coeffs[k]);
    bool compound = c.find(' ') != std::string::npos;
    if (compound) c = "(" + c + ")";
    if (!out.empty()) {
      bool negative = !compound && c[0] == '-';
      out += negative ? " - " : " + ";
      if (negative) c.erase(0, 1);
    }
    if (k > 0) {
      if (c == "1") c.clear();
      else if (c == "-1") c = "-";
      else if (!compound && c.find('/') != std::string::npos) c = "(" + c + ")";
    }
    out += c;
    if (k > 0) out += name;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace detail {
template <class C>
std::string coefficient_text(const Polynomial<C>& c) {
  return to_string(c);
}
}  // namespace detail

}  // namespace compsum
