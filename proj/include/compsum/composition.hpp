#pragma once

// Compositions of n: ordered lists of positive parts summing to n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compsum/rational.hpp"

namespace compsum {

class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    rebuild_sums();
  }

  const std::vector<int>& parts() const { return parts_; }
  /// s_1..s_l; the last one is the weight.
  const std::vector<int>& partial_sums() const { return sums_; }
  int weight() const { return sums_.back(); }
  std::size_t length() const { return parts_.size(); }

  Composition reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  friend class CompositionStream;
  Composition() = default;

  void rebuild_sums() {
    sums_.resize(parts_.size());
    int acc = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) sums_[i] = acc += parts_[i];
  }

  std::vector<int> parts_;
  std::vector<int> sums_;
};

inline std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.parts()[i]);
  }
  return out + ")";
}

/// Which part sizes a composition may use.
class PartFilter {
 public:
  enum class Kind { all, in_set, odd };

  static PartFilter all() { return PartFilter(Kind::all, {}); }
  static PartFilter odd() { return PartFilter(Kind::odd, {}); }
  static PartFilter in_set(std::set<int> allowed) {
    if (allowed.empty()) throw std::invalid_argument("empty part set");
    for (int p : allowed)
      if (p <= 0) throw std::invalid_argument("part set must hold positive integers");
    return PartFilter(Kind::in_set, std::move(allowed));
  }

  Kind kind() const { return kind_; }
  bool allows(int part) const {
    switch (kind_) {
      case Kind::all: return part > 0;
      case Kind::odd: return part > 0 && part % 2 == 1;
      case Kind::in_set: return allowed_.count(part) != 0;
    }
    return false;
  }

 private:
  PartFilter(Kind kind, std::set<int> allowed) : kind_(kind), allowed_(std::move(allowed)) {}
  Kind kind_;
  std::set<int> allowed_;
};

/// Streams the admissible compositions of n in lexicographic order of parts,
/// holding only the current composition.
///
///   CompositionStream s(4, PartFilter::all());
///   while (s.next()) use(s.current());
class CompositionStream {
 public:
  CompositionStream(int n, PartFilter filter) : n_(n), filter_(std::move(filter)) {
    if (n <= 0) throw std::invalid_argument("compositions are enumerated for n >= 1");
    feasible_.assign(static_cast<std::size_t>(n) + 1, false);
    feasible_[0] = true;
    for (int r = 1; r <= n; ++r)
      for (int p = 1; p <= r && !feasible_[r]; ++p)
        if (filter_.allows(p) && feasible_[r - p]) feasible_[r] = true;
  }

  /// Advances to the next composition; false once the stream is exhausted.
  bool next() {
    if (done_) return false;
    auto& parts = current_.parts_;
    if (!started_) {
      started_ = true;
      if (!feasible_[n_]) return finish();
      fill(n_);
      return true;
    }
    int remaining = 0;
    while (!parts.empty()) {
      int last = parts.back();
      parts.pop_back();
      remaining += last;
      for (int q = last + 1; q <= remaining; ++q) {
        if (filter_.allows(q) && feasible_[remaining - q]) {
          parts.push_back(q);
          fill(remaining - q);
          return true;
        }
      }
    }
    return finish();
  }

  const Composition& current() const { return current_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    explicit iterator(CompositionStream* s) : stream_(s) { advance(); }
    reference operator*() const { return stream_->current(); }
    pointer operator->() const { return &stream_->current(); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.stream_ == nullptr; }

   private:
    void advance() {
      if (stream_ && !stream_->next()) stream_ = nullptr;
    }
    CompositionStream* stream_ = nullptr;
  };

  /// Single pass: begin() starts consuming the stream.
  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  // Appends the lexicographically smallest admissible tail summing to r.
  void fill(int r) {
    auto& parts = current_.parts_;
    while (r > 0) {
      for (int q = 1; q <= r; ++q) {
        if (filter_.allows(q) && feasible_[r - q]) {
          parts.push_back(q);
          r -= q;
          break;
        }
      }
    }
    current_.rebuild_sums();
  }
  bool finish() {
    done_ = true;
    return false;
  }

  int n_;
  PartFilter filter_;
  std::vector<bool> feasible_;
  Composition current_;
  bool started_ = false;
  bool done_ = false;
};

inline CompositionStream enumerate(int n, PartFilter filter = PartFilter::all()) {
  return CompositionStream(n, std::move(filter));
}

/// Calls f(c) for every admissible composition of n, in stream order.
template <class F>
void for_each_composition(int n, const PartFilter& filter, F&& f) {
  CompositionStream stream(n, filter);
  while (stream.next()) f(stream.current());
}

/// s_p: product of the partial sums s_1..s_{l-1}; 1 for a single part.
inline BigInt s_weight(const Composition& c) {
  BigInt out(1);
  const auto& sums = c.partial_sums();
  for (std::size_t j = 0; j + 1 < sums.size(); ++j) out *= sums[j];
  return out;
}

/// s_{p'}, the same product for the reversed composition: prod_j (n - s_j).
inline BigInt reversed_s_weight(const Composition& c) {
  BigInt out(1);
  const auto& sums = c.partial_sums();
  const int n = c.weight();
  for (std::size_t j = 0; j + 1 < sums.size(); ++j) out *= n - sums[j];
  return out;
}

/// L_p = {s_1, ..., s_{l-1}}, ascending.
inline std::vector<int> left_sum_set(const Composition& c) {
  const auto& sums = c.partial_sums();
  return std::vector<int>(sums.begin(), sums.end() - 1);
}

/// The composition of n whose left partial sums are exactly `sums`.
inline Composition from_left_sums(std::vector<int> sums, int n) {
  std::sort(sums.begin(), sums.end());
  if (std::adjacent_find(sums.begin(), sums.end()) != sums.end())
    throw std::invalid_argument("left sums must be distinct");
  if (!sums.empty() && (sums.front() < 1 || sums.back() > n - 1))
    throw std::invalid_argument("left sums must lie in 1..n-1");
  std::vector<int> parts;
  int prev = 0;
  for (int s : sums) {
    parts.push_back(s - prev);
    prev = s;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

/// The composition q with L_q = {1..n-1} \ L_c.
inline Composition complement(const Composition& c) {
  const int n = c.weight();
  auto taken = left_sum_set(c);
  std::vector<int> rest;
  auto it = taken.begin();
  for (int v = 1; v < n; ++v) {
    if (it != taken.end() && *it == v) {
      ++it;
      continue;
    }
    rest.push_back(v);
  }
  return from_left_sums(std::move(rest), n);
}

/// Compositions of m by {1,2} to compositions of m+1 by odd parts: prepend a
/// 1, then absorb every 2 into the part before it.
inline Composition odd_bijection(const Composition& c) {
  std::vector<int> out{1};
  for (int p : c.parts()) {
    if (p == 2) out.back() += 2;
    else if (p == 1) out.push_back(1);
    else throw std::invalid_argument("odd_bijection expects parts in {1,2}");
  }
  return Composition(std::move(out));
}

/// Inverse of odd_bijection: 2m+1 becomes 1 followed by m twos, and the
/// leading 1 is dropped. Requires odd parts and weight >= 2.
inline Composition odd_bijection_inverse(const Composition& c) {
  std::vector<int> expanded;
  for (int p : c.parts()) {
    if (p % 2 == 0) throw std::invalid_argument("odd_bijection_inverse expects odd parts");
    expanded.push_back(1);
    expanded.insert(expanded.end(), static_cast<std::size_t>(p / 2), 2);
  }
  if (expanded.size() < 2) throw std::invalid_argument("odd_bijection_inverse needs weight >= 2");
  expanded.erase(expanded.begin());
  return Composition(std::move(expanded));
}

enum class StirlingKind { first, second };

/// Stirling numbers from their composition-sum form:
///   first kind  (unsigned): n!/l! * sum 1/(p_1 ... p_l)
///   second kind:            n!/l! * sum 1/(p_1! ... p_l!)
/// over compositions of n with exactly l parts.
inline BigInt stirling_via_compositions(StirlingKind kind, int n, int l) {
  if (l < 1 || l > n) throw std::out_of_range("stirling_via_compositions needs 1 <= l <= n");
  Rational sum(0);
  for_each_composition(n, PartFilter::all(), [&](const Composition& c) {
    if (static_cast<int>(c.length()) != l) return;
    BigInt den(1);
    for (int p : c.parts()) den *= kind == StirlingKind::first ? BigInt(p) : factorial(p);
    sum += Rational(1) / Rational(den);
  });
  Rational value = sum * Rational(factorial(n)) / Rational(factorial(l));
  if (value.get_den() != 1) throw std::logic_error("Stirling composition sum is not an integer");
  return value.get_num();
}

}  // namespace compsum
