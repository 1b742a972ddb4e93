#pragma once

// Coordinate statistics of the order simplex
//
//   S^N(n) = { (x_1, ..., x_N) : 0 <= x_1 < x_2 < ... < x_N <= n },
//
// and enumerator polynomials for subsets whose projection onto one
// coordinate is distinct, sparse, or 2-sparse. Coordinates are 1-based.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "compsum/polynomial.hpp"
#include "compsum/rational.hpp"

namespace compsum {

struct OrderSimplexSpec {
  int N = 3;
  int n = 3;

  void validate() const {
    if (N < 1) throw std::invalid_argument("order simplex needs N >= 1");
    if (n < N - 1) throw std::invalid_argument("order simplex needs n >= N - 1");
  }
  /// C(n+1, N).
  BigInt point_count() const { return binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(N)); }
};

/// Limits beyond which exact products stop being desk-scale.
inline constexpr int kMaxTupleLength = 12;
inline constexpr int kMaxCoordinateBound = 64;

inline void check_default_guard(const OrderSimplexSpec& spec) {
  spec.validate();
  if (spec.N > kMaxTupleLength || spec.n > kMaxCoordinateBound)
    throw std::out_of_range("order simplex outside the supported range N <= 12, n <= 64");
}

/// counts[v] = number of points whose d-th coordinate equals v, v = 0..n.
struct ValueHistogram {
  int coordinate = 1;
  std::vector<BigInt> counts;
};

/// c_v = C(v, d-1) C(n-v, N-d): d-1 smaller coordinates below v, N-d above.
inline ValueHistogram value_histogram(const OrderSimplexSpec& spec, int d) {
  spec.validate();
  if (d < 1 || d > spec.N) throw std::out_of_range("coordinate index outside 1..N");
  ValueHistogram h{d, {}};
  for (int v = 0; v <= spec.n; ++v) h.counts.push_back(binomial_signed(v, d - 1) * binomial_signed(spec.n - v, spec.N - d));
  return h;
}

enum class Sparseness { distinct, sparse, two_sparse };

inline const char* sparseness_name(Sparseness s) {
  switch (s) {
    case Sparseness::distinct: return "distinct";
    case Sparseness::sparse: return "sparse";
    case Sparseness::two_sparse: return "two-sparse";
  }
  return "?";
}

/// Whether a multiset of coordinate values is duplicate-free (distinct),
/// additionally has all gaps >= 2 (sparse), or has no two values in the same
/// class floor(v/2) (2-sparse).
inline bool satisfies(Sparseness s, const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const int a = values[i], b = values[j];
      if (a == b) return false;
      if (s == Sparseness::sparse && std::abs(a - b) < 2) return false;
      if (s == Sparseness::two_sparse && a / 2 == b / 2) return false;
    }
  }
  return true;
}

/// prod_v (1 + c_v t).
inline CountingPolynomial distinct_enumerator(const OrderSimplexSpec& spec, int d) {
  auto h = value_histogram(spec, d);
  std::vector<Rational> c(h.counts.begin(), h.counts.end());
  return product_of_linear_factors(c);
}

/// E_v = E_{v-1} + c_v t E_{v-2} over v = 0..n.
inline CountingPolynomial sparse_enumerator(const OrderSimplexSpec& spec, int d) {
  auto h = value_histogram(spec, d);
  CountingPolynomial before_prev(Rational(1)), prev(Rational(1));
  for (const auto& c : h.counts) {
    CountingPolynomial next = prev + CountingPolynomial::monomial(Rational(c), 1) * before_prev;
    before_prev = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

/// prod over classes {2k, 2k+1} of (1 + (c_{2k} + c_{2k+1}) t).
inline CountingPolynomial two_sparse_enumerator(const OrderSimplexSpec& spec, int d) {
  auto h = value_histogram(spec, d);
  std::vector<Rational> classes;
  for (std::size_t v = 0; v < h.counts.size(); v += 2) {
    BigInt total = h.counts[v];
    if (v + 1 < h.counts.size()) total += h.counts[v + 1];
    classes.emplace_back(total);
  }
  return product_of_linear_factors(classes);
}

inline CountingPolynomial enumerator(const OrderSimplexSpec& spec, int d, Sparseness s) {
  switch (s) {
    case Sparseness::distinct: return distinct_enumerator(spec, d);
    case Sparseness::sparse: return sparse_enumerator(spec, d);
    case Sparseness::two_sparse: return two_sparse_enumerator(spec, d);
  }
  throw std::invalid_argument("unknown predicate");
}

inline constexpr long kBruteForcePointLimit = 512;

/// All points of S^N(n) in lexicographic order.
inline std::vector<std::vector<int>> simplex_points(const OrderSimplexSpec& spec) {
  spec.validate();
  std::vector<std::vector<int>> points;
  std::vector<int> tuple(static_cast<std::size_t>(spec.N));
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == spec.N) {
      points.push_back(tuple);
      return;
    }
    for (int v = lo; v <= spec.n - (spec.N - 1 - pos); ++v) {
      tuple[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return points;
}

/// Literal count of l-subsets (l <= l_max) of S^N(n) whose d-th coordinate
/// multiset satisfies the predicate. Every predicate is inherited by
/// subsets, so the walk extends only admissible subsets.
inline CountingPolynomial brute_force_enumerator(const OrderSimplexSpec& spec, int d, Sparseness s, int l_max) {
  spec.validate();
  if (d < 1 || d > spec.N) throw std::out_of_range("coordinate index outside 1..N");
  if (spec.point_count() > kBruteForcePointLimit) throw std::length_error("brute force size guard exceeded");
  const auto points = simplex_points(spec);
  std::vector<unsigned long long> counts(static_cast<std::size_t>(std::max(l_max, 0)) + 1, 0);
  counts[0] = 1;
  std::vector<int> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == l_max) return;
    for (std::size_t i = from; i < points.size(); ++i) {
      const int value = points[i][d - 1];
      // chosen already satisfies the predicate; only pairs with value are new
      bool admissible = std::all_of(chosen.begin(), chosen.end(), [&](int other) { return satisfies(s, {other, value}); });
      chosen.push_back(value);
      if (admissible) {
        ++counts[chosen.size()];
        extend(i + 1);
      }
      chosen.pop_back();
    }
  };
  extend(0);
  std::vector<Rational> coeffs;
  for (auto c : counts) coeffs.emplace_back(BigInt(static_cast<unsigned long>(c)));
  return CountingPolynomial(std::move(coeffs), Var::t);
}

/// Coefficient-wise comparison of two enumerators over l_min..l_max.
struct DominanceVerdict {
  CountingPolynomial larger;
  CountingPolynomial smaller;
  int l_min = 2;
  int l_max = 2;
  /// l with larger_l > smaller_l.
  std::vector<int> strict;
  /// l where both coefficients vanish: neither side has subsets that large.
  std::vector<int> vacuous;
  /// l where larger_l <= smaller_l with a nonzero side.
  std::vector<int> failed;
  /// The t^0 and t^1 coefficients agree.
  bool low_order_equal = false;
  bool holds = false;
};

inline DominanceVerdict compare_dominance(CountingPolynomial larger, CountingPolynomial smaller, int l_min,
                                          int l_max) {
  DominanceVerdict v;
  v.l_min = l_min;
  v.l_max = l_max;
  for (int l = l_min; l <= l_max; ++l) {
    const Rational a = larger.coeff(l), b = smaller.coeff(l);
    if (a > b) v.strict.push_back(l);
    else if (is_zero(a) && is_zero(b)) v.vacuous.push_back(l);
    else v.failed.push_back(l);
  }
  v.low_order_equal = larger.coeff(0) == smaller.coeff(0) && larger.coeff(1) == smaller.coeff(1);
  v.holds = v.failed.empty() && v.low_order_equal;
  v.larger = std::move(larger);
  v.smaller = std::move(smaller);
  return v;
}

/// Distinct y (x_2) beats distinct x (x_1) on S^3(n) for 2 <= l <= n-1.
inline DominanceVerdict check_thm1(int n) {
  if (n < 3) throw std::invalid_argument("check_thm1 needs n >= 3");
  const OrderSimplexSpec spec{3, n};
  return compare_dominance(distinct_enumerator(spec, 2), distinct_enumerator(spec, 1), 2, n - 1);
}

struct Thm2Verdict {
  CountingPolynomial sparse_y;
  CountingPolynomial two_sparse_x;
  /// sparse_y == two_sparse_x exactly.
  bool generating_functions_equal = false;
  /// sparse_y against sparse_x.
  DominanceVerdict dominance;
  bool holds = false;
};

inline Thm2Verdict check_thm2(int n) {
  if (n < 3) throw std::invalid_argument("check_thm2 needs n >= 3");
  const OrderSimplexSpec spec{3, n};
  Thm2Verdict v;
  v.sparse_y = sparse_enumerator(spec, 2);
  v.two_sparse_x = two_sparse_enumerator(spec, 1);
  v.generating_functions_equal = v.sparse_y == v.two_sparse_x;
  v.dominance = compare_dominance(v.sparse_y, sparse_enumerator(spec, 1), 2, n - 1);
  v.holds = v.generating_functions_equal && v.dominance.holds;
  return v;
}

/// Sparse x_3 beats 2-sparse x_1 on S^5(n) for 2 <= l <= n-3.
inline DominanceVerdict check_thm3(int n) {
  if (n < 5) throw std::invalid_argument("check_thm3 needs n >= 5");
  const OrderSimplexSpec spec{5, n};
  return compare_dominance(sparse_enumerator(spec, 3), two_sparse_enumerator(spec, 1), 2, n - 3);
}

/// Largest L with larger_l > smaller_l for every 2 <= l <= L; 1 when l = 2
/// already fails.
inline int dominance_prefix(const CountingPolynomial& larger, const CountingPolynomial& smaller) {
  int l = 2;
  while (larger.coeff(l) > smaller.coeff(l)) ++l;
  return l - 1;
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string coefficient_list(const CountingPolynomial& p) {
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) out += ",";
    out += to_string(p.coefficients()[k]);
  }
  return out;
}

/// Digest of the pair of coefficient vectors a row compares.
inline std::string comparison_digest(const CountingPolynomial& inner, const CountingPolynomial& outer) {
  return fnv1a_hex(coefficient_list(inner) + ";" + coefficient_list(outer));
}

struct ScanRow {
  int N = 0;
  int d = 0;
  int n = 0;
  /// d < N/2 - 1, the range the conjecture quantifies over.
  bool in_conjecture_range = false;
  /// Enumerator for x_{d+1} and for x_d.
  CountingPolynomial inner;
  CountingPolynomial outer;
  int dominance_prefix = 1;
  std::string digest;
};

inline bool in_conjecture_range(int N, int d) { return N > 2 && d >= 1 && 2 * d < N - 2; }

/// One cell: x_{d+1} against x_d on S^N(n).
inline ScanRow scan_cell(int N, int d, int n, Sparseness s) {
  const OrderSimplexSpec spec{N, n};
  check_default_guard(spec);
  if (d < 1 || d + 1 > N) throw std::out_of_range("scan needs 1 <= d < N");
  ScanRow row;
  row.N = N;
  row.d = d;
  row.n = n;
  row.in_conjecture_range = in_conjecture_range(N, d);
  row.inner = enumerator(spec, d + 1, s);
  row.outer = enumerator(spec, d, s);
  row.dominance_prefix = dominance_prefix(row.inner, row.outer);
  row.digest = comparison_digest(row.inner, row.outer);
  return row;
}

struct ScanBounds {
  int N_min = 3;
  int N_max = 3;
  int n_min = 3;
  int n_max = 3;
};

/// Cells (N, d, n) with N_min <= N <= N_max, 1 <= d <= floor((N-1)/2)
/// (x_{d+1} no farther out than the mirror of x_d) and max(N, n_min) <= n
/// <= n_max, in that lexicographic order. Workers take cells from a shared
/// counter; rows land in their fixed slots, so the output does not depend
/// on the number of jobs.
inline std::vector<ScanRow> conjecture_scan(const ScanBounds& bounds, Sparseness s, unsigned jobs = 1) {
  if (bounds.N_min <= 2) throw std::invalid_argument("conjecture scan needs N > 2");
  if (bounds.N_max > kMaxTupleLength || bounds.n_max > kMaxCoordinateBound)
    throw std::out_of_range("scan bounds exceed N <= 12, n <= 64");
  struct Cell {
    int N, d, n;
  };
  std::vector<Cell> cells;
  for (int N = bounds.N_min; N <= bounds.N_max; ++N)
    for (int d = 1; 2 * d <= N - 1; ++d)
      for (int n = std::max(N, bounds.n_min); n <= bounds.n_max; ++n) cells.push_back({N, d, n});

  std::vector<ScanRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < cells.size(); i = next++)
        rows[i] = scan_cell(cells[i].N, cells[i].d, cells[i].n, s);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace compsum
