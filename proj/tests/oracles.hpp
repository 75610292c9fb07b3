#pragma once

// Slow, independent reference computations. Nothing here calls into the library.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::mpz_int;
using Mat = std::vector<std::vector<long long>>;

/// Invariant factors by repeated remainder elimination on a big-integer copy,
/// sorted into a divisibility chain by a final pairwise gcd/lcm pass.
inline std::vector<long long> invariant_factors(const Mat& input) {
  const size_t m = input.size(), n = m ? input[0].size() : 0;
  std::vector<std::vector<Big>> a(m, std::vector<Big>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = input[i][j];
  std::vector<Big> diag;
  for (size_t t = 0; t < m && t < n; ++t) {
    bool done = false;
    while (!done) {
      size_t pr = m, pc = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == m) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      done = true;
      for (size_t i = t + 1; i < m; ++i) {
        const Big q = a[i][t] / a[t][t];
        for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        done = done && a[i][t] == 0;
      }
      for (size_t j = t + 1; j < n; ++j) {
        const Big q = a[t][j] / a[t][t];
        for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        done = done && a[t][j] == 0;
      }
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      const Big g = boost::multiprecision::gcd(diag[i], diag[j]);
      const Big l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<long long> out;
  for (const auto& d : diag) out.push_back(static_cast<long long>(d));
  return out;
}

/// Fraction-free determinant.
inline Big bareiss_det(std::vector<std::vector<Big>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  Big prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void combinations(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(c);
    size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// gcd of all k x k minors, for k = 1..min(m, n).
inline std::vector<Big> determinantal_divisors(const Mat& a) {
  const size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<Big> out;
  for (size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<size_t>> rows, cols;
    combinations(m, k, rows);
    combinations(n, k, cols);
    Big g = 0;
    for (const auto& r : rows)
      for (const auto& c : cols) {
        std::vector<std::vector<Big>> sub(k, std::vector<Big>(k));
        for (size_t i = 0; i < k; ++i)
          for (size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        g = boost::multiprecision::gcd(g, bareiss_det(sub));
      }
    out.push_back(abs(g));
  }
  return out;
}

/// Invariant factors recovered from determinantal divisors: d_k = D_k / D_{k-1}.
inline std::vector<long long> invariant_factors_by_minors(const Mat& a) {
  std::vector<long long> out;
  Big prev = 1;
  for (const Big& D : determinantal_divisors(a)) {
    if (D == 0) break;
    out.push_back(static_cast<long long>(D / prev));
    prev = D;
  }
  return out;
}

/// Ax = b has an integer solution iff [A] and [A | b] have the same rank r and
/// the same gcd of r x r minors.
inline bool integer_solvable(const Mat& a, const std::vector<long long>& b) {
  Mat ab = a;
  for (size_t i = 0; i < ab.size(); ++i) ab[i].push_back(b[i]);
  const auto da = determinantal_divisors(a), dab = determinantal_divisors(ab);
  size_t ra = 0, rab = 0;
  while (ra < da.size() && da[ra] != 0) ++ra;
  while (rab < dab.size() && dab[rab] != 0) ++rab;
  if (ra != rab) return false;
  if (ra == 0) return true;
  return da[ra - 1] == dab[ra - 1];
}

/// Exhaustive search of the box [-bound, bound]^n.
inline std::optional<std::vector<long long>> box_search(const Mat& a, const std::vector<long long>& b, int bound) {
  const size_t n = a.empty() ? 0 : a[0].size();
  std::vector<long long> x(n, -bound);
  while (true) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) {
      long long s = 0;
      for (size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
      ok = s == b[i];
    }
    if (ok) return x;
    size_t j = 0;
    while (j < n && x[j] == bound) x[j++] = -bound;
    if (j == n) return std::nullopt;
    ++x[j];
  }
}

/// Simplicial complex rebuilt from maximal simplices with its own face
/// enumeration and boundary matrices.
struct Complex {
  std::vector<std::vector<std::vector<int>>> cells;  // cells[k], each sorted
  std::vector<std::map<std::vector<int>, size_t>> index;

  explicit Complex(const std::vector<std::vector<int>>& maximal) {
    std::set<std::vector<int>> all;
    for (auto s : maximal) {
      std::sort(s.begin(), s.end());
      const size_t n = s.size();
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> f;
        for (size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) f.push_back(s[i]);
        all.insert(f);
      }
    }
    for (const auto& f : all) {
      const size_t k = f.size() - 1;
      if (cells.size() <= k) cells.resize(k + 1), index.resize(k + 1);
      index[k][f] = cells[k].size();
      cells[k].push_back(f);
    }
  }

  size_t count(int k) const { return k >= 0 && static_cast<size_t>(k) < cells.size() ? cells[static_cast<size_t>(k)].size() : 0; }

  /// Rows indexed by (k-1)-cells, columns by k-cells.
  Mat boundary(int k) const {
    Mat d(count(k - 1), std::vector<long long>(count(k), 0));
    if (k <= 0) return d;
    for (size_t c = 0; c < count(k); ++c) {
      const auto& s = cells[static_cast<size_t>(k)][c];
      for (size_t i = 0; i < s.size(); ++i) {
        auto f = s;
        f.erase(f.begin() + static_cast<long>(i));
        d[index[static_cast<size_t>(k - 1)].at(f)][c] = i % 2 ? -1 : 1;
      }
    }
    return d;
  }
};

struct Homology {
  int rank = 0;
  std::vector<long long> torsion;
  bool operator==(const Homology&) const = default;
};

inline size_t rank_of(const std::vector<long long>& factors) { return factors.size(); }

inline Homology homology(const Complex& X, int k) {
  const auto dk = invariant_factors(X.boundary(k));
  const auto dk1 = invariant_factors(X.boundary(k + 1));
  Homology h;
  h.rank = static_cast<int>(X.count(k)) - static_cast<int>(k > 0 ? rank_of(dk) : 0) - static_cast<int>(rank_of(dk1));
  for (long long d : dk1)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

inline Mat transpose(const Mat& a) {
  const size_t m = a.size(), n = m ? a[0].size() : 0;
  Mat t(n, std::vector<long long>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

/// Size of the image of M : (Z/n)^cols -> (Z/n)^rows.
inline Big image_order_mod(const Mat& a, long long n) {
  Big out = 1;
  for (long long d : invariant_factors(a)) out *= n / std::gcd(d, n);
  return out;
}

/// |H^k(X; Z/n)| as |ker delta^k| / |im delta^{k-1}| counted over Z/n.
inline Big cohomology_order(const Complex& X, int k, long long n) {
  Big cochains = 1;
  for (size_t i = 0; i < X.count(k); ++i) cochains *= n;
  const Big im_next = X.count(k + 1) ? image_order_mod(transpose(X.boundary(k + 1)), n) : Big(1);
  const Big im_prev = k > 0 ? image_order_mod(transpose(X.boundary(k)), n) : Big(1);
  return cochains / im_next / im_prev;
}

/// Every delta f for f a Z/2 1-cochain, as bitmasks over the 2-cells.
inline std::set<std::uint64_t> z2_coboundaries(const Complex& X) {
  const Mat d2 = X.boundary(2);
  const size_t edges = X.count(1), tris = X.count(2);
  if (edges > 24 || tris > 64) throw std::length_error("z2_coboundaries: complex too large");
  std::set<std::uint64_t> out;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << edges); ++f) {
    std::uint64_t v = 0;
    for (size_t t = 0; t < tris; ++t) {
      long long s = 0;
      for (size_t e = 0; e < edges; ++e)
        if (f >> e & 1) s += d2[e][t];
      if (s & 1) v |= std::uint64_t{1} << t;
    }
    out.insert(v);
  }
  return out;
}

}  // namespace oracle
