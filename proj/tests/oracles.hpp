#pragma once

// Independent reference implementations for the tests. None of these share
// code paths with the library counters they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "lrpoly/typea.hpp"

namespace oracle {

using Vec = std::vector<long>;

// φ_{M_{A_n}}(v) in simple-root coordinates by dynamic programming over the
// positive roots: ways[u] after processing root r counts the multisets using
// roots up to r that sum to u.
inline std::uint64_t kostant_dp(const Vec& v) {
  const std::size_t n = v.size();
  if (std::any_of(v.begin(), v.end(), [](long x) { return x < 0; })) return 0;
  std::map<Vec, std::uint64_t> ways{{Vec(n, 0), 1}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // root α_i + … + α_j
      std::map<Vec, std::uint64_t> next;
      for (const auto& [u, c] : ways) {
        Vec w = u;
        while (true) {
          bool fits = true;
          for (std::size_t t = 0; t < n; ++t) fits = fits && w[t] <= v[t];
          if (!fits) break;
          next[w] += c;
          for (std::size_t t = i; t <= j; ++t) ++w[t];
        }
      }
      ways = std::move(next);
    }
  const auto it = ways.find(v);
  return it == ways.end() ? 0 : it->second;
}

// Standard coordinates (sum 0) to simple-root coordinates.
inline Vec simple_coords(const Vec& x) {
  Vec v;
  long s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) v.push_back(s += x[i]);
  return v;
}

using Poly = std::map<Vec, std::int64_t>;  // exponent vector in k variables

// Schur polynomial s_λ(x_1..x_k) as a sum over semistandard tableaux.
inline Poly schur(const lrpoly::Partition& lambda, std::size_t k) {
  Poly out;
  if (lambda.length() > k) return out;
  std::vector<std::vector<long>> t;
  for (long r : lambda.parts()) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  Vec weight(k, 0);
  std::function<void(std::size_t)> go = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++out[weight];
      return;
    }
    const auto [r, c] = cells[idx];
    long lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (long v = lo; v <= static_cast<long>(k); ++v) {
      t[r][c] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      go(idx + 1);
      --weight[static_cast<std::size_t>(v - 1)];
    }
  };
  go(0);
  return out;
}

// c_{λμ}^ν from s_λ·s_μ = Σ c s_ν, peeling off the lexicographically largest
// monomial, which is always the leading term of some s_ν.
inline std::int64_t lr_schur(const lrpoly::Partition& lambda, const lrpoly::Partition& mu,
                             const lrpoly::Partition& nu, std::size_t k) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const Poly a = schur(lambda, k), b = schur(mu, k);
  Poly f;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Vec e(k);
      for (std::size_t i = 0; i < k; ++i) e[i] = ea[i] + eb[i];
      f[e] += ca * cb;
    }
  while (true) {
    std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
    if (f.empty()) return 0;
    const auto lead = std::prev(f.end());
    const Vec shape = lead->first;
    const std::int64_t c = lead->second;
    const lrpoly::Partition p(shape);
    if (p == nu) return c;
    for (const auto& [e, cs] : schur(p, k)) f[e] -= c * cs;
  }
}

// Every integer assignment of the interior hive entries in [0, |ν|], checked
// against all rhombus inequalities written out directly.
inline std::uint64_t hive_brute(const lrpoly::Partition& lambda, const lrpoly::Partition& mu,
                                const lrpoly::Partition& nu, std::size_t k) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  std::vector<std::vector<long>> a(k + 1, std::vector<long>(k + 1, -1));
  const auto l = lambda.padded(k), m = mu.padded(k), n = nu.padded(k);
  a[0][0] = 0;
  for (std::size_t j = 1; j <= k; ++j) a[0][j] = a[0][j - 1] + l[j - 1];
  for (std::size_t i = 1; i <= k; ++i) a[i][0] = a[i - 1][0] + n[i - 1];
  for (std::size_t i = 1; i < k; ++i) a[i][k - i] = a[i - 1][k - i + 1] + m[i - 1];
  std::vector<std::pair<std::size_t, std::size_t>> inner;
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; i + j < k; ++j) inner.emplace_back(i, j);
  const long top = nu.size();
  const auto ok = [&] {
    for (std::size_t i = 0; i + 2 <= k; ++i)
      for (std::size_t j = 0; i + j + 2 <= k; ++j) {
        if (a[i + 1][j] + a[i][j + 1] < a[i][j] + a[i + 1][j + 1]) return false;
        if (a[i][j + 1] + a[i + 1][j + 1] < a[i + 1][j] + a[i][j + 2]) return false;
        if (a[i + 1][j] + a[i + 1][j + 1] < a[i + 2][j] + a[i][j + 1]) return false;
      }
    return true;
  };
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t idx) {
    if (idx == inner.size()) {
      count += ok();
      return;
    }
    for (long v = 0; v <= top; ++v) {
      a[inner[idx].first][inner[idx].second] = v;
      go(idx + 1);
    }
  };
  go(0);
  return count;
}

// All partitions with at most `len` parts, each <= `max_part`.
inline std::vector<lrpoly::Partition> partitions_in_box(std::size_t len, long max_part) {
  std::vector<lrpoly::Partition> out;
  std::vector<long> cur;
  std::function<void(long)> go = [&](long cap) {
    if (cur.size() == len) {
      out.emplace_back(cur);
      return;
    }
    for (long v = 0; v <= cap; ++v) {
      cur.push_back(v);
      go(v);
      cur.pop_back();
    }
  };
  go(max_part);
  return out;
}

}  // namespace oracle
