#include "lrpoly/kostant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "lrpoly/random.hpp"

namespace lrpoly {

namespace {

std::uint64_t count_from(std::vector<long>& v, std::size_t i);

// Spreads `remaining` over the roots e_i - e_j, j = next..k-1, adding each
// multiplicity to v[j]; the last root takes whatever is left.
std::uint64_t distribute(std::vector<long>& v, std::size_t i, std::size_t next, long remaining) {
  const std::size_t k = v.size();
  if (next + 1 == k) {
    v[next] += remaining;
    const std::uint64_t c = count_from(v, i + 1);
    v[next] -= remaining;
    return c;
  }
  std::uint64_t total = 0;
  for (long m = 0; m <= remaining; ++m) {
    v[next] += m;
    total += distribute(v, i, next + 1, remaining - m);
    v[next] -= m;
  }
  return total;
}

// Counts decompositions of the residual v[i..] using roots e_a - e_b, a >= i.
std::uint64_t count_from(std::vector<long>& v, std::size_t i) {
  const std::size_t rest = v.size() - i;
  // Every partial sum of a nonnegative combination of positive roots is >= 0.
  long partial = 0;
  for (std::size_t c = i; c + 1 < v.size(); ++c) {
    partial += v[c];
    if (partial < 0) return 0;
  }
  if (rest <= 2) return 1;
  if (rest == 3) {
    // A_2 in simple-root coordinates (a, a+b): min + 1.
    const long a = v[i];
    const long ab = v[i] + v[i + 1];
    return static_cast<std::uint64_t>(std::min(a, ab)) + 1;
  }
  return distribute(v, i, i + 1, v[i]);
}

}  // namespace

std::uint64_t kostant_count(std::span<const long> v) {
  if (std::accumulate(v.begin(), v.end(), 0L) != 0)
    throw std::invalid_argument("kostant_count: coordinates must sum to zero");
  if (v.empty()) return 1;
  std::vector<long> work(v.begin(), v.end());
  return count_from(work, 0);
}

std::uint64_t kostant_count(std::size_t k, const Weight& v) {
  if (v.size() != k) throw std::invalid_argument("kostant_count: weight length != k");
  Rational sum = 0;
  for (const auto& c : v) sum += c;
  if (sgn(sum) != 0) throw std::invalid_argument("kostant_count: coordinates must sum to zero");
  std::vector<long> ints;
  for (const auto& c : v) {
    if (!is_integer(c)) return 0;
    ints.push_back(to_int64(c));
  }
  return kostant_count(ints);
}

RootMatrix build_root_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_root_matrix: n >= 1 required");
  RootMatrix rm{n, MatrixQ(n, n * (n + 1) / 2)};
  std::size_t col = 0;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j, ++col)
      // e_i - e_j = α_i + … + α_{j-1}
      for (std::size_t r = i; r < j; ++r) rm.matrix(r, col) = 1;
  return rm;
}

UnimodularityReport check_unimodular(const MatrixQ& m) {
  if (rank(m) != m.rows()) throw std::invalid_argument("check_unimodular: matrix is not of full row rank");
  UnimodularityReport report;
  for_each_subset(m.cols(), m.rows(), [&](std::span<const std::size_t> cols) {
    const Rational det = determinant(m.select_columns(cols));
    if (sgn(det) != 0 && abs(det) != 1) {
      report.unimodular = false;
      report.witness = std::vector<std::size_t>(cols.begin(), cols.end());
      return false;
    }
    return true;
  });
  return report;
}

std::vector<std::vector<Rational>> wall_normals(std::size_t n) {
  std::vector<std::vector<Rational>> out;
  for (const Weight& w : conjugates_of_fundamental_weights(n + 1)) {
    std::vector<Rational> normal;
    for (std::size_t i = 0; i < n; ++i) normal.push_back(w[i] - w[i + 1]);
    out.push_back(std::move(normal));
  }
  return out;
}

std::vector<long> from_simple_root_coords(std::span<const long> v) {
  std::vector<long> w(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] += v[i];
    w[i + 1] -= v[i];
  }
  return w;
}

namespace {

long dot(std::span<const long> a, std::span<const long> b) {
  long acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Integer multiple of a rational vector with coprime entries.
std::vector<long> primitive(const std::vector<Rational>& v) {
  Integer lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : v) {
    ints.push_back(c.get_num() * (lcm_den / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<long> out;
  for (const auto& x : ints) out.push_back(g == 0 ? 0 : Integer(x / g).get_si());
  return out;
}

// First nonzero entry made positive.
std::vector<long> orient(std::vector<long> v) {
  for (long c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

std::vector<std::vector<long>> hyperplanes_for(std::size_t n) {
  std::set<std::vector<long>> planes;
  for (const auto& normal : wall_normals(n)) planes.insert(orient(primitive(normal)));
  return {planes.begin(), planes.end()};
}

std::vector<std::vector<long>> candidate_rays(std::size_t n, const std::vector<std::vector<long>>& planes) {
  if (n == 1) return {{1}};
  std::set<std::vector<long>> rays;
  for_each_subset(planes.size(), n - 1, [&](std::span<const std::size_t> subset) {
    std::vector<std::vector<long>> rows;
    for (std::size_t idx : subset) rows.push_back(planes[idx]);
    const auto kernel = null_space(MatrixQ::from_int_rows(rows));
    if (kernel.size() != 1) return true;
    const auto r = primitive(kernel.front());
    for (int sign : {1, -1}) {
      std::vector<long> candidate = r;
      for (auto& x : candidate) x *= sign;
      if (std::all_of(candidate.begin(), candidate.end(), [](long x) { return x >= 0; })) rays.insert(candidate);
    }
    return true;
  });
  return {rays.begin(), rays.end()};
}

std::vector<int> sign_vector(const std::vector<std::vector<long>>& planes, std::span<const long> p) {
  std::vector<int> s;
  for (const auto& h : planes) {
    const long d = dot(h, p);
    s.push_back(d > 0 ? 1 : (d < 0 ? -1 : 0));
  }
  return s;
}

unsigned binomial2(std::size_t n) { return static_cast<unsigned>(n * (n - 1) / 2); }

MultiPolyQ fit_region(std::size_t n, const std::vector<std::vector<long>>& gens, Rng& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  const unsigned degree = binomial2(n);
  const std::size_t monomials = graded_lex_monomials(n, degree).size();

  std::vector<FitSample> samples;
  auto add_sample = [&](const std::vector<long>& coeffs) {
    std::vector<long> point(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < n; ++i) point[i] += coeffs[g] * gens[g][i];
    const auto value = kostant_count(from_simple_root_coords(point));
    samples.push_back({to_rationals(point), Rational(static_cast<unsigned long>(value))});
  };
  for (long m = 1; m <= 3; ++m) add_sample(std::vector<long>(gens.size(), m));

  for (int attempt = 0; attempt < 8; ++attempt) {
    while (samples.size() < (2 + static_cast<std::size_t>(attempt)) * monomials + 4) {
      std::vector<long> coeffs(gens.size());
      for (auto& c : coeffs) c = rng.uniform(1, 4);
      add_sample(coeffs);
    }
    try {
      const auto fit = fit_poly(samples, names, degree);
      if (!fit) throw std::runtime_error("kostant_chambers: region samples are not polynomial of degree " +
                                         std::to_string(degree));
      return *fit;
    } catch (const UnderdeterminedFit&) {
      // more samples next round
    }
  }
  throw std::runtime_error("kostant_chambers: could not determine region polynomial");
}

}  // namespace

bool ChamberPoly::contains(std::span<const long> v) const {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const auto& h) { return dot(h, v) >= 0; });
}

bool ChamberPoly::contains_interior(std::span<const long> v) const {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const auto& h) { return dot(h, v) > 0; });
}

std::vector<ChamberPoly> kostant_chambers(std::size_t n) {
  if (n < 1 || n > 3) throw std::invalid_argument("kostant_chambers: n must be 1, 2 or 3");
  const auto planes = hyperplanes_for(n);
  const auto rays = candidate_rays(n, planes);

  // Each full-dimensional region contains the sum of n independent rays of
  // its closure in its interior, so these sums reach every region.
  std::set<std::vector<int>> regions;
  for_each_subset(rays.size(), n, [&](std::span<const std::size_t> subset) {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t idx : subset) cols.push_back(to_rationals(rays[idx]));
    if (sgn(determinant(MatrixQ::from_columns(cols))) == 0) return true;
    std::vector<long> p(n, 0);
    for (std::size_t idx : subset)
      for (std::size_t i = 0; i < n; ++i) p[i] += rays[idx][i];
    const auto s = sign_vector(planes, p);
    if (std::find(s.begin(), s.end(), 0) == s.end()) regions.insert(s);
    return true;
  });

  Rng rng(Rng::kDefaultSeed + n);
  std::vector<ChamberPoly> out;
  for (const auto& s : regions) {
    ChamberPoly region;
    for (std::size_t h = 0; h < planes.size(); ++h) {
      std::vector<long> oriented = planes[h];
      for (auto& x : oriented) x *= s[h];
      region.inequalities.push_back(std::move(oriented));
    }
    for (const auto& r : rays)
      if (region.contains(r)) region.generators.push_back(r);
    region.polynomial = fit_region(n, region.generators, rng);
    out.push_back(std::move(region));
  }
  return out;
}

}  // namespace lrpoly
