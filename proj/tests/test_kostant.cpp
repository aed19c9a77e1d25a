#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lrpoly/kostant.hpp"
#include "lrpoly/rational.hpp"
#include "oracles.hpp"

using namespace lrpoly;

namespace {

// Primitive integer direction of a rational vector, sign fixed by the first
// nonzero entry.
std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer den = 1, g = 0;
  for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : v) {
    c *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  for (auto& c : v) c /= g;
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
  if (*first < 0)
    for (auto& c : v) c = -c;
  return v;
}

void for_each_box_point(std::size_t n, long hi, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> v(n, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

}  // namespace

TEST_CASE("kostant_count examples") {
  CHECK(kostant_count(std::vector<long>{0, 0, 0}) == 1);
  CHECK(kostant_count(std::vector<long>{1, 0, -1}) == 2);
  CHECK(kostant_count(std::vector<long>{-1, 1, 0}) == 0);
  CHECK_THROWS_AS(kostant_count(std::vector<long>{1, 0, 0}), std::invalid_argument);
  CHECK(kostant_count(3, Weight{make_rational(1, 2), 0, make_rational(-1, 2)}) == 0);
  CHECK(kostant_count(3, Weight{1, 0, -1}) == 2);
}

TEST_CASE("kostant_count matches the dynamic-programming oracle") {
  for (std::size_t n = 1; n <= 3; ++n)
    for_each_box_point(n, 6, [&](const std::vector<long>& v) {
      const auto x = from_simple_root_coords(v);
      CHECK(kostant_count(x) == oracle::kostant_dp(v));
    });
}

TEST_CASE("root matrix and unimodularity") {
  const auto m2 = build_root_matrix(2).matrix;
  // Columns ordered by (i, j): α1, α1 + α2, α2.
  CHECK(m2 == MatrixQ::from_int_rows({{1, 1, 0}, {0, 1, 1}}));
  CHECK(build_root_matrix(3).matrix.cols() == 6);
  for_each_subset(3, 2, [&](std::span<const std::size_t> s) {
    const auto d = determinant(m2.select_columns(s));
    CHECK((d == 0 || d == 1 || d == -1));
    return true;
  });
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_unimodular(build_root_matrix(n).matrix).unimodular);
  const auto bad = check_unimodular(MatrixQ::from_int_rows({{1, 0}, {0, 2}}));
  CHECK_FALSE(bad.unimodular);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(check_unimodular(MatrixQ::from_int_rows({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("wall normals contain every base-cone facet normal") {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::set<std::vector<Rational>> walls;
    for (const auto& h : wall_normals(n)) walls.insert(primitive(h));
    const auto all = wall_normals(n);
    for (const auto& h : all) {
      auto neg = h;
      for (auto& c : neg) c = -c;
      CHECK(std::find(all.begin(), all.end(), neg) != all.end());
    }
    const auto m = build_root_matrix(n).matrix;
    std::size_t bases = 0;
    for_each_subset(m.cols(), n, [&](std::span<const std::size_t> s) {
      const auto sub = m.select_columns(s);
      if (determinant(sub) == 0) return true;
      ++bases;
      // Facet normals of a simplicial cone: rows of the inverse.
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rational> e(n, 0);
        e[r] = 1;
        const auto row = solve_unique(sub.transpose(), e);
        REQUIRE(row);
        CHECK(walls.count(primitive(*row)) == 1);
      }
      return true;
    });
    CHECK(bases > 0);
  }
}

TEST_CASE("A1 and A2 chambers") {
  const auto c1 = kostant_chambers(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].polynomial.to_string() == "1");

  const auto c2 = kostant_chambers(2);
  REQUIRE(c2.size() == 2);
  for (const auto& c : c2) {
    // Classify by an interior point: K = min(v1, v2) + 1.
    const std::vector<long> below{3, 1}, above{1, 3};
    if (c.contains_interior(below)) {
      CHECK(c.polynomial.to_string() == "1 + v2");
    } else {
      CHECK(c.contains_interior(above));
      CHECK(c.polynomial.to_string() == "1 + v1");
    }
  }
  CHECK_THROWS_AS(kostant_chambers(4), std::invalid_argument);
}

TEST_CASE("chamber polynomials agree with kostant_count") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto chambers = kostant_chambers(n);
    for (const auto& c : chambers) CHECK(c.polynomial.total_degree() <= static_cast<int>(n * (n - 1) / 2));
    std::size_t interior_points = 0;
    for_each_box_point(n, 8, [&](const std::vector<long>& v) {
      const auto k = oracle::kostant_dp(v);
      for (const auto& c : chambers) {
        if (c.contains_interior(v)) ++interior_points;
        // Closed regions: adjacent polynomials coincide on shared faces.
        if (c.contains(v)) CHECK(c.polynomial.evaluate(std::span<const long>(v)) == Rational(static_cast<unsigned long>(k)));
      }
    });
    CHECK(interior_points > 0);
  }
}
