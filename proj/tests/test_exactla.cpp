#include <doctest.h>

#include <stdexcept>

#include "lrpoly/matrix.hpp"
#include "lrpoly/polynomial.hpp"
#include "lrpoly/rational.hpp"

using namespace lrpoly;

TEST_CASE("rationals are canonical and exact") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(is_integer(Rational(5)));
  CHECK_FALSE(is_integer(make_rational(1, 3)));
  CHECK_THROWS_AS(to_int64(make_rational(1, 3)), std::domain_error);
}

TEST_CASE("rref") {
  const auto id = MatrixQ::identity(3);
  const auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 3);

  const MatrixQ zero(2, 4);
  CHECK(rref(zero).reduced == zero);
  CHECK(rref(zero).rank == 0);

  const auto m = MatrixQ::from_int_rows({{1, 0, 1}, {0, 1, 1}});
  CHECK(rank(m) == 2);
  CHECK(rref(m).pivots == std::vector<std::size_t>{0, 1});

  const auto dep = MatrixQ::from_int_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(dep) == 2);
  CHECK(determinant(dep) == 0);
  CHECK(determinant(MatrixQ::from_int_rows({{2, 1}, {1, 1}})) == 1);
}

TEST_CASE("null space and unique solve") {
  const auto m = MatrixQ::from_int_rows({{1, 1, 0}, {0, 1, 1}});
  const auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  for (const auto& v : ns) {
    const auto img = m.multiply(v);
    CHECK(img == std::vector<Rational>{0, 0});
  }
  const auto sq = MatrixQ::from_int_rows({{2, 1}, {1, 3}});
  const std::vector<Rational> rhs{3, 4};
  const auto x = solve_unique(sq, rhs);
  REQUIRE(x);
  CHECK(*x == std::vector<Rational>{1, 1});
}

TEST_CASE("nonnegative combinations") {
  const auto cols = MatrixQ::from_int_rows({{1, 0}, {0, 1}});
  const std::vector<Rational> t1{2, 3};
  const auto s = solve_nonneg_combination(cols, t1);
  REQUIRE(s);
  CHECK(*s == std::vector<Rational>{2, 3});
  const std::vector<Rational> t2{-1, 0};
  CHECK_FALSE(solve_nonneg_combination(cols, t2));

  // A point in a 2-cone spanned by three rays, needing a non-trivial subset.
  const auto three = MatrixQ::from_columns({{1, 0}, {1, 1}, {0, 1}});
  const std::vector<Rational> t3{1, 3};
  const auto s3 = solve_nonneg_combination(three, t3);
  REQUIRE(s3);
  CHECK(three.multiply(*s3) == t3);
  for (const auto& c : *s3) CHECK(c >= 0);

  const std::vector<Rational> bad{1};
  CHECK_THROWS_AS(solve_nonneg_combination(cols, bad), std::invalid_argument);
}

TEST_CASE("subsets are visited in lexicographic order") {
  std::vector<std::vector<std::size_t>> seen;
  for_each_subset(4, 2, [&](std::span<const std::size_t> s) {
    seen.emplace_back(s.begin(), s.end());
    return true;
  });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == std::vector<std::size_t>{0, 1});
  CHECK(seen.back() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("univariate interpolation") {
  const std::vector<std::pair<Rational, Rational>> line{{1, 2}, {2, 3}};
  CHECK(interpolate_univariate(line).to_string() == "N+1");
  const std::vector<std::pair<Rational, Rational>> flat{{0, 1}, {1, 1}, {2, 1}};
  CHECK(interpolate_univariate(flat) == UniPolyQ({Rational(1)}));
  const std::vector<std::pair<Rational, Rational>> quad{{1, 2}, {2, 5}, {3, 10}};
  const auto q = interpolate_univariate(quad);
  CHECK(q == UniPolyQ({Rational(1), Rational(0), Rational(1)}));
  CHECK(q.to_string() == "N^2+1");
  const std::vector<std::pair<Rational, Rational>> dup{{1, 2}, {1, 3}};
  CHECK_THROWS_AS(interpolate_univariate(dup), std::invalid_argument);
  CHECK(UniPolyQ().to_string() == "0");
}

TEST_CASE("multivariate fit") {
  std::vector<FitSample> constant;
  for (long i = 0; i < 3; ++i) constant.push_back({{Rational(i), Rational(2 * i)}, Rational(7)});
  const auto c = fit_poly(constant, 2, 0);
  REQUIRE(c);
  CHECK(c->to_string() == "7");

  // 1 + ν2 - ν3 over nine coordinates, sampled on 20 points.
  std::vector<std::string> names{"λ1", "λ2", "λ3", "μ1", "μ2", "μ3", "ν1", "ν2", "ν3"};
  std::vector<FitSample> samples;
  for (long s = 0; s < 20; ++s) {
    std::vector<Rational> p;
    for (long i = 0; i < 9; ++i) p.emplace_back((s * 7 + i * i * 3 + s * s * i) % 11);
    samples.push_back({p, 1 + p[7] - p[8]});
  }
  const auto lin = fit_poly(samples, names, 1);
  REQUIRE(lin);
  CHECK(lin->to_string() == "1 + ν2 - ν3");

  std::vector<FitSample> quad;
  for (long x = 0; x < 5; ++x) quad.push_back({{Rational(x)}, Rational(x * x)});
  CHECK_FALSE(fit_poly(quad, 1, 1));

  std::vector<FitSample> few{{{Rational(1), Rational(1)}, Rational(1)}};
  CHECK_THROWS_AS(fit_poly(few, 2, 1), UnderdeterminedFit);
}

TEST_CASE("multivariate arithmetic and substitution") {
  const auto x = MultiPolyQ::variable({"x", "y"}, 0);
  const auto y = MultiPolyQ::variable({"x", "y"}, 1);
  const auto p = x * x + y * Rational(3) + MultiPolyQ::constant({"x", "y"}, 1);
  const std::vector<long> at{2, 1};
  CHECK(p.evaluate(std::span<const long>(at)) == 8);
  CHECK(p.total_degree() == 2);
  const auto q = p.substitute({y, x});
  const std::vector<long> at2{1, 2};
  CHECK(q.evaluate(std::span<const long>(at2)) == 8);
  CHECK((p - p).is_zero());
  CHECK(graded_lex_monomials(2, 1).size() == 3);
  CHECK(graded_lex_monomials(3, 2).size() == 10);
}
