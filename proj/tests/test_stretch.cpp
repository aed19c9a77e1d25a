#include <doctest.h>

#include <stdexcept>

#include "lrpoly/hive.hpp"
#include "lrpoly/stretch.hpp"
#include "oracles.hpp"

using namespace lrpoly;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("stretch_poly examples") {
  const auto r = stretch_poly(P("2,1"), P("2,1"), P("3,2,1"));
  CHECK(r.polynomial.to_string() == "N+1");
  CHECK(r.degree_bound == 3);
  CHECK(r.value_at_zero == 1);
  CHECK(r.coefficients_nonnegative);
  REQUIRE(r.verification.size() == 3);
  CHECK(r.verification[0].n == 5);
  for (const auto& v : r.verification) CHECK(v.expected == v.got);

  CHECK(stretch_poly(P("3,1"), P(""), P("3,1")).polynomial.to_string() == "1");
  CHECK(stretch_poly(P("2"), P("2"), P("1,1,1,1")).polynomial.is_zero());
  CHECK(stretch_poly(P("1"), P("1"), P("3")).polynomial.is_zero());
}

TEST_CASE("every method gives the same stretching polynomial") {
  const auto base = stretch_poly(P("3,2,1"), P("2,1,1"), P("4,3,2,1"));
  CHECK(base.degree_bound == 9);
  CHECK(base.polynomial.degree() <= 9);
  for (Method m : kAllMethods) CHECK(stretch_poly(P("3,2,1"), P("2,1,1"), P("4,3,2,1"), m).polynomial == base.polynomial);
}

TEST_CASE("stretching polynomial reproduces every sampled count") {
  const auto l = P("2,1,1"), m = P("2,1"), n = P("3,2,1,1");
  const auto r = stretch_poly(l, m, n);
  for (long N = 1; N <= 14; ++N)
    CHECK(r.polynomial(Rational(N)) == Rational(static_cast<unsigned long>(hive_count(l.scaled(N), m.scaled(N), n.scaled(N)))));
}

TEST_CASE("KTT report") {
  const auto r = check_ktt(P("2,1"), P("2,1"), P("3,2,1"));
  CHECK(r.p0_is_one);
  CHECK(r.coefficients_nonnegative);
  const auto t = check_ktt(P("4,2"), P(""), P("4,2"));
  CHECK(t.p0_is_one);
  CHECK(t.coefficients_nonnegative);
  CHECK_THROWS_AS(check_ktt(P("2"), P("2"), P("1,1,1,1")), std::domain_error);
  const auto j = to_json(r);
  CHECK(j["stretch"]["p0"] == "1");
}

TEST_CASE("linear identity for at most three parts") {
  CHECK(check_linear_k3(P("2,1"), P("2,1"), P("3,2,1")));
  CHECK(check_linear_k3(P("1"), P("1"), P("2")));
  CHECK(check_linear_k3(P("1"), P("1"), P("1,1")));
  CHECK_THROWS_AS(check_linear_k3(P("1,1,1,1"), P(""), P("1,1,1,1")), std::invalid_argument);
  CHECK_THROWS_AS(check_linear_k3(P("2"), P("2"), P("3,1,1")), std::domain_error);

  const auto box = oracle::partitions_in_box(3, 2);
  for (const auto& l : box)
    for (const auto& m : box)
      for (const auto& n : box)
        if (l.size() + m.size() == n.size() && hive_count(l, m, n) > 0) CHECK(check_linear_k3(l, m, n));
}

TEST_CASE("JSON uses exact rational strings") {
  const auto j = to_json(stretch_poly(P("3,2,1"), P("2,1,1"), P("4,3,2,1")));
  CHECK(j["polynomial"] == "1/2*N^2+3/2*N+1");
  CHECK(j["coefficients"] == nlohmann::ordered_json::array({"1", "3/2", "1/2"}));
  CHECK(j["p0"] == "1");
}
