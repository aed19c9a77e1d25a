#include <doctest.h>

#include <stdexcept>

#include "lrpoly/hive.hpp"
#include "lrpoly/lr3.hpp"
#include "lrpoly/random.hpp"
#include "lrpoly/steinberg.hpp"
#include "oracles.hpp"

using namespace lrpoly;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

Partition random_partition(Rng& rng, std::size_t len, long max_part) {
  std::vector<long> parts(len);
  for (auto& p : parts) p = rng.uniform(0, max_part);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

// A generic lattice point inside the given k=3 cone.
Triple generic_point_in(const ConeK3& cone, Rng& rng) {
  while (true) {
    PointK3 p{};
    for (const auto& g : cone.generators) {
      const long c = rng.uniform(2, 6);
      for (std::size_t i = 0; i < 9; ++i) p[i] += c * load_k3().ray(g).coords[i];
    }
    const Triple t = Triple::from_coordinates(std::span<const long>(p.data(), 9), 3);
    if (is_generic(t.lambda, t.mu, t.nu, 3)) return t;
  }
}

}  // namespace

TEST_CASE("steinberg_count examples") {
  CHECK(steinberg_count(P("1"), P("1"), P("2"), 2) == 1);
  CHECK(steinberg_count(P("1"), P("1"), P("1,1"), 2) == 1);
  CHECK(steinberg_count(P("3,1"), P(""), P("3,1"), 2) == 1);
  CHECK(steinberg_count(P("2,1"), P("2,1"), P("3,2,1"), 3) == 2);
  CHECK(steinberg_count(P("1"), P("1"), P("3"), 2) == 0);
  CHECK_THROWS_AS(steinberg_count(P("1,1,1"), P(""), P("1,1,1"), 2), std::invalid_argument);
}

TEST_CASE("steinberg_count agrees with hives and the Schur oracle, k <= 3") {
  const auto box = oracle::partitions_in_box(3, 3);
  for (const auto& l : box)
    for (const auto& m : box)
      for (const auto& n : box) {
        if (l.size() + m.size() != n.size()) continue;
        const auto s = steinberg_count(l, m, n, 3);
        CHECK(s == static_cast<std::int64_t>(hive_count(l, m, n)));
        CHECK(s == oracle::lr_schur(l, m, n, 3));
      }
}

TEST_CASE("GL and barred SL weights give the same sum") {
  Rng rng(5);
  std::size_t checked = 0;
  while (checked < 50) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto l = random_partition(rng, k, 4), m = random_partition(rng, k, 4), n = random_partition(rng, k, 8);
    if (l.size() + m.size() != n.size()) continue;
    ++checked;
    CHECK(steinberg_count(l, m, n, k) == steinberg_count_barred(l, m, n, k));
  }
}

TEST_CASE("hyperplanes") {
  const auto id = Permutation::identity(3);
  for (const auto& th : all_permutations(3))
    for (std::size_t j = 1; j < 3; ++j) CHECK(delta_shift(id, id, th, j) == 0);

  const auto id2 = Permutation::identity(2);
  const auto h = steinberg_hyperplane(id2, id2, id2, 1);
  for (const auto& c : h.normal) CHECK((c == 0 || c == make_rational(1, 2) || c == make_rational(-1, 2)));
  const auto h2 = enumerate_hyperplanes(2);
  CHECK(h2.size() == 4);
  CHECK_FALSE(h2.empty());

  // Normals vanish on (1..1 | 1..1 | -1..-1) and the δ-shift is bounded.
  const Rational bound = max_delta_shift(3);
  for (const auto& p : enumerate_hyperplanes(3)) {
    Rational s = 0;
    for (std::size_t i = 0; i < 9; ++i) s += (i < 6 ? 1 : -1) * p.normal[i];
    CHECK(s == 0);
    CHECK(p.normal[std::find_if(p.normal.begin(), p.normal.end(), [](const Rational& c) { return c != 0; }) -
                   p.normal.begin()] > 0);
  }
  CHECK(bound == 4);
  for (const auto& s : all_permutations(3))
    for (const auto& t : all_permutations(3))
      for (const auto& th : all_permutations(3))
        for (std::size_t j = 1; j < 3; ++j) CHECK(abs(delta_shift(s, t, th, j)) <= bound);
  CHECK(enumerate_hyperplanes(3).size() == 27);
  CHECK_THROWS_AS(steinberg_hyperplane(id, id, id, 3), std::invalid_argument);
}

TEST_CASE("genericity and type signatures") {
  CHECK_FALSE(is_generic(P(""), P(""), P(""), 2));
  CHECK_THROWS_AS(type_signature(P(""), P(""), P(""), 2), std::domain_error);
  CHECK_FALSE(is_generic(P("2,1"), P("2,1"), P("3,2,1"), 3));
  // Regression pin, from direct evaluation of the 36·6 pairings.
  CHECK_FALSE(is_generic(P("4,1"), P("3,1"), P("5,3,1"), 3));

  const Triple t{P("5,2"), P("7,3"), P("9,6,2")};
  REQUIRE(is_generic(t.lambda, t.mu, t.nu, 3));
  const auto sig = type_signature(t.lambda, t.mu, t.nu, 3);
  CHECK(sig.signs.size() == 36 * 6);
  for (auto s : sig.signs) CHECK((s == 1 || s == -1));
  CHECK(sig.digest().size() == 16);

  for (long n = 2; n <= 4; ++n) {
    const auto scaled = t.scaled(n);
    CHECK(type_signature(scaled.lambda, scaled.mu, scaled.nu, 3) == sig);
  }
  const auto swapped = type_signature(t.mu, t.lambda, t.nu, 3);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t w = 0; w < 6; ++w) CHECK(swapped.at(b, a, w) == sig.at(a, b, w));
}

TEST_CASE("region polynomials") {
  Rng rng(3);
  const ConeK3& k2 = load_k3().cone("κ2");
  const Triple seed = generic_point_in(k2, rng);
  const auto fit = verify_region_polynomial(seed, 3, 40);
  CHECK(fit.verified);
  CHECK(fit.held_out > 0);
  CHECK(fit.polynomial.total_degree() <= 1);
  CHECK(reduce_on_sum_hyperplane(fit.polynomial, 3) == reduce_on_sum_hyperplane(k2.polynomial, 3));
  CHECK(reduce_on_sum_hyperplane(assemble_type_polynomial(seed, 3), 3) ==
        reduce_on_sum_hyperplane(k2.polynomial, 3));

  const Triple two{P("7,2"), P("5,1"), P("9,6")};
  REQUIRE(is_generic(two.lambda, two.mu, two.nu, 2));
  const auto fit2 = verify_region_polynomial(two, 2, 12);
  CHECK(fit2.verified);
  CHECK(fit2.polynomial.total_degree() == 0);
  CHECK(reduce_on_sum_hyperplane(assemble_type_polynomial(two, 2), 2) == fit2.polynomial);

  CHECK_THROWS_AS(verify_region_polynomial(Triple{P("2,1"), P("2,1"), P("3,2,1")}, 3, 10), std::domain_error);
}

TEST_CASE("assembled type polynomial at k = 4 matches counts in its region") {
  const Triple t{P("25,17,10,3"), P("25,9,8,3"), P("40,25,24,11")};
  REQUIRE(is_generic(t.lambda, t.mu, t.nu, 4));
  const auto sig = type_signature(t.lambda, t.mu, t.nu, 4);
  const auto poly = assemble_type_polynomial(t, 4);
  CHECK(poly.total_degree() <= 3);
  for (long n = 1; n <= 3; ++n) {
    const Triple s = t.scaled(n);
    if (!is_generic(s.lambda, s.mu, s.nu, 4) || !(type_signature(s.lambda, s.mu, s.nu, 4) == sig)) continue;
    const auto coords = s.coordinates(4);
    CHECK(poly.evaluate(std::span<const long>(coords)) ==
          Rational(static_cast<unsigned long>(hive_count(s.lambda, s.mu, s.nu))));
  }
  const auto coords = t.coordinates(4);
  CHECK(poly.evaluate(std::span<const long>(coords)) == 20);
}
