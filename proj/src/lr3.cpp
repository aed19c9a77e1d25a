#include "lrpoly/lr3.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lrpoly/hive.hpp"
#include "lrpoly/matrix.hpp"
#include "lrpoly/steinberg.hpp"
#include "lrpoly/triple.hpp"

namespace lrpoly {

namespace {

struct ConeRow {
  const char* name;
  std::array<const char*, 5> extra;  // besides a1, a2, b
  std::array<int, 9> linear;         // polynomial = 1 + linear·(λ|μ|ν)
};

// κ13 and κ14 carry ν1 where the usual tabulation has ν3; those forms
// give 0 at ray b, where the coefficient is 2. See tabulated_k3_polynomial.
// clang-format off
const std::array<RayK3, 11> kRays{{
    {"a1", {1, 1, 1, 0, 0, 0, 1, 1, 1}},
    {"a2", {0, 0, 0, 1, 1, 1, 1, 1, 1}},
    {"b",  {2, 1, 0, 2, 1, 0, 3, 2, 1}},
    {"c",  {1, 1, 0, 1, 1, 0, 2, 1, 1}},
    {"d1", {1, 1, 0, 1, 0, 0, 1, 1, 1}},
    {"d2", {1, 0, 0, 1, 1, 0, 1, 1, 1}},
    {"e1", {1, 1, 0, 0, 0, 0, 1, 1, 0}},
    {"e2", {0, 0, 0, 1, 1, 0, 1, 1, 0}},
    {"f",  {1, 0, 0, 1, 0, 0, 1, 1, 0}},
    {"g1", {1, 0, 0, 0, 0, 0, 1, 0, 0}},
    {"g2", {0, 0, 0, 1, 0, 0, 1, 0, 0}},
}};

const std::array<ConeRow, 18> kCones{{
    {"κ1",  {"c", "d1", "d2", "e1", "e2"}, {0, -1, 0, 0, -1, 0, 1, 0, 0}},
    {"κ2",  {"c", "d1", "d2", "g1", "g2"}, {0, 0, 0, 0, 0, 0, 0, 1, -1}},
    {"κ3",  {"c", "e1", "e2", "g1", "g2"}, {1, 0, 0, 1, 0, 0, -1, 0, 0}},
    {"κ4",  {"d1", "d2", "e1", "e2", "f"}, {0, 0, 0, 0, 0, 0, 1, -1, 0}},
    {"κ5",  {"d1", "d2", "f", "g1", "g2"}, {0, 1, 0, 0, 1, 0, 0, 0, -1}},
    {"κ6",  {"e1", "e2", "f", "g1", "g2"}, {0, 0, -1, 0, 0, -1, 0, 0, 1}},
    {"κ7",  {"c", "d1", "d2", "e1", "g1"}, {0, 0, 1, 1, 0, 0, 0, 0, -1}},
    {"κ8",  {"c", "d1", "d2", "e2", "g2"}, {1, 0, 0, 0, 0, 1, 0, 0, -1}},
    {"κ9",  {"c", "d1", "e1", "e2", "g2"}, {1, -1, 0, 0, 0, 0, 0, 0, 0}},
    {"κ10", {"c", "d2", "e1", "e2", "g1"}, {0, 0, 0, 1, -1, 0, 0, 0, 0}},
    {"κ11", {"c", "d1", "e1", "g1", "g2"}, {0, -1, 0, 0, 0, -1, 0, 1, 0}},
    {"κ12", {"c", "d2", "e2", "g1", "g2"}, {0, 0, -1, 0, -1, 0, 0, 1, 0}},
    {"κ13", {"d1", "d2", "e1", "f", "g1"}, {-1, 0, 0, 0, 0, -1, 1, 0, 0}},
    {"κ14", {"d1", "d2", "e2", "f", "g2"}, {0, 0, -1, -1, 0, 0, 1, 0, 0}},
    {"κ15", {"d1", "e1", "f", "g1", "g2"}, {0, 0, 0, 0, 1, -1, 0, 0, 0}},
    {"κ16", {"d2", "e2", "f", "g1", "g2"}, {0, 1, -1, 0, 0, 0, 0, 0, 0}},
    {"κ17", {"d1", "e1", "e2", "f", "g2"}, {1, 0, 0, 0, 1, 0, 0, -1, 0}},
    {"κ18", {"d2", "e1", "e2", "f", "g1"}, {0, 1, 0, 1, 0, 0, 0, -1, 0}},
}};
// clang-format on

bool sums_match(const PointK3& p) { return p[0] + p[1] + p[2] + p[3] + p[4] + p[5] == p[6] + p[7] + p[8]; }

void check_loaded(const ComplexK3& c) {
  for (const auto& r : c.rays)
    if (!sums_match(r.coords)) throw std::logic_error("ray " + r.name + " violates |λ|+|μ|=|ν|");
  const Exponents zero(9, 0);
  for (const auto& cone : c.cones) {
    if (cone.generators.size() != 8) throw std::logic_error(cone.name + " must have 8 generators");
    for (const auto& g : cone.generators) (void)c.ray(g);
    if (cone.polynomial.total_degree() > 1 || cone.polynomial.coefficient(zero) != 1)
      throw std::logic_error(cone.name + " polynomial is not affine with constant term 1");
    for (const auto& [e, coeff] : cone.polynomial.terms())
      if (!is_integer(coeff)) throw std::logic_error(cone.name + " polynomial has a non-integer coefficient");
  }
}

Triple to_triple(const PointK3& p) { return Triple::from_coordinates(std::span<const long>(p.data(), 9), 3); }

std::vector<Rational> to_rational_point(const PointK3& p) { return {p.begin(), p.end()}; }

PointK3 add(PointK3 a, const PointK3& b, long scale = 1) {
  for (std::size_t i = 0; i < 9; ++i) a[i] += scale * b[i];
  return a;
}

}  // namespace

const RayK3& ComplexK3::ray(const std::string& name) const {
  for (const auto& r : rays)
    if (r.name == name) return r;
  throw std::out_of_range("unknown ray " + name);
}

const ConeK3& ComplexK3::cone(const std::string& name) const {
  for (const auto& c : cones)
    if (c.name == name) return c;
  throw std::out_of_range("unknown cone " + name);
}

const ComplexK3& load_k3() {
  static const ComplexK3 complex = [] {
    ComplexK3 c;
    c.rays.assign(kRays.begin(), kRays.end());
    const auto names = triple_variable_names(3);
    for (const auto& row : kCones) {
      ConeK3 cone{row.name, {"a1", "a2", "b"}, MultiPolyQ::constant(names, 1)};
      for (const char* g : row.extra) cone.generators.emplace_back(g);
      for (std::size_t i = 0; i < 9; ++i)
        if (row.linear[i] != 0) cone.polynomial += MultiPolyQ::variable(names, i) * Rational(row.linear[i]);
      c.cones.push_back(std::move(cone));
    }
    check_loaded(c);
    return c;
  }();
  return complex;
}

MultiPolyQ tabulated_k3_polynomial(const std::string& cone) {
  const auto names = triple_variable_names(3);
  const auto v = [&](std::size_t i) { return MultiPolyQ::variable(names, i); };
  if (cone == "κ13") return MultiPolyQ::constant(names, 1) - v(0) - v(5) + v(8);
  if (cone == "κ14") return MultiPolyQ::constant(names, 1) - v(2) - v(3) + v(8);
  return load_k3().cone(cone).polynomial;
}

bool in_containment_cone(const PointK3& p) {
  for (std::size_t i = 0; i < 3; ++i)
    if (p[i] > p[6 + i] || p[3 + i] > p[6 + i]) return false;
  return sums_match(p);
}

bool in_partition_cone(const PointK3& p) {
  for (std::size_t b = 0; b < 3; ++b) {
    if (p[3 * b + 2] < 0) return false;
    if (p[3 * b] < p[3 * b + 1] || p[3 * b + 1] < p[3 * b + 2]) return false;
  }
  return true;
}

bool membership(const PointK3& p, const ConeK3& cone) {
  if (!sums_match(p)) throw std::invalid_argument("membership: |λ|+|μ| != |ν|");
  if (!in_containment_cone(p) || !in_partition_cone(p)) return false;
  const ComplexK3& c = load_k3();
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : cone.generators) cols.push_back(to_rational_point(c.ray(g).coords));
  const auto target = to_rational_point(p);
  return solve_nonneg_combination(MatrixQ::from_columns(cols), target).has_value();
}

std::vector<std::string> locate(const PointK3& p) {
  std::vector<std::string> out;
  for (const auto& cone : load_k3().cones)
    if (membership(p, cone)) out.push_back(cone.name);
  return out;
}

PointK3 generator_sum(const ConeK3& cone) {
  PointK3 s{};
  for (const auto& g : cone.generators) s = add(s, load_k3().ray(g).coords);
  return s;
}

ConeVerification verify_cone(const ConeK3& cone, std::size_t samples, std::uint64_t seed) {
  const ComplexK3& complex = load_k3();
  Rng rng(seed);
  ConeVerification v{cone.name, 0, true, {}};
  for (std::size_t s = 0; s < samples; ++s) {
    PointK3 p = generator_sum(cone);
    if (s > 0) {
      p.fill(0);
      for (const auto& g : cone.generators) p = add(p, complex.ray(g).coords, rng.uniform(1, 5));
    }
    const Triple t = to_triple(p);
    const std::uint64_t hive = hive_count(t.lambda, t.mu, t.nu);
    const std::int64_t st = steinberg_count(t.lambda, t.mu, t.nu, 3);
    const auto point = to_rational_point(p);
    ++v.samples;
    for (const auto& name : locate(p)) {
      const ConeK3& other = complex.cone(name);
      const Rational value = other.polynomial.evaluate(point);
      if (value != Rational(static_cast<unsigned long>(hive)) || static_cast<std::int64_t>(hive) != st) {
        v.pass = false;
        v.counterexamples.push_back({p, name, value, hive, st});
      }
    }
    if (!membership(p, cone)) {
      v.pass = false;
      v.counterexamples.push_back({p, cone.name, cone.polynomial.evaluate(point), hive, st});
    }
  }
  return v;
}

std::string swap_partner(const RayK3& ray) {
  PointK3 swapped = ray.coords;
  std::swap_ranges(swapped.begin(), swapped.begin() + 3, swapped.begin() + 3);
  for (const auto& r : load_k3().rays)
    if (r.coords == swapped) return r.name;
  throw std::logic_error("ray set not closed under λ↔μ");
}

const ConeK3& swap_partner(const ConeK3& cone) {
  const ComplexK3& c = load_k3();
  std::set<std::string> target;
  for (const auto& g : cone.generators) target.insert(swap_partner(c.ray(g)));
  for (const auto& other : c.cones)
    if (std::set<std::string>(other.generators.begin(), other.generators.end()) == target) return other;
  throw std::logic_error("cone set not closed under λ↔μ");
}

StableStretchCheck check_stable_stretching(const ConeK3& cone) {
  const ComplexK3& complex = load_k3();
  const PointK3 base = generator_sum(cone);
  std::vector<PointK3> points{base};
  for (const auto& g : cone.generators) points.push_back(add(base, complex.ray(g).coords));

  auto names = free_variable_names(3);
  names.push_back("t");
  std::vector<Exponents> monomials;
  for (unsigned d = 0; d <= 3; ++d)
    for (std::size_t x = 0; x <= 8; ++x) {
      Exponents e(9, 0);
      e[8] = d;
      if (x < 8) e[x] = 1;
      monomials.push_back(std::move(e));
    }

  std::vector<FitSample> samples;
  for (const auto& p : points)
    for (long t = 1; t <= 5; ++t) {
      const PointK3 tp = add(PointK3{}, p, t);
      const Triple tr = to_triple(tp);
      auto coords = free_coordinates(std::span<const long>(p.data(), 9), 3);
      coords.emplace_back(t);
      samples.push_back({std::move(coords), Rational(static_cast<unsigned long>(hive_count(tr.lambda, tr.mu, tr.nu)))});
    }

  StableStretchCheck check;
  check.samples = samples.size();
  check.unknowns = monomials.size();
  const auto fit = fit_poly_monomials(samples, names, monomials);
  check.fitted = fit.has_value();
  if (fit) check.polynomial = *fit;
  return check;
}

nlohmann::ordered_json to_json(const ComplexK3& complex) {
  nlohmann::ordered_json j;
  auto rays = nlohmann::ordered_json::object();
  for (const auto& r : complex.rays) rays[r.name] = r.coords;
  j["rays"] = rays;
  auto cones = nlohmann::ordered_json::array();
  for (const auto& c : complex.cones) {
    auto poly = nlohmann::ordered_json::object();
    for (const auto& e : graded_lex_monomials(9, 1)) {
      const Rational coeff = c.polynomial.coefficient(e);
      if (coeff == 0) continue;
      const bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
      poly[constant ? "1" : c.polynomial.monomial_string(e)] = to_int64(coeff);
    }
    cones.push_back({{"name", c.name}, {"generators", c.generators}, {"polynomial", poly}});
  }
  j["cones"] = cones;
  return j;
}

nlohmann::ordered_json to_json(const ConeVerification& v) {
  nlohmann::ordered_json j{{"cone", v.cone}, {"samples", v.samples}, {"pass", v.pass}};
  auto bad = nlohmann::ordered_json::array();
  for (const auto& c : v.counterexamples)
    bad.push_back({{"point", c.point},
                   {"cone", c.cone},
                   {"polynomial", to_string(c.polynomial_value)},
                   {"hive", c.hive},
                   {"steinberg", c.steinberg}});
  j["counterexamples"] = bad;
  return j;
}

}  // namespace lrpoly
