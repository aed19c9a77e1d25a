#include "lrpoly/steinberg.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "lrpoly/hive.hpp"
#include "lrpoly/kostant.hpp"

namespace lrpoly {

namespace {

std::vector<long> twice_delta(std::size_t k) {
  std::vector<long> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<long>(k) - 1 - 2 * static_cast<long>(i);
  return d;
}

const std::vector<Permutation>& permutations_of(std::size_t k) {
  static const std::vector<std::vector<Permutation>> table = [] {
    std::vector<std::vector<Permutation>> t;
    for (std::size_t n = 0; n <= 7; ++n) t.push_back(all_permutations(n));
    return t;
  }();
  if (k >= table.size()) throw std::invalid_argument("k too large for S_k enumeration");
  return table[k];
}

// The points σ(λ+δ) + τ(μ+δ) - (ν+2δ) for all (σ, τ) in lexicographic order.
struct SteinbergPoints {
  std::vector<std::vector<long>> points;
  std::vector<int> signs;
};

SteinbergPoints steinberg_points(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k) {
  const auto d2 = twice_delta(k);
  const auto lam = lambda.padded(k);
  const auto m = mu.padded(k);
  const auto n = nu.padded(k);
  std::vector<long> lam2(k), mu2(k), nu2(k);
  for (std::size_t i = 0; i < k; ++i) {
    lam2[i] = 2 * lam[i] + d2[i];
    mu2[i] = 2 * m[i] + d2[i];
    nu2[i] = 2 * n[i] + 2 * d2[i];
  }
  const auto& perms = permutations_of(k);
  std::vector<std::vector<long>> acted_mu;
  for (const auto& tau : perms) acted_mu.push_back(act(tau, mu2));

  SteinbergPoints out;
  for (const auto& sigma : perms) {
    const auto sl = act(sigma, lam2);
    for (std::size_t t = 0; t < perms.size(); ++t) {
      std::vector<long> p(k);
      for (std::size_t i = 0; i < k; ++i) p[i] = (sl[i] + acted_mu[t][i] - nu2[i]) / 2;
      out.points.push_back(std::move(p));
      out.signs.push_back(sigma.sign() * perms[t].sign());
    }
  }
  return out;
}

// k·w for every conjugate w of a fundamental weight, in sorted order.
std::vector<std::vector<long>> scaled_wall_normals(std::size_t k) {
  std::vector<std::vector<long>> out;
  if (k < 2) return out;
  for (const Weight& w : conjugates_of_fundamental_weights(k)) {
    std::vector<long> v;
    for (const auto& c : w) v.push_back(to_int64(c * static_cast<long>(k)));
    out.push_back(std::move(v));
  }
  return out;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::optional<TypeSignature> signature_or_empty(const Partition& lambda, const Partition& mu, const Partition& nu,
                                                std::size_t k) {
  const auto pts = steinberg_points(lambda, mu, nu, k);
  const auto normals = scaled_wall_normals(k);
  TypeSignature sig{k, normals.size(), {}};
  sig.signs.reserve(pts.points.size() * normals.size());
  for (const auto& p : pts.points)
    for (const auto& w : normals) {
      const long d = dot(p, w);
      if (d == 0) return std::nullopt;
      sig.signs.push_back(d > 0 ? 1 : -1);
    }
  return sig;
}

Weight permuted_weight(const Permutation& p, const Weight& w) { return act(p, w); }

}  // namespace

std::int64_t steinberg_count(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k) {
  (void)lambda.padded(k);
  (void)mu.padded(k);
  (void)nu.padded(k);
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const auto pts = steinberg_points(lambda, mu, nu, k);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < pts.points.size(); ++i)
    total += pts.signs[i] * static_cast<std::int64_t>(kostant_count(pts.points[i]));
  return total;
}

std::int64_t steinberg_count_barred(const Partition& lambda, const Partition& mu, const Partition& nu,
                                    std::size_t k) {
  if (lambda.size() + mu.size() != nu.size()) {
    (void)nu.padded(k);
    return 0;
  }
  const Weight lb = bar(lambda, k);
  const Weight mb = bar(mu, k);
  const Weight nb = bar(nu, k);
  if (k < 2) return 1;
  const Weight delta = build_root_system(k).delta;
  Weight lam_d(k), mu_d(k), nu_d(k);
  for (std::size_t i = 0; i < k; ++i) {
    lam_d[i] = lb[i] + delta[i];
    mu_d[i] = mb[i] + delta[i];
    nu_d[i] = nb[i] + 2 * delta[i];
  }
  std::int64_t total = 0;
  for (const auto& sigma : permutations_of(k)) {
    const Weight sl = act(sigma, lam_d);
    for (const auto& tau : permutations_of(k)) {
      const Weight tm = act(tau, mu_d);
      Weight p(k);
      for (std::size_t i = 0; i < k; ++i) p[i] = sl[i] + tm[i] - nu_d[i];
      total += sigma.compose(tau).sign() * static_cast<std::int64_t>(kostant_count(k, p));
    }
  }
  return total;
}

SteinbergHyperplane steinberg_hyperplane(const Permutation& sigma, const Permutation& tau, const Permutation& theta,
                                         std::size_t j) {
  const std::size_t k = sigma.size();
  const RootSystemData data = build_root_system(k);
  if (j < 1 || j >= k) throw std::invalid_argument("steinberg_hyperplane: j must be in 1..k-1");
  const Weight w = permuted_weight(theta, data.fundamental_weights[j - 1]);
  SteinbergHyperplane h{sigma, tau, theta, j, std::vector<Rational>(3 * k), delta_shift(sigma, tau, theta, j)};
  // <σ(λ), w> = Σ_m λ_m w_{σ(m)}
  for (std::size_t m = 0; m < k; ++m) {
    h.normal[m] = w[static_cast<std::size_t>(sigma(m))];
    h.normal[k + m] = w[static_cast<std::size_t>(tau(m))];
    h.normal[2 * k + m] = -w[m];
  }
  return h;
}

Rational delta_shift(const Permutation& sigma, const Permutation& tau, const Permutation& theta, std::size_t j) {
  const std::size_t k = sigma.size();
  const RootSystemData data = build_root_system(k);
  if (j < 1 || j >= k) throw std::invalid_argument("delta_shift: j must be in 1..k-1");
  const Weight w = act(theta, data.fundamental_weights[j - 1]);
  const Weight sd = act(sigma, data.delta);
  const Weight td = act(tau, data.delta);
  Weight v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = 2 * data.delta[i] - sd[i] - td[i];
  return pairing(v, w);
}

Rational max_delta_shift(std::size_t k) {
  Rational best = 0;
  const auto& perms = permutations_of(k);
  for (const auto& s : perms)
    for (const auto& t : perms)
      for (const auto& th : perms)
        for (std::size_t j = 1; j < k; ++j) best = std::max(best, Rational(abs(delta_shift(s, t, th, j))));
  return best;
}

std::vector<SteinbergHyperplane> enumerate_hyperplanes(std::size_t k) {
  if (k < 2) throw std::invalid_argument("enumerate_hyperplanes: k >= 2 required");
  const auto& perms = permutations_of(k);
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  std::vector<SteinbergHyperplane> out;
  for (const auto& s : perms)
    for (const auto& t : perms)
      for (const auto& th : perms)
        for (std::size_t j = 1; j < k; ++j) {
          SteinbergHyperplane h = steinberg_hyperplane(s, t, th, j);
          // Primitive integer normal, first nonzero entry positive.
          Integer den = 1;
          for (const auto& c : h.normal) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
          Integer g = 0;
          for (const auto& c : h.normal) {
            const Integer scaled = c.get_num() * (den / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
          }
          Rational factor = Rational(den) / Rational(g);
          const auto first = std::find_if(h.normal.begin(), h.normal.end(), [](const Rational& c) { return sgn(c) != 0; });
          if (sgn(*first) < 0) factor = -factor;
          for (auto& c : h.normal) c *= factor;
          h.shift *= factor;
          if (seen.emplace(h.normal, h.shift).second) out.push_back(std::move(h));
        }
  return out;
}

int TypeSignature::at(std::size_t sigma_index, std::size_t tau_index, std::size_t normal_index) const {
  const std::size_t nperm = permutations_of(k).size();
  return signs.at((sigma_index * nperm + tau_index) * normals + normal_index);
}

std::string TypeSignature::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (signed char s : signs) {
    h ^= static_cast<unsigned char>(s > 0 ? '+' : '-');
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool is_generic(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k) {
  return signature_or_empty(lambda, mu, nu, k).has_value();
}

TypeSignature type_signature(const Partition& lambda, const Partition& mu, const Partition& nu, std::size_t k) {
  auto sig = signature_or_empty(lambda, mu, nu, k);
  if (!sig) throw std::domain_error("type_signature: triple is not generic");
  return *sig;
}

namespace {

std::vector<std::vector<long>> unit_moves(std::size_t k) {
  std::set<std::vector<long>> moves;
  const auto add = [&](std::size_t a, long sa, std::size_t b, long sb) {
    std::vector<long> v(3 * k, 0);
    v[a] += sa;
    v[b] += sb;
    moves.insert(v);
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      for (long s : {1L, -1L}) {
        add(i, s, 2 * k + j, s);          // λ_i and ν_j together
        add(k + i, s, 2 * k + j, s);      // μ_i and ν_j together
        add(i, s, k + j, -s);             // λ_i against μ_j
      }
      if (i != j) {
        add(i, 1, j, -1);
        add(k + i, 1, k + j, -1);
        add(2 * k + i, 1, 2 * k + j, -1);
      }
    }
  return {moves.begin(), moves.end()};
}

std::optional<Triple> as_triple(const std::vector<long>& coords, std::size_t k) {
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t i = 0; i < k; ++i) {
      const long v = coords[b * k + i];
      if (v < 0 || (i > 0 && v > coords[b * k + i - 1])) return std::nullopt;
    }
  return Triple::from_coordinates(coords, k);
}

}  // namespace

RegionFit verify_region_polynomial(const Triple& seed, std::size_t k, std::size_t sample_count) {
  const TypeSignature target = type_signature(seed.lambda, seed.mu, seed.nu, k);
  const auto moves = unit_moves(k);

  RegionFit result;
  std::set<std::vector<long>> visited;
  std::deque<std::vector<long>> queue;
  const auto start = seed.coordinates(k);
  visited.insert(start);
  queue.push_back(start);
  const std::size_t visit_limit = 200 * sample_count + 1000;
  while (!queue.empty() && result.samples.size() < sample_count && visited.size() < visit_limit) {
    const auto current = queue.front();
    queue.pop_front();
    const auto triple = as_triple(current, k);
    if (!triple) continue;
    const auto sig = signature_or_empty(triple->lambda, triple->mu, triple->nu, k);
    if (!sig || !(*sig == target)) continue;
    result.samples.push_back(*triple);
    for (const auto& mv : moves) {
      std::vector<long> next = current;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += mv[i];
      if (visited.insert(next).second) queue.push_back(std::move(next));
    }
  }
  if (result.samples.size() < sample_count)
    throw std::runtime_error("verify_region_polynomial: only " + std::to_string(result.samples.size()) +
                             " same-signature samples found");

  const unsigned degree = k < 2 ? 0 : static_cast<unsigned>((k - 1) * (k - 2) / 2);
  const auto names = free_variable_names(k);
  const auto monomials = graded_lex_monomials(names.size(), degree);

  std::vector<FitSample> samples;
  for (const Triple& t : result.samples) {
    const auto coords = t.coordinates(k);
    samples.push_back({free_coordinates(coords, k), Rational(static_cast<unsigned long>(hive_count(t.lambda, t.mu, t.nu)))});
  }

  std::optional<MultiPolyQ> fit;
  std::size_t used = std::min(monomials.size(), samples.size() - 1);
  bool determined = false;
  while (!determined && used < samples.size()) {
    try {
      fit = fit_poly_monomials(std::span<const FitSample>(samples.data(), used), names, monomials);
      determined = true;
    } catch (const UnderdeterminedFit&) {
      ++used;
    }
  }
  if (!determined || used == samples.size())
    throw std::runtime_error("verify_region_polynomial: samples do not determine a polynomial with a held-out rest");

  result.fit_points = used;
  result.held_out = samples.size() - used;
  if (!fit) {
    result.verified = false;
    result.polynomial = MultiPolyQ(triple_variable_names(k));
    return result;
  }
  result.verified = true;
  for (std::size_t i = used; i < samples.size(); ++i)
    if (fit->evaluate(samples[i].point) != samples[i].value) result.verified = false;
  result.polynomial = embed_free_polynomial(*fit, k);
  return result;
}

namespace {

const std::vector<ChamberPoly>& cached_chambers(std::size_t n) {
  static const std::vector<ChamberPoly> c1 = kostant_chambers(1);
  if (n == 1) return c1;
  static const std::vector<ChamberPoly> c2 = kostant_chambers(2);
  if (n == 2) return c2;
  static const std::vector<ChamberPoly> c3 = kostant_chambers(3);
  if (n == 3) return c3;
  throw std::invalid_argument("no chamber data for this rank");
}

}  // namespace

MultiPolyQ assemble_type_polynomial(const Triple& t, std::size_t k) {
  if (k < 2 || k > 4) throw std::invalid_argument("assemble_type_polynomial: 2 <= k <= 4 required");
  if (!is_generic(t.lambda, t.mu, t.nu, k)) throw std::domain_error("assemble_type_polynomial: triple is not generic");
  const auto& chambers = cached_chambers(k - 1);
  const auto names = triple_variable_names(k);
  const auto pts = steinberg_points(t.lambda, t.mu, t.nu, k);
  const auto& perms = permutations_of(k);
  const auto d2 = twice_delta(k);

  MultiPolyQ total(names);
  std::size_t idx = 0;
  for (const auto& sigma : perms)
    for (const auto& tau : perms) {
      const auto& p = pts.points[idx];
      const int sign = pts.signs[idx];
      ++idx;
      // Simple-root coordinates of the point.
      std::vector<long> v(k - 1);
      long partial = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) v[i] = partial += p[i];
      if (std::any_of(v.begin(), v.end(), [](long x) { return x < 0; })) continue;  // K vanishes outside the orthant
      const auto region = std::find_if(chambers.begin(), chambers.end(),
                                       [&](const ChamberPoly& c) { return c.contains_interior(v); });
      if (region == chambers.end()) throw std::logic_error("assemble_type_polynomial: point in no chamber interior");

      // p_i = λ_{σ^{-1}(i)} + μ_{τ^{-1}(i)} - ν_i + (σ(δ) + τ(δ) - 2δ)_i as affine forms.
      const auto sinv = sigma.inverse();
      const auto tinv = tau.inverse();
      const auto sd = act(sigma, d2);
      const auto td = act(tau, d2);
      std::vector<MultiPolyQ> coords;
      MultiPolyQ running(names);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        running += MultiPolyQ::variable(names, static_cast<std::size_t>(sinv(i)));
        running += MultiPolyQ::variable(names, k + static_cast<std::size_t>(tinv(i)));
        running = running - MultiPolyQ::variable(names, 2 * k + i);
        running += MultiPolyQ::constant(names, Rational((sd[i] + td[i] - 2 * d2[i]) / 2));
        coords.push_back(running);
      }
      total += region->polynomial.substitute(coords) * Rational(sign);
    }
  return total;
}

}  // namespace lrpoly
