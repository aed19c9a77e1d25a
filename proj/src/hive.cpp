#include "lrpoly/hive.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace lrpoly {

namespace {

using Cell = std::pair<std::size_t, std::size_t>;

/// plus[0] + plus[1] - minus[0] - minus[1] >= 0
struct Rhombus {
  std::string label;
  std::array<Cell, 2> plus;
  std::array<Cell, 2> minus;
};

std::vector<Rhombus> rhombi(std::size_t k) {
  std::vector<Rhombus> out;
  if (k < 2) return out;
  const auto each = [&](const char* name, auto make) {
    for (std::size_t i = 0; i + 2 <= k; ++i)
      for (std::size_t j = 0; i + j + 2 <= k; ++j) {
        Rhombus r = make(i, j);
        r.label = std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        out.push_back(std::move(r));
      }
  };
  each("square", [](std::size_t i, std::size_t j) {
    return Rhombus{"", {Cell{i + 1, j}, Cell{i, j + 1}}, {Cell{i, j}, Cell{i + 1, j + 1}}};
  });
  each("horizontal", [](std::size_t i, std::size_t j) {
    return Rhombus{"", {Cell{i, j + 1}, Cell{i + 1, j + 1}}, {Cell{i + 1, j}, Cell{i, j + 2}}};
  });
  each("vertical", [](std::size_t i, std::size_t j) {
    return Rhombus{"", {Cell{i + 1, j}, Cell{i + 1, j + 1}}, {Cell{i + 2, j}, Cell{i, j + 1}}};
  });
  return out;
}

bool is_interior(std::size_t k, const Cell& c) { return c.first >= 1 && c.second >= 1 && c.first + c.second < k; }

std::vector<Cell> interior_cells(std::size_t k) {
  std::vector<Cell> out;
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; i + j < k; ++j) out.emplace_back(i, j);
  return out;
}

void check_lengths(const HiveBoundary& b) {
  (void)b.lambda.padded(b.k);
  (void)b.mu.padded(b.k);
  (void)b.nu.padded(b.k);
}

// Depth-first enumeration of interior entries in row-major order. Each
// rhombus is checked when its last interior cell is assigned, as a bound on
// that cell.
class HiveSearch {
 public:
  explicit HiveSearch(const HiveBoundary& b) : hive_(boundary_hive(b)), cells_(interior_cells(b.k)) {
    attached_.resize(cells_.size());
    for (const Rhombus& r : rhombi(b.k)) {
      std::ptrdiff_t last = -1;
      for (const auto* group : {&r.plus, &r.minus})
        for (const Cell& c : *group)
          if (is_interior(b.k, c)) {
            const auto pos = std::find(cells_.begin(), cells_.end(), c) - cells_.begin();
            last = std::max(last, pos);
          }
      if (last < 0) {
        fixed_.push_back(r);
      } else {
        attached_[static_cast<std::size_t>(last)].push_back(r);
      }
    }
  }

  template <typename Leaf>
  void run(Leaf&& leaf) {
    for (const Rhombus& r : fixed_)
      if (value(r) < 0) return;
    descend(0, leaf);
  }

 private:
  long value(const Rhombus& r) const {
    return hive_.at(r.plus[0].first, r.plus[0].second) + hive_.at(r.plus[1].first, r.plus[1].second) -
           hive_.at(r.minus[0].first, r.minus[0].second) - hive_.at(r.minus[1].first, r.minus[1].second);
  }

  template <typename Leaf>
  void descend(std::size_t t, Leaf& leaf) {
    if (t == cells_.size()) {
      leaf(hive_);
      return;
    }
    const Cell cell = cells_[t];
    long& entry = hive_.at(cell.first, cell.second);
    long lo = 0;
    long hi = std::numeric_limits<long>::max();
    for (const Rhombus& r : attached_[t]) {
      entry = 0;
      const long rest = value(r);
      const bool positive = r.plus[0] == cell || r.plus[1] == cell;
      if (positive) {
        lo = std::max(lo, -rest);
      } else {
        hi = std::min(hi, rest);
      }
    }
    if (hi == std::numeric_limits<long>::max()) throw std::logic_error("hive search: unbounded interior entry");
    for (long x = lo; x <= hi; ++x) {
      entry = x;
      descend(t + 1, leaf);
    }
    entry = 0;
  }

  Hive hive_;
  std::vector<Cell> cells_;
  std::vector<std::vector<Rhombus>> attached_;
  std::vector<Rhombus> fixed_;
};

}  // namespace

HiveBoundary HiveBoundary::fit(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const std::size_t k = std::max<std::size_t>({1, lambda.length(), mu.length(), nu.length()});
  return {k, lambda, mu, nu};
}

Hive::Hive(std::size_t k) : k_(k), entries_((k + 1) * (k + 2) / 2, 0) {}

std::size_t Hive::index(std::size_t i, std::size_t j) const {
  if (i + j > k_) throw std::out_of_range("hive index outside the triangle");
  // Row i holds k - i + 1 entries.
  return i * (k_ + 1) - i * (i - 1) / 2 + j;
}

Hive boundary_hive(const HiveBoundary& b) {
  const std::size_t k = b.k;
  Hive h(k);
  const auto lambda = b.lambda.padded(k);
  const auto mu = b.mu.padded(k);
  const auto nu = b.nu.padded(k);
  long acc = 0;
  for (std::size_t j = 1; j <= k; ++j) h.at(0, j) = acc += lambda[j - 1];
  acc = 0;
  for (std::size_t i = 1; i <= k; ++i) h.at(i, 0) = acc += nu[i - 1];
  acc = b.lambda.size();
  for (std::size_t m = 1; m < k; ++m) h.at(m, k - m) = acc += mu[m - 1];
  return h;
}

bool satisfies_hive_conditions(const Hive& h) {
  const std::size_t k = h.k();
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; i + j <= k; ++j)
      if (h.at(i, j) < 0) return false;
  for (const Rhombus& r : rhombi(k)) {
    const long v = h.at(r.plus[0].first, r.plus[0].second) + h.at(r.plus[1].first, r.plus[1].second) -
                   h.at(r.minus[0].first, r.minus[0].second) - h.at(r.minus[1].first, r.minus[1].second);
    if (v < 0) return false;
  }
  return true;
}

bool matches_boundary(const Hive& h, const HiveBoundary& b) {
  if (h.k() != b.k || !b.sums_match()) return false;
  const Hive expected = boundary_hive(b);
  const std::size_t k = b.k;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; i + j <= k; ++j)
      if (!is_interior(k, {i, j}) && h.at(i, j) != expected.at(i, j)) return false;
  return h.at(k, 0) == b.nu.size();
}

std::uint64_t hive_count(const HiveBoundary& b) {
  check_lengths(b);
  if (!b.sums_match()) return 0;
  std::uint64_t count = 0;
  HiveSearch(b).run([&](const Hive&) { ++count; });
  return count;
}

std::uint64_t hive_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return hive_count(HiveBoundary::fit(lambda, mu, nu));
}

void for_each_hive(const HiveBoundary& b, const std::function<void(const Hive&)>& visit) {
  check_lengths(b);
  if (!b.sums_match()) return;
  HiveSearch(b).run([&](const Hive& h) { visit(h); });
}

HiveSystem build_system(std::size_t k) {
  if (k < 2) throw std::invalid_argument("build_system: k >= 2 required");
  HiveSystem s;
  s.k = k;
  s.interior = interior_cells(k);
  const auto rows = rhombi(k);
  const std::size_t n_int = s.interior.size();
  s.E = MatrixQ(rows.size(), n_int + rows.size());
  s.B = MatrixQ(rows.size(), 3 * k);

  // Boundary entries as linear forms in (λ_1..λ_k, μ_1..μ_k, ν_1..ν_k).
  const auto boundary_form = [k](const Cell& c) {
    std::vector<long> form(3 * k, 0);
    const auto [i, j] = c;
    if (i == 0) {
      for (std::size_t t = 0; t < j; ++t) form[t] = 1;
    } else if (j == 0) {
      for (std::size_t t = 0; t < i; ++t) form[2 * k + t] = 1;
    } else {  // i + j == k
      for (std::size_t t = 0; t < k; ++t) form[t] = 1;
      for (std::size_t t = 0; t < i; ++t) form[k + t] = 1;
    }
    return form;
  };

  for (std::size_t m = 0; m < rows.size(); ++m) {
    const Rhombus& r = rows[m];
    s.inequality_order.push_back(r.label);
    // plus - minus = A·a + L·(λ,μ,ν) >= 0  <=>  -A·a + s_m = L·(λ,μ,ν)
    const auto accumulate = [&](const Cell& c, long sign) {
      if (is_interior(k, c)) {
        const auto pos = static_cast<std::size_t>(std::find(s.interior.begin(), s.interior.end(), c) -
                                                  s.interior.begin());
        s.E(m, pos) -= sign;
      } else {
        const auto form = boundary_form(c);
        for (std::size_t t = 0; t < form.size(); ++t) s.B(m, t) += sign * form[t];
      }
    };
    for (const Cell& c : r.plus) accumulate(c, 1);
    for (const Cell& c : r.minus) accumulate(c, -1);
    s.E(m, n_int + m) = 1;
  }
  return s;
}

std::uint64_t count_via_system(const HiveSystem& s, const Partition& lambda, const Partition& mu,
                               const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const std::size_t k = s.k;
  std::vector<Rational> coords;
  for (const auto* p : {&lambda, &mu, &nu})
    for (long v : p->padded(k)) coords.emplace_back(v);
  const auto rhs_q = s.B.multiply(coords);

  const std::size_t rows = s.E.rows();
  const std::size_t n_vars = s.E.cols() - rows;  // interior variables precede the slacks
  std::vector<long> rhs;
  for (const auto& q : rhs_q) {
    if (!is_integer(q)) throw std::logic_error("count_via_system: B·(λ,μ,ν) is not integral");
    rhs.push_back(to_int64(q));
  }
  std::vector<std::vector<long>> coef(rows, std::vector<long>(n_vars));
  std::vector<std::vector<std::size_t>> attached(n_vars);
  for (std::size_t m = 0; m < rows; ++m) {
    std::ptrdiff_t last = -1;
    for (std::size_t j = 0; j < n_vars; ++j) {
      coef[m][j] = to_int64(s.E(m, j));
      if (coef[m][j] != 0) last = static_cast<std::ptrdiff_t>(j);
    }
    if (last < 0) {
      if (rhs[m] < 0) return 0;
    } else {
      attached[static_cast<std::size_t>(last)].push_back(m);
    }
  }

  std::vector<long> x(n_vars, 0);
  std::uint64_t count = 0;
  const auto floor_div = [](long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  const auto ceil_div = [&](long a, long b) { return -floor_div(-a, b); };

  const auto descend = [&](auto&& self, std::size_t t) -> void {
    if (t == n_vars) {
      for (std::size_t m = 0; m < rows; ++m) {
        long slack = rhs[m];
        for (std::size_t j = 0; j < n_vars; ++j) slack -= coef[m][j] * x[j];
        if (slack < 0) return;
      }
      ++count;
      return;
    }
    long lo = 0;
    long hi = std::numeric_limits<long>::max();
    for (std::size_t m : attached[t]) {
      long r = rhs[m];
      for (std::size_t j = 0; j < t; ++j) r -= coef[m][j] * x[j];
      const long c = coef[m][t];
      if (c > 0) {
        hi = std::min(hi, floor_div(r, c));
      } else {
        lo = std::max(lo, ceil_div(r, c));
      }
    }
    if (hi == std::numeric_limits<long>::max()) throw std::logic_error("count_via_system: unbounded variable");
    for (long v = lo; v <= hi; ++v) {
      x[t] = v;
      self(self, t + 1);
    }
    x[t] = 0;
  };
  descend(descend, 0);
  return count;
}

nlohmann::ordered_json to_json(const HiveSystem& s) {
  const auto rows_of = [](const MatrixQ& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_int64(m(r, c)));
      out.push_back(std::move(row));
    }
    return out;
  };
  nlohmann::ordered_json j;
  j["k"] = s.k;
  j["E"] = rows_of(s.E);
  j["B"] = rows_of(s.B);
  j["inequality_order"] = s.inequality_order;
  return j;
}

}  // namespace lrpoly
