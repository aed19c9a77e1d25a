#include "lrpoly/typea.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lrpoly {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<long> parts;
  if (text.empty()) return Partition{};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("bad partition text '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<long> Partition::padded(std::size_t k) const {
  if (parts_.size() > k)
    throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(k) + " parts");
  std::vector<long> out = parts_;
  out.resize(k, 0);
  return out;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > parts_[i]) return false;
  return true;
}

Partition Partition::scaled(long factor) const {
  std::vector<long> out = parts_;
  for (auto& p : out) p *= factor;
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero_based;
  for (int v : images) zero_based.push_back(v - 1);
  return Permutation(std::move(zero_based));
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[static_cast<std::size_t>(other.images_[i])];
  return Permutation(std::move(out));
}

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Weight act(const Permutation& p, const Weight& w) {
  if (p.size() != w.size()) throw std::invalid_argument("act: permutation and weight lengths differ");
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(p(i))] = w[i];
  return out;
}

std::vector<long> act(const Permutation& p, const std::vector<long>& w) {
  if (p.size() != w.size()) throw std::invalid_argument("act: permutation and weight lengths differ");
  std::vector<long> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(p(i))] = w[i];
  return out;
}

Rational pairing(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RootSystemData build_root_system(std::size_t k) {
  if (k < 2) throw std::invalid_argument("root system needs k >= 2");
  RootSystemData data;
  data.k = k;
  const auto root = [k](std::size_t i, std::size_t j) {
    Weight r(k, Rational(0));
    r[i] = 1;
    r[j] = -1;
    return r;
  };
  for (std::size_t i = 0; i + 1 < k; ++i) data.simple_roots.push_back(root(i, i + 1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) data.positive_roots.push_back(root(i, j));
  // ω_i = (1/k)(k-i, …, k-i, -i, …, -i) with i leading entries.
  for (std::size_t i = 1; i < k; ++i) {
    Weight w(k);
    for (std::size_t c = 0; c < k; ++c)
      w[c] = c < i ? make_rational(static_cast<long>(k - i), static_cast<long>(k))
                   : make_rational(-static_cast<long>(i), static_cast<long>(k));
    data.fundamental_weights.push_back(std::move(w));
  }
  data.delta.assign(k, Rational(0));
  for (const auto& r : data.positive_roots)
    for (std::size_t c = 0; c < k; ++c) data.delta[c] += r[c] / 2;
  return data;
}

Weight bar(const Partition& lambda, std::size_t k) {
  const auto parts = lambda.padded(k);
  const Rational mean = make_rational(lambda.size(), static_cast<long>(k));
  Weight out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = Rational(parts[i]) - mean;
  return out;
}

std::vector<Weight> conjugates_of_fundamental_weights(std::size_t k) {
  const RootSystemData data = build_root_system(k);
  std::set<Weight> seen;
  for (const Weight& w : data.fundamental_weights) {
    // Orbit of a vector under coordinate permutations = its distinct rearrangements.
    Weight sorted = w;
    std::sort(sorted.begin(), sorted.end());
    do {
      seen.insert(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Rational> to_simple_root_coords(const Weight& w) {
  std::vector<Rational> v;
  Rational partial = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    partial += w[i];
    v.push_back(partial);
  }
  return v;
}

Weight from_simple_root_coords(const std::vector<Rational>& v) {
  Weight w(v.size() + 1, Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] += v[i];
    w[i + 1] -= v[i];
  }
  return w;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(w[i]);
  }
  return out + ")";
}

}  // namespace lrpoly
