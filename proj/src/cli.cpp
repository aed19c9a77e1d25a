#include "lrpoly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrpoly/hive.hpp"
#include "lrpoly/kostant.hpp"
#include "lrpoly/lr.hpp"
#include "lrpoly/lr3.hpp"
#include "lrpoly/random.hpp"
#include "lrpoly/steinberg.hpp"
#include "lrpoly/stretch.hpp"

namespace lrpoly::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TripleArgs {
  std::string lambda, mu, nu;
  void attach(CLI::App* app) {
    app->add_option("lambda", lambda, "partition, e.g. 2,1")->required();
    app->add_option("mu", mu, "partition")->required();
    app->add_option("nu", nu, "partition")->required();
  }
  Triple parse() const {
    try {
      return {Partition::parse(lambda), Partition::parse(mu), Partition::parse(nu)};
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
};

std::size_t rank_of(const Triple& t) { return std::max<std::size_t>(2, t.length()); }

Method require_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw UsageError("unknown method: " + name);
  return *m;
}

// Returns the exit code; fills `result`.
int cmd_lr(const Triple& t, const std::string& method, json& result) {
  if (method == "all") {
    std::optional<std::uint64_t> first;
    bool agree = true;
    for (Method m : kAllMethods) {
      const auto c = lr_coefficient(t.lambda, t.mu, t.nu, m);
      result[method_name(m)] = c;
      if (first && *first != c) agree = false;
      first = c;
    }
    result["agree"] = agree;
    if (!t.sums_match()) result["reason"] = "sum mismatch";
    return agree ? kExitOk : kExitVerificationFailure;
  }
  const Method m = require_method(method);
  result["method"] = method_name(m);
  result["coefficient"] = lr_coefficient(t.lambda, t.mu, t.nu, m);
  if (!t.sums_match()) result["reason"] = "sum mismatch";
  return kExitOk;
}

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return w;
}

json chamber_json(const ChamberPoly& c) {
  return {{"generators", c.generators}, {"inequalities", c.inequalities}, {"polynomial", c.polynomial.to_string()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Littlewood-Richardson coefficients, stretching polynomials and chamber data"};
  app.name("lrpoly");
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  std::string cache;
  app.add_option("--output", output, "write JSON to this file instead of standard output");
  app.add_option("--cache", cache, "reserved, not implemented");

  TripleArgs triple;
  std::string method = "hive";
  auto* lr = app.add_subcommand("lr", "coefficient by one method or all");
  triple.attach(lr);
  lr->add_option("--method", method, "hive|steinberg|tableaux|system|all");

  auto* stretch = app.add_subcommand("stretch", "stretching polynomial");
  triple.attach(stretch);
  stretch->add_option("--method", method, "hive|steinberg|tableaux|system");

  std::size_t k = 0;
  std::string weight;
  auto* kostant = app.add_subcommand("kostant", "Kostant partition function");
  kostant->add_option("k", k, "rank + 1")->required();
  kostant->add_option("weight", weight, "k comma-separated coordinates summing to 0")->required();

  std::size_t n = 0;
  auto* chambers = app.add_subcommand("chambers", "Kostant chamber polynomials for A_n, n <= 3");
  chambers->add_option("n", n)->required();

  auto* matrix = app.add_subcommand("matrix", "hive system E, B");
  matrix->add_option("k", k)->required();

  std::size_t samples = 20;
  std::uint64_t seed = Rng::kDefaultSeed;
  auto* verify = app.add_subcommand("verify-k3", "check the 18 cone polynomials");
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);

  auto* generic = app.add_subcommand("generic", "genericity and type signature");
  triple.attach(generic);

  auto* ktt = app.add_subcommand("ktt", "P(0) and coefficient signs of the stretching polynomial");
  triple.attach(ktt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  }

  json result;
  int code = kExitOk;
  try {
    if (!cache.empty()) throw UsageError("--cache is reserved and not implemented");
    if (lr->parsed()) {
      code = cmd_lr(triple.parse(), method, result);
    } else if (stretch->parsed()) {
      const Triple t = triple.parse();
      const Method m = require_method(method);
      if (!t.sums_match()) {
        result = {{"polynomial", "0"}, {"reason", "sum mismatch"}};
      } else {
        try {
          result = to_json(stretch_poly(t.lambda, t.mu, t.nu, m));
        } catch (const std::runtime_error& e) {
          result = {{"error", e.what()}};
          code = kExitVerificationFailure;
        }
      }
    } else if (kostant->parsed()) {
      const Weight w = parse_weight(weight);
      if (w.size() != k) throw UsageError("weight must have k coordinates");
      if (std::accumulate(w.begin(), w.end(), Rational(0)) != 0) throw UsageError("weight coordinates must sum to 0");
      json coords = json::array();
      for (const auto& c : w) coords.push_back(to_string(c));
      result = {{"k", k}, {"weight", coords}, {"count", kostant_count(k, w)}};
    } else if (chambers->parsed()) {
      if (n < 1 || n > 3) throw UsageError("chambers: n must be 1, 2 or 3");
      json regions = json::array();
      for (const auto& c : kostant_chambers(n)) regions.push_back(chamber_json(c));
      result = {{"n", n}, {"regions", regions}};
    } else if (matrix->parsed()) {
      if (k < 2) throw UsageError("matrix: k must be at least 2");
      result = to_json(build_system(k));
    } else if (verify->parsed()) {
      json cones = json::array();
      bool pass = true;
      for (const auto& cone : load_k3().cones) {
        const auto v = verify_cone(cone, samples, seed);
        pass = pass && v.pass;
        cones.push_back(to_json(v));
      }
      result = {{"seed", seed}, {"samples", samples}, {"pass", pass}, {"cones", cones}};
      if (!pass) code = kExitVerificationFailure;
    } else if (generic->parsed()) {
      const Triple t = triple.parse();
      const std::size_t r = rank_of(t);
      const bool g = is_generic(t.lambda, t.mu, t.nu, r);
      result = {{"k", r}, {"generic", g}};
      result["digest"] = g ? json(type_signature(t.lambda, t.mu, t.nu, r).digest()) : json(nullptr);
    } else if (ktt->parsed()) {
      const Triple t = triple.parse();
      try {
        result = to_json(check_ktt(t.lambda, t.mu, t.nu));
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      } catch (const std::runtime_error& e) {
        result = {{"error", e.what()}};
        code = kExitVerificationFailure;
      }
    }
  } catch (const UsageError& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  }

  if (output.empty()) {
    out << result.dump() << "\n";
  } else {
    std::ofstream file(output);
    if (!file) {
      err << json{{"error", "cannot open " + output}}.dump() << "\n";
      return kExitUsage;
    }
    file << result.dump() << "\n";
  }
  return code;
}

}  // namespace lrpoly::cli
