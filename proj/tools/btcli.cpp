// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 bad configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bt/annihilator.hpp"
#include "bt/verify.hpp"

using json = nlohmann::ordered_json;
using namespace bt;

namespace {

constexpr int kCombinatorialLimit = 5;
constexpr int kMatrixLimit = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 3;
  int N = 2;
  int r = 0;  // 0: same as N
  std::string alpha;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::vector<std::uint64_t> primes{1000000007ULL, 998244353ULL};
  std::string output;
  bool as_json = false;
  bool force = false;
  bool corrupt = false;
  std::string flavor = "m";
  std::string method = "both";
};

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void guard(const RunConfig& c, int limit) {
  if (c.n < 1) throw ConfigError("n must be at least 1");
  if (c.n > limit && !c.force)
    throw ConfigError("n = " + std::to_string(c.n) + " exceeds the limit " + std::to_string(limit) + " (use --force)");
}

PartitionType parse_alpha(const std::string& s, int n) {
  PartitionType a;
  std::stringstream ss(s);
  std::string tok;
  int sum = 0;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
      a.push_back(v);
      sum += v;
    } catch (const std::exception&) {
      throw ConfigError("alpha must be a comma separated list of positive integers");
    }
  }
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] > a[k - 1]) throw ConfigError("alpha must be weakly decreasing");
  if (sum != n) throw ConfigError("alpha must be a partition of n");
  return a;
}

std::vector<PartitionType> alphas(const RunConfig& c) {
  if (c.alpha.empty()) return integer_partitions(c.n);
  return {parse_alpha(c.alpha, c.n)};
}

// q0 = 2, 3, ... per prime, or drawn from the seed; the rational point 5/7 always follows.
std::vector<EvalPoint> points(const RunConfig& c) {
  if (c.primes.empty()) throw ConfigError("at least one prime is needed");
  std::vector<EvalPoint> pts;
  std::mt19937_64 gen(c.seed);
  for (std::size_t k = 0; k < c.primes.size(); ++k) {
    std::uint64_t p = c.primes[k];
    if (p < 5 || !is_prime(p)) throw ConfigError(std::to_string(p) + " is not a prime >= 5");
    std::uint64_t q0 = c.seeded ? 2 + gen() % (p - 3) : 2 + k;
    pts.push_back({Rational(static_cast<long>(q0)), p});
  }
  pts.push_back({Rational(5, 7), 0});
  return pts;
}

json alpha_json(const PartitionType& a) { return json(a); }

json lambda_json(const LambdaPair& l) { return {{"blam", l.blam}, {"bmu", l.bmu}}; }

json tableau_json(const LambdaTableau& t) { return {{"t", t.t}, {"u", t.u}}; }

json element_json(const Element<LaurentPoly>& a) {
  const auto S = symbolic();
  json terms = json::array();
  const auto eb = to_E_basis(a, S);
  for (const auto& [key, c] : eb.terms()) {
    json coeff = json::object();
    for (const auto& [e, v] : c.to_string_map()) coeff[e] = v;
    terms.push_back({{"partition", key_partition(key, a.n()).blocks()},
                     {"word", key_permutation(key, a.n()).one_line()},
                     {"coeff", coeff}});
  }
  return {{"n", a.n()}, {"terms", terms}};
}

Element<LaurentPoly> element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) throw ConfigError("element needs \"n\" and \"terms\"");
  int n = j.at("n").get<int>();
  if (n < 1 || n > kCombinatorialLimit) throw ConfigError("element size out of range");
  Element<LaurentPoly> e(n);
  for (const auto& t : j.at("terms")) {
    auto blocks = t.at("partition").get<std::vector<Block>>();
    auto word = t.at("word").get<std::vector<int>>();
    auto coeff = t.at("coeff").get<std::map<std::string, std::string>>();
    SetPartition a = SetPartition::from_blocks(blocks);
    Permutation w = Permutation::from_one_line(word);
    if (a.size() != n || w.size() != n) throw ConfigError("term size does not match n");
    e.add(make_key(a, w), LaurentPoly::from_string_map(coeff));
  }
  return from_E_basis(e);
}

struct Result {
  json out;
  std::string text;
  int code = 0;
};

Result cmd_dim(const RunConfig& c) {
  guard(c, kCombinatorialLimit);
  Result r;
  long total = 0;
  json blocks = json::array();
  std::ostringstream os;
  for (const auto& a : integer_partitions(c.n)) {
    long d = static_cast<long>(alpha_basis(a).size());
    total += d;
    blocks.push_back({{"alpha", alpha_json(a)}, {"dim", d}});
    os << "  alpha " << json(a).dump() << ": " << d << "\n";
  }
  long bell = static_cast<long>(enumerate_set_partitions(c.n).size());
  r.out = {{"command", "dim"}, {"n", c.n}, {"bell", bell}, {"factorial", factorial(c.n)}, {"dim", total}, {"blocks", blocks}};
  r.text = "dim E_" + std::to_string(c.n) + " = " + std::to_string(bell) + " * " + std::to_string(factorial(c.n)) +
           " = " + std::to_string(total) + "\n" + os.str();
  r.code = total == bell * factorial(c.n) ? 0 : 1;
  return r;
}

Result cmd_ptl(const RunConfig& c) {
  guard(c, kCombinatorialLimit);
  long d = ptl_dim(c.n);
  return {{{"command", "ptl"}, {"n", c.n}, {"dim", d}}, "dim PTL_" + std::to_string(c.n) + " = " + std::to_string(d) + "\n"};
}

Result cmd_etl(const RunConfig& c) {
  guard(c, kCombinatorialLimit);
  if (c.N < 1) throw ConfigError("N must be at least 1");
  Result r;
  long total = 0;
  json blocks = json::array();
  std::ostringstream os;
  for (const auto& a : alphas(c)) {
    long d = etl_dim(c.n, c.N, a);
    total += d;
    blocks.push_back({{"alpha", alpha_json(a)}, {"dim", d}});
    os << "  alpha " << json(a).dump() << ": " << d << "\n";
  }
  r.out = {{"command", "etl"}, {"n", c.n}, {"N", c.N}, {"dim", total}, {"blocks", blocks}};
  r.text = "dim ETL_{" + std::to_string(c.n) + "," + std::to_string(c.N) + "} = " + std::to_string(total) + "\n" + os.str();
  return r;
}

Result cmd_annihilator(const RunConfig& c) {
  guard(c, kMatrixLimit);
  if (c.N < 1) throw ConfigError("N must be at least 1");
  if (c.method != "both" && c.method != "predicted" && c.method != "bruteforce")
    throw ConfigError("method must be predicted, bruteforce or both");
  auto pts = points(c);
  Result r;
  json reports = json::array();
  std::ostringstream os;
  long total = 0;
  bool all = true;
  for (const auto& a : alphas(c)) {
    json j = {{"alpha", alpha_json(a)}};
    os << "alpha " << json(a).dump() << ":";
    if (c.method == "predicted") {
      long d = predicted_dim(c.n, c.N, a);
      total += d;
      j["predicted"] = d;
      os << " predicted " << d << "\n";
    } else if (c.method == "bruteforce") {
      auto bf = bruteforce_annihilator_dim(a, c.N, pts);
      total += bf.dim;
      bool stable = std::all_of(bf.per_point.begin(), bf.per_point.end(), [&](long d) { return d == bf.dim; });
      all = all && stable;
      j["bruteforce"] = bf.dim;
      j["per_point"] = bf.per_point;
      j["stable"] = stable;
      os << " bruteforce " << bf.dim << (stable ? "" : " (differs between points)") << "\n";
    } else {
      auto rep = verify_predicted_basis(c.n, c.N, a, pts);
      total += rep.predicted;
      all = all && rep.match;
      j["predicted"] = rep.predicted;
      j["bruteforce"] = rep.bruteforce;
      j["per_point"] = rep.per_point;
      j["kills"] = rep.kills;
      j["independent"] = rep.independent;
      j["match"] = rep.match;
      os << " predicted " << rep.predicted << ", bruteforce " << rep.bruteforce << (rep.match ? ", match" : ", MISMATCH")
         << "\n";
    }
    reports.push_back(j);
  }
  json pj = json::array();
  for (const auto& p : pts) pj.push_back(p.str());
  r.out = {{"command", "annihilator"}, {"n", c.n},      {"N", c.N},           {"method", c.method},
           {"points", pj},             {"dim", total},  {"all_match", all},   {"reports", reports}};
  r.text = os.str() + "total " + std::to_string(total) + "\n";
  r.code = all ? 0 : 1;
  return r;
}

Result cmd_verify(const RunConfig& c) {
  guard(c, kMatrixLimit);
  int r_ = c.r ? c.r : c.N;
  if (c.N < 1 || r_ < 1) throw ConfigError("N and r must be at least 1");
  if (c.N > 16 || r_ > 16) throw ConfigError("N and r must fit in a nibble");
  Result r;
  json props = json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& p : run_property_suite(c.n, c.N, r_, c.corrupt)) {
    all = all && p.pass;
    props.push_back({{"name", p.name}, {"pass", p.pass}, {"checks", p.checks}, {"detail", p.detail}});
    os << (p.pass ? "pass " : "FAIL ") << p.name << " (" << p.checks << " checks)" << (p.pass ? "" : ": " + p.detail)
       << "\n";
  }
  r.out = {{"command", "verify"}, {"n", c.n}, {"N", c.N}, {"r", r_}, {"corrupt", c.corrupt}, {"all_pass", all}, {"properties", props}};
  r.text = os.str();
  r.code = all ? 0 : 1;
  return r;
}

Result cmd_basis(const RunConfig& c) {
  guard(c, kMatrixLimit);
  if (c.flavor != "m" && c.flavor != "n") throw ConfigError("flavor must be m or n");
  const auto S = symbolic();
  Result r;
  json groups = json::array();
  std::ostringstream os;
  for (const auto& a : alphas(c)) {
    json els = json::array();
    auto idx = cell_indices(c.n, a);
    for (const auto& ci : idx) {
      auto e = c.flavor == "m" ? m_st(ci.lam, ci.s, ci.t, S) : n_st(ci.lam, ci.s, ci.t, S);
      els.push_back({{"Lambda", lambda_json(ci.lam)}, {"s", tableau_json(ci.s)}, {"t", tableau_json(ci.t)}, {"element", element_json(e)}});
    }
    os << "alpha " << json(a).dump() << ": " << idx.size() << " elements\n";
    groups.push_back({{"alpha", alpha_json(a)}, {"count", idx.size()}, {"elements", els}});
  }
  r.out = {{"command", "basis"}, {"n", c.n}, {"flavor", c.flavor}, {"blocks", groups}};
  r.text = os.str() + "(use --json for the elements)\n";
  return r;
}

Result cmd_multiply(const RunConfig&) {
  json a, b;
  try {
    std::cin >> a >> b;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("expected two JSON elements on stdin: ") + e.what());
  }
  auto x = element_from_json(a), y = element_from_json(b);
  if (x.n() != y.n()) throw ConfigError("elements of different size");
  json p = element_json(mul(x, y, symbolic()));
  return {p, p.dump() + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the braid and ties algebra"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--n", c.n, "degree n");
    s->add_flag("--json", c.as_json, "JSON output");
    s->add_flag("--force", c.force, "lift the size guards");
    s->add_option("--output,-o", c.output, "write the output to a file");
  };
  auto with_points = [&](CLI::App* s) {
    s->add_option("--primes", c.primes, "evaluation primes")->delimiter(',');
    s->add_option("--seed", c.seed, "seed for the evaluation points")->each([&](const std::string&) { c.seeded = true; });
  };

  auto* dim = app.add_subcommand("dim", "dimension of E_n and its blocks");
  common(dim);
  auto* ptl = app.add_subcommand("ptl", "dimension of the partition Temperley-Lieb algebra");
  common(ptl);
  auto* etl = app.add_subcommand("etl", "dimension of the quotient by the annihilator");
  common(etl);
  etl->add_option("--N", c.N, "dim V");
  etl->add_option("--alpha", c.alpha, "block type, e.g. 2,1,1");
  auto* ann = app.add_subcommand("annihilator", "annihilator of tensor space");
  common(ann);
  with_points(ann);
  ann->add_option("--N", c.N, "dim V");
  ann->add_option("--alpha", c.alpha, "block type, e.g. 2,1,1");
  ann->add_option("--method", c.method, "predicted, bruteforce or both");
  auto* ver = app.add_subcommand("verify", "property suites");
  common(ver);
  ver->add_option("--N", c.N, "dim V");
  ver->add_option("--r", c.r, "number of colours (default N)");
  ver->add_flag("--corrupt", c.corrupt, "perturb g_1 to check that failures are caught");
  auto* bas = app.add_subcommand("basis", "cellular basis dump");
  common(bas);
  bas->add_option("--alpha", c.alpha, "block type, e.g. 2,1,1");
  bas->add_option("--flavor", c.flavor, "m or n");
  auto* mul = app.add_subcommand("multiply", "product of two elements read from stdin");
  common(mul);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  Result res;
  try {
    if (c.command == "dim") res = cmd_dim(c);
    else if (c.command == "ptl") res = cmd_ptl(c);
    else if (c.command == "etl") res = cmd_etl(c);
    else if (c.command == "annihilator") res = cmd_annihilator(c);
    else if (c.command == "verify") res = cmd_verify(c);
    else if (c.command == "basis") res = cmd_basis(c);
    else res = cmd_multiply(c);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text = c.as_json ? res.out.dump(2) + "\n" : res.text;
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return 2;
    }
    f << text;
  }
  return res.code;
}
