// hrgraph: build crystals, k-graph skeletons and verification reports.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hrg/rightends.hpp"
#include "hrg/tableaux.hpp"
#include "hrg/verify.hpp"

namespace {

using namespace hrg;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::string algebra = "A2";
  std::string convention = "hongkang";
  std::string crystals;
  std::string output;
  std::string out_file;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

// A Cartan file whose matrix is a built-in one reuses the built-in crystals.
std::optional<RootDatum> builtin_match(const RootDatum& d) {
  for (std::string name : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "C2"}) {
    RootDatum b = RootDatum::builtin(name);
    if (b.cartan_matrix() == d.cartan_matrix()) return b;
  }
  return std::nullopt;
}

AlgebraPtr load_algebra(const Config& cfg) {
  const Convention conv = parse_convention(cfg.convention);
  const bool is_file = cfg.algebra.find('/') != std::string::npos ||
                       cfg.algebra.size() > 5 && cfg.algebra.ends_with(".json");
  if (!is_file) {
    if (!cfg.crystals.empty()) throw PreconditionError("--crystals needs a Cartan data file");
    return Algebra::builtin(cfg.algebra, conv);
  }
  RootDatum d = RootDatum::from_json(read_json(cfg.algebra));
  if (cfg.crystals.empty()) {
    auto b = builtin_match(d);
    if (!b) throw PreconditionError("no built-in crystals for this Cartan matrix; pass --crystals");
    return std::make_shared<Algebra>(std::move(*b), conv);
  }
  auto datum = std::make_shared<const RootDatum>(d);
  const auto j = read_json(cfg.crystals);
  std::vector<Crystal> fund;
  for (int i = 0; i < d.rank(); ++i) {
    const auto& cj = j.is_array() ? j.at(i) : j.at(std::to_string(i + 1));
    fund.push_back(Crystal::from_json(datum, cj));
  }
  return std::make_shared<Algebra>(d, conv, std::move(fund));
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_file);
  if (!out) throw Error("cannot write " + cfg.out_file);
  out << text;
}

std::string ids(const Algebra& alg, const Vertex& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + alg.fundamental(static_cast<int>(i))->label(v[i]);
  return s + ")";
}

nlohmann::json ids_json(const Algebra& alg, const Vertex& v) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(alg.fundamental(static_cast<int>(i))->label(v[i]));
  return a;
}

std::vector<int> parse_indices(const std::string& s, int rank) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int i = 0;
    try {
      i = std::stoi(tok);
    } catch (const std::logic_error&) {
      throw PreconditionError("malformed index list '" + s + "'");
    }
    if (i < 1 || i > rank) throw PreconditionError("index " + tok + " out of range");
    out.push_back(i - 1);
  }
  return out;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--algebra", cfg.algebra, "A1..A9, C2, or a Cartan data JSON file");
  sub->add_option("--convention", cfg.convention, "hongkang or opposite");
  sub->add_option("--crystals", cfg.crystals, "fundamental crystals JSON for a Cartan file");
  sub->add_option("-o,--out", cfg.out_file, "write to a file instead of stdout");
}

int cmd_skeleton(const Config& cfg, bool loops) {
  KGraph kg(load_algebra(cfg));
  const auto g = kg.skeleton();
  emit(cfg, cfg.output == "json" ? g.to_json(loops).dump(2) + "\n" : g.to_dot(loops, "skeleton"));
  return 0;
}

int cmd_weyl(const Config& cfg, const std::string& which) {
  auto alg = load_algebra(cfg);
  const auto& W = alg->weyl();
  ColoredDigraph g;
  if (which == "bruhat") g = W.bruhat_graph();
  else if (which == "right-weak") g = W.right_weak_graph();
  else if (which == "left-weak") g = W.left_weak_graph();
  else throw PreconditionError("unknown graph '" + which + "'");
  emit(cfg, cfg.output == "json" ? g.to_json().dump(2) + "\n" : g.to_dot(true, which));
  return 0;
}

int cmd_vertices(const Config& cfg) {
  KGraph kg(load_algebra(cfg));
  const auto& alg = kg.algebra();
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  for (const auto& v : kg.vertices()) {
    auto w = kg.weyl_label(v);
    const std::string name = w ? alg.weyl().name(*w) : "*";
    j.push_back({{"vertex", ids_json(alg, v)}, {"weyl", w ? nlohmann::json(name) : nlohmann::json()}});
    text += ids(alg, v) + "  " + name + "\n";
  }
  emit(cfg, cfg.output == "json" ? j.dump(2) + "\n" : text);
  return 0;
}

int cmd_braiding(const Config& cfg, const std::string& factors) {
  auto alg = load_algebra(cfg);
  auto ks = parse_indices(factors, alg->rank());
  if (ks.size() != 2) throw PreconditionError("--factors needs two indices");
  const int i = ks[0], j = ks[1];
  auto ci = alg->fundamental(i);
  auto cj = alg->fundamental(j);
  nlohmann::json out = nlohmann::json::object();
  std::string text;
  for (int x = 0; x < ci->size(); ++x)
    for (int y = 0; y < cj->size(); ++y) {
      const std::string in = ci->label(x) + "⊗" + cj->label(y);
      auto s = alg->sigma(i, j, x, y);
      const std::string res = s ? cj->label(s->first) + "⊗" + ci->label(s->second) : "0";
      out[in] = s ? nlohmann::json(res) : nlohmann::json();
      text += "sigma(" + in + ") = " + res + "\n";
    }
  emit(cfg, cfg.output == "json" ? out.dump(2) + "\n" : text);
  return 0;
}

int cmd_rightends(const Config& cfg, const std::string& via) {
  auto alg = load_algebra(cfg);
  if (via != "braiding" && via != "slides") throw PreconditionError("--via is braiding or slides");
  const auto kinds = alg->kinds(alg->datum().rho());
  auto brho = alg->highest(alg->datum().rho());
  nlohmann::json out = nlohmann::json::object();
  std::string text;
  for (int b = 0; b < brho->size(); ++b) {
    const Tuple& t = brho->tuple(b);
    Vertex v;
    if (via == "braiding") {
      v = right_end_tuple(*alg, kinds, t);
    } else {
      for (const auto& c : right_ends_via_slides(from_crystal(*alg, kinds, t)))
        v.push_back(element_of(*alg, c));
    }
    out[brho->label(b)] = ids_json(*alg, v);
    text += "R(" + brho->label(b) + ") = " + ids(*alg, v) + "\n";
  }
  emit(cfg, cfg.output == "json" ? out.dump(2) + "\n" : text);
  return 0;
}

int cmd_keys(const Config& cfg, const std::string& path) {
  const Tableau t = Tableau::from_json(read_json(path));
  if (!t.is_semistandard()) throw PreconditionError("tableau is not semistandard");
  const Tableau lk = left_key(t);
  const Tableau rk = right_key(t);
  if (cfg.output == "json") {
    emit(cfg, nlohmann::json{{"tableau", t.to_json()}, {"left_key", lk.to_json()},
                             {"right_key", rk.to_json()}}
                      .dump(2) +
                  "\n");
  } else {
    emit(cfg, "T  = " + t.to_string() + "\nK- = " + lk.to_string() + "\nK+ = " + rk.to_string() +
                  "\n");
  }
  return 0;
}

int cmd_paths(const Config& cfg, const std::string& degree) {
  KGraph kg(load_algebra(cfg));
  const Weight d = parse_degree(degree, kg.algebra().rank());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : kg.paths_of_degree(d)) out.push_back(kg.path_json(p));
  emit(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite, const std::string& bound,
               bool algebra_given, bool convention_given) {
  verify::Options opt;
  if (algebra_given) opt.algebras = {cfg.algebra};
  if (convention_given) opt.convention = parse_convention(cfg.convention);
  opt.degree_bound = bound;
  const auto reports = verify::run_suite(suite, opt);
  const auto j = verify::suite_json(suite, reports);
  emit(cfg, j.dump(2) + "\n");
  return j.at("ok").get<bool>() ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals, Cartan braidings and the higher-rank graph of a Lie algebra"};
  app.require_subcommand(1);
  Config cfg;
  bool loops = false;
  std::string which = "bruhat", factors = "1,2", via = "braiding", tableau, degree, suite,
              bound;

  auto* sk = app.add_subcommand("skeleton", "emit the skeleton of the k-graph");
  add_common(sk, cfg);
  sk->add_option("--output", cfg.output, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  sk->add_flag("--show-loops", loops, "include loop edges");

  auto* wy = app.add_subcommand("weyl", "emit a Bruhat or weak Bruhat graph");
  add_common(wy, cfg);
  wy->add_option("--graph", which, "bruhat, right-weak or left-weak");
  wy->add_option("--output", cfg.output, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* vx = app.add_subcommand("vertices", "list the vertices with their Weyl labels");
  add_common(vx, cfg);
  vx->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* br = app.add_subcommand("braiding", "tabulate the Cartan braiding of two fundamentals");
  add_common(br, cfg);
  br->add_option("--factors", factors, "two 1-based indices, e.g. 1,2");
  br->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* re = app.add_subcommand("rightends", "right ends of every element of B(rho)");
  add_common(re, cfg);
  re->add_option("--via", via, "braiding or slides")->check(CLI::IsMember({"braiding", "slides"}));
  re->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ky = app.add_subcommand("keys", "left and right keys of a tableau");
  ky->add_option("--tableau", tableau, "JSON rows, top row first")->required();
  ky->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  ky->add_option("-o,--out", cfg.out_file, "write to a file instead of stdout");

  auto* pa = app.add_subcommand("paths", "list the paths of one degree");
  add_common(pa, cfg);
  pa->add_option("--degree", degree, "comma separated, e.g. 1,0")->required();

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  add_common(ve, cfg);
  ve->add_option("--suite", suite, "one of: " + [] {
        std::string s;
        for (const auto& n : verify::suite_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
      }())
      ->required();
  ve->add_option("--degree-bound", bound, "comma separated, e.g. 1,1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*sk) return cmd_skeleton(cfg, loops);
    if (*wy) return cmd_weyl(cfg, which);
    if (*vx) return cmd_vertices(cfg);
    if (*br) return cmd_braiding(cfg, factors);
    if (*re) return cmd_rightends(cfg, via);
    if (*ky) return cmd_keys(cfg, tableau);
    if (*pa) return cmd_paths(cfg, degree);
    if (*ve)
      return cmd_verify(cfg, suite, bound, ve->count("--algebra") > 0,
                        ve->count("--convention") > 0);
  } catch (const std::exception& e) {
    std::cerr << "hrgraph: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
