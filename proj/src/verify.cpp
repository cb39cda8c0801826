#include "hrg/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hrg/rightends.hpp"
#include "hrg/tableaux.hpp"

#ifndef HRG_FIXTURE_DIR
#define HRG_FIXTURE_DIR "fixtures"
#endif

namespace hrg::verify {

namespace {

Report make(std::string name) {
  Report r;
  r.theorem = std::move(name);
  return r;
}

template <class A, class B>
void expect_eq(Report& rep, const A& got, const B& want, const std::string& what) {
  ++rep.instances_checked;
  if (!(got == want)) rep.fail(what);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? sep : "") + xs[k];
  return s;
}

std::string vertex_ids(const Algebra& alg, const Vertex& v) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < v.size(); ++i)
    ids.push_back(alg.fundamental(static_cast<int>(i))->label(v[i]));
  return "(" + join(ids, ",") + ")";
}

Vertex vertex_from_ids(const Algebra& alg, const nlohmann::json& ids) {
  Vertex v;
  for (std::size_t i = 0; i < ids.size(); ++i)
    v.push_back(alg.fundamental(static_cast<int>(i))->index(ids[i].get<std::string>()));
  return v;
}

std::string weyl_or_star(const KGraph& kg, const Vertex& v) {
  auto w = kg.weyl_label(v);
  return w ? kg.algebra().weyl().name(*w) : "*";
}

// Fundamental weights followed by rho.
std::vector<Weight> test_weights(const RootDatum& d) {
  std::vector<Weight> out;
  for (int i = 0; i < d.rank(); ++i) out.push_back(d.fundamental(i));
  if (d.rank() > 1) out.push_back(d.rho());
  return out;
}

std::vector<Weight> degrees_below(const Weight& bound) {
  std::vector<Weight> out{Weight::zero(bound.rank())};
  for (int i = 0; i < bound.rank(); ++i) {
    std::vector<Weight> next;
    for (const auto& w : out)
      for (int k = 0; k <= bound[i]; ++k) {
        Weight x = w;
        x.coords[i] = k;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

bool leq(const Weight& a, const Weight& b) {
  for (int i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// All semistandard tableaux with the given column lengths and entries in 1..n.
std::vector<Tableau> tableaux_of_shape(const std::vector<int>& lengths, int n) {
  std::vector<Tableau> out;
  std::vector<std::vector<Column>> choices;
  for (int len : lengths) {
    std::vector<Column> cs;
    std::function<void(Column&, int)> rec = [&](Column& c, int next) {
      if (static_cast<int>(c.size()) == len) {
        cs.push_back(c);
        return;
      }
      for (int v = next; v <= n; ++v) {
        c.push_back(v);
        rec(c, v + 1);
        c.pop_back();
      }
    };
    Column c;
    rec(c, 1);
    choices.push_back(std::move(cs));
  }
  Tableau t;
  std::function<void(std::size_t)> pick = [&](std::size_t k) {
    if (k == choices.size()) {
      if (t.is_semistandard()) out.push_back(t);
      return;
    }
    for (const auto& c : choices[k]) {
      t.columns.push_back(c);
      pick(k + 1);
      t.columns.pop_back();
    }
  };
  pick(0);
  return out;
}

std::vector<int> rho_lengths(int rank) {
  std::vector<int> out;
  for (int k = rank; k >= 1; --k) out.push_back(k);
  return out;
}

// Semistandard skew tableaux with at most two columns, at most `max_rows`
// rows, entries in 1..n, and a nonempty inner shape.
std::vector<SkewTableau> two_column_skews(int n, int max_rows) {
  std::vector<SkewTableau> out;
  for (int rows = 1; rows <= max_rows; ++rows) {
    // outer: a rows of width 2, then rows - a of width 1; inner: b rows of
    // width 2 then c rows of width 1, b + c <= rows, b <= a.
    for (int a = 0; a <= rows; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; b + c <= rows; ++c) {
          if (b + c == 0) continue;
          if (b == a && b + c >= rows) continue;
          std::vector<std::vector<int>> g(rows);
          std::vector<std::pair<int, int>> cells;
          bool ok = true;
          for (int r = 0; r < rows; ++r) {
            const int width = r < a ? 2 : 1;
            const int inner = r < b ? 2 : (r < b + c ? 1 : 0);
            if (inner > width) ok = false;
            g[r].assign(width, 0);
            for (int col = inner; col < width; ++col) cells.emplace_back(r, col);
          }
          if (!ok || cells.empty()) continue;
          std::function<void(std::size_t)> fill = [&](std::size_t k) {
            if (k == cells.size()) {
              SkewTableau s(g);
              if (s.is_semistandard()) out.push_back(std::move(s));
              return;
            }
            auto [r, col] = cells[k];
            for (int v = 1; v <= n; ++v) {
              if (col > 0 && g[r][col - 1] != 0 && g[r][col - 1] > v) continue;
              if (r > 0 && col < static_cast<int>(g[r - 1].size()) && g[r - 1][col] != 0 &&
                  g[r - 1][col] >= v)
                continue;
              g[r][col] = v;
              fill(k + 1);
              g[r][col] = 0;
            }
          };
          try {
            SkewTableau{g};  // rejects non-partition shapes
          } catch (const Error&) {
            continue;
          }
          fill(0);
        }
  }
  return out;
}

AlgebraPtr algebra(const std::string& name, Convention c) { return Algebra::builtin(name, c); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"a2-fixtures", "c2-fixtures", "kgraph-axioms",
                                              "embeddings",  "keys",        "lemmas"};
  return names;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("HRGRAPH_FIXTURES"); env && *env) return env;
  return HRG_FIXTURE_DIR;
}

nlohmann::json load_fixture(const std::string& relative) {
  const std::string path = fixture_dir() + "/" + relative;
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed fixture " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- A2 tables

Report a2_vertices(const KGraph& kg) {
  Report rep = make("a2-vertices");
  const auto& alg = kg.algebra();
  const auto fx = load_fixture("a2/graphs.json");
  expect_eq(rep, kg.vertices().size(), std::size_t{6}, "vertex count is not 6");
  std::set<Vertex> image;
  for (const auto& w : alg.weyl().elements()) image.insert(kg.weyl_vertex(w));
  expect_eq(rep, image.size(), std::size_t{6}, "weyl_vertex is not injective");
  expect_eq(rep, std::set<Vertex>(kg.vertices().begin(), kg.vertices().end()), image,
            "vertex set differs from the Weyl image");
  for (const auto& [name, ids] : fx.at("vertices").items()) {
    const Vertex want = vertex_from_ids(alg, ids);
    const Vertex got = kg.weyl_vertex(alg.weyl().parse(name));
    expect_eq(rep, got, want,
              name + ": got " + vertex_ids(alg, got) + ", want " + vertex_ids(alg, want));
  }
  return rep;
}

Report a2_skeleton(const KGraph& kg) {
  Report rep = make("a2-skeleton");
  const auto& alg = kg.algebra();
  const auto& W = alg.weyl();
  const auto fx = load_fixture("a2/graphs.json");
  const auto g = kg.skeleton();
  std::multiset<std::tuple<std::string, std::string, int>> got, want;
  std::map<std::pair<int, int>, int> loops;
  for (const auto& e : g.edges()) {
    if (e.src == e.dst) {
      ++loops[{e.src, e.color}];
      continue;
    }
    got.emplace(weyl_or_star(kg, kg.vertices()[e.src]), weyl_or_star(kg, kg.vertices()[e.dst]),
                e.color + 1);
  }
  for (const auto& e : fx.at("skeleton"))
    want.emplace(W.name(W.parse(e.at("src").get<std::string>())),
                 W.name(W.parse(e.at("dst").get<std::string>())), e.at("color").get<int>());
  expect_eq(rep, got, want, "non-loop edge multiset differs from the figure");
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int c = 0; c < alg.rank(); ++c) {
      auto it = loops.find({v, c});
      expect_eq(rep, it == loops.end() ? 0 : it->second, 1,
                g.vertex_labels()[v] + " does not carry exactly one loop of color " +
                    std::to_string(c + 1));
    }
  return rep;
}

Report a2_braiding(const Algebra& alg) {
  Report rep = make("a2-braiding");
  const auto fx = load_fixture("a2/braiding.json");
  const auto src = alg.product({0, 1});
  const auto dst = alg.product({1, 0});
  for (const auto& [in, out] : fx.at("sigma").items()) {
    const Tuple t = src.parse(in);
    auto got = alg.sigma(0, 1, t[0], t[1]);
    if (out.is_null()) {
      expect_eq(rep, got.has_value(), false, "sigma(" + in + ") should be 0");
      continue;
    }
    const Tuple want = dst.parse(out.get<std::string>());
    expect_eq(rep, got.has_value() && Tuple{got->first, got->second} == want, true,
              "sigma(" + in + ") differs from " + out.get<std::string>());
  }
  return rep;
}

Report a2_jdt_braiding(const Algebra& alg) {
  Report rep = make("a2-jdt-braiding");
  const auto fx = load_fixture("a2/jdt.json");
  for (const auto& row : fx.at("slides")) {
    const Tableau t = Tableau::from_json(row.at("straight"));
    const SkewTableau want = SkewTableau::from_json(row.at("skew"));
    auto got = two_column_braiding(t.columns.at(0), t.columns.at(1));
    const std::string name = t.to_string();
    expect_eq(rep, got.has_value(), true, name + ": slide reports a non-Cartan pair");
    if (!got) continue;
    expect_eq(rep, std::vector<Column>{got->first, got->second}, want.columns(),
              name + ": slid columns differ from the figure");
    expect_eq(rep, rectify(want), t, name + ": the skew tableau does not rectify back");
    // Columns (left, right) of the straight tableau are b x a; after the
    // slide the tensor reads right column x left column.
    const int a = element_of(alg, t.columns[1]);
    const int b = element_of(alg, t.columns[0]);
    auto s = alg.sigma(0, 1, a, b);
    expect_eq(rep,
              s.has_value() && s->first == element_of(alg, got->second) &&
                  s->second == element_of(alg, got->first),
              true, name + ": slide disagrees with the braiding table");
  }
  // The ninth table entry: a1 x b3 is not Cartan, and the slide detects it.
  const Tuple bad = alg.product({0, 1}).parse("a1b3");
  expect_eq(rep,
            two_column_braiding(column_of(alg, 1, bad[1]), column_of(alg, 0, bad[0])).has_value(),
            false, "a1 x b3 should not braid by slides");
  return rep;
}

Report a2_right_ends(const Algebra& alg) {
  Report rep = make("a2-right-ends");
  const auto fx = load_fixture("a2/rightends.json");
  const std::vector<int> kinds{0, 1};
  const auto prod = alg.product(kinds);
  auto cart = alg.cartan(kinds);
  expect_eq(rep, fx.at("right_ends").size(), static_cast<std::size_t>(cart->size()),
            "the table does not cover the Cartan component");
  for (const auto& [in, ids] : fx.at("right_ends").items()) {
    const Tuple t = prod.parse(in);
    const Vertex want = vertex_from_ids(alg, ids);
    expect_eq(rep, right_end_tuple(alg, kinds, t), want, "R(" + in + ") via braiding chains");
    Vertex incl;
    for (int i = 0; i < alg.rank(); ++i)
      incl.push_back(right_end_inclusion(alg, alg.datum().fundamental(i), kinds, t).value_or(-1));
    expect_eq(rep, incl, want, "R(" + in + ") via the canonical inclusion");
    const Tableau tab = from_crystal(alg, kinds, t);
    Vertex slides;
    for (const auto& c : right_ends_via_slides(tab)) slides.push_back(element_of(alg, c));
    expect_eq(rep, slides, want, "R(" + in + ") via slides");
    auto key = left_key(tab).columns;
    std::reverse(key.begin(), key.end());
    Vertex keyv;
    for (const auto& c : key) keyv.push_back(element_of(alg, c));
    expect_eq(rep, keyv, want, "R(" + in + ") differs from the left key columns");
  }
  for (const auto& row : fx.at("slides")) {
    const Tableau t = Tableau::from_json(row.at("tableau"));
    auto want = Tableau::from_json(row.at("right_end")).columns;
    std::reverse(want.begin(), want.end());
    expect_eq(rep, right_ends_via_slides(t), want, "slide right ends of " + t.to_string());
  }
  return rep;
}

Report a2_red_edges(const KGraph& kg) {
  Report rep = make("a2-red-edges");
  const auto& alg = kg.algebra();
  const auto& W = alg.weyl();
  const auto fx = load_fixture("a2/red_edges.json");
  const int color = fx.at("color").get<int>() - 1;
  const Weight om = alg.datum().fundamental(color);
  auto b = alg.highest(om);
  for (const auto& [label, w] : fx.at("extremal").items())
    expect_eq(rep, alg.extremal(W.parse(w.get<std::string>()), om), b->index(label),
              label + " is not b_{" + w.get<std::string>() + " omega}");
  std::set<KPath> table;
  for (const auto& row : fx.at("rows")) {
    const auto w = W.parse(row.at("range").get<std::string>());
    const auto w2 = W.parse(row.at("element").get<std::string>());
    const auto src = W.parse(row.at("source").get<std::string>());
    const std::string name = "(" + W.name(w) + ", " + W.name(w2) + ")";
    expect_eq(rep, W.bruhat_leq(w2, w), true, name + ": rows need w >= w'");
    KPath p{kg.weyl_vertex(w), om, alg.extremal(w2, om)};
    if (!kg.is_path(p.vertex, p.degree, p.element)) {
      rep.fail(name + " is not a path");
      continue;
    }
    expect_eq(rep, kg.source(p), kg.weyl_vertex(src), name + ": source is not " + W.name(src));
    table.insert(p);
  }
  const auto all = kg.paths_of_degree(om);
  expect_eq(rep, table, std::set<KPath>(all.begin(), all.end()),
            "the table does not exhaust the color-1 paths");
  return rep;
}

Report a2_weyl_graphs(const Algebra& alg) {
  Report rep = make("a2-weyl-graphs");
  const auto& W = alg.weyl();
  const auto fx = load_fixture("a2/graphs.json");
  auto name = [&](const ColoredDigraph&, int v) { return W.name(W.element(v)); };
  // Rows name group elements by any word; compare canonical names.
  auto canon = [&](const std::string& s) { return W.name(W.parse(s)); };
  {
    std::set<std::pair<std::string, std::string>> got, want;
    const auto g = W.bruhat_graph();
    for (const auto& e : g.edges()) got.emplace(name(g, e.src), name(g, e.dst));
    for (const auto& e : fx.at("bruhat"))
      want.emplace(canon(e[0].get<std::string>()), canon(e[1].get<std::string>()));
    expect_eq(rep, g.edges().size(), std::size_t{9}, "Bruhat graph does not have 9 edges");
    expect_eq(rep, got, want, "Bruhat graph differs from the figure");
  }
  for (const char* key : {"left_weak", "right_weak"}) {
    const auto g = std::string(key) == "left_weak" ? W.left_weak_graph() : W.right_weak_graph();
    std::set<std::tuple<std::string, std::string, int>> got, want;
    for (const auto& e : g.edges()) got.emplace(name(g, e.src), name(g, e.dst), e.color + 1);
    for (const auto& e : fx.at(key))
      want.emplace(canon(e.at("src").get<std::string>()), canon(e.at("dst").get<std::string>()),
                   e.at("color").get<int>());
    expect_eq(rep, got, want, std::string(key) + " graph differs from the figure");
  }
  return rep;
}

// ---------------------------------------------------------------- C2 tables

Report c2_crystal_graph(const Algebra& alg) {
  Report rep = make("c2-crystal-graph");
  const auto fx = load_fixture("c2/tables.json");
  for (const auto& [k, f] : fx.at("fundamentals").items()) {
    const auto c = alg.fundamental(std::stoi(k) - 1);
    std::set<std::tuple<std::string, int, std::string>> got, want;
    for (int i = 0; i < alg.rank(); ++i)
      for (int b = 0; b < c->size(); ++b)
        if (auto n = c->f(i, b)) got.emplace(c->label(b), i + 1, c->label(*n));
    for (const auto& e : f.at("chain"))
      want.emplace(e[0].get<std::string>(), e[1].get<int>(), e[2].get<std::string>());
    expect_eq(rep, got, want, "B(omega_" + k + ") differs from the displayed chain");
  }
  const std::vector<int> kinds{0, 1};
  auto cart = alg.cartan(kinds);
  const auto prod = alg.product(kinds);
  expect_eq(rep, cart->size(), 16, "Cartan component does not have 16 elements");
  std::set<std::tuple<Tuple, int, Tuple>> got, want;
  for (int b = 0; b < cart->size(); ++b)
    for (int i = 0; i < alg.rank(); ++i)
      if (auto n = cart->f(i, b)) got.emplace(cart->tuple(b), i + 1, cart->tuple(*n));
  for (const auto& e : fx.at("crystal_graph"))
    want.emplace(prod.parse(e[0].get<std::string>()), e[1].get<int>(),
                 prod.parse(e[2].get<std::string>()));
  expect_eq(rep, got, want, "crystal graph of B(rho) differs from the figure");
  return rep;
}

Report c2_braiding(const Algebra& alg) {
  Report rep = make("c2-braiding");
  const auto fx = load_fixture("c2/tables.json");
  const auto src = alg.product({0, 1});
  const auto dst = alg.product({1, 0});
  expect_eq(rep, fx.at("braiding").size(), static_cast<std::size_t>(alg.cartan({0, 1})->size()),
            "the table does not cover the Cartan component");
  for (const auto& [in, out] : fx.at("braiding").items()) {
    const Tuple t = src.parse(in);
    auto got = alg.sigma(0, 1, t[0], t[1]);
    const Tuple want = dst.parse(out.get<std::string>());
    expect_eq(rep, got.has_value() && Tuple{got->first, got->second} == want, true,
              "sigma(" + in + ") differs from " + out.get<std::string>());
  }
  return rep;
}

Report c2_right_ends(const KGraph& kg) {
  Report rep = make("c2-right-ends");
  const auto& alg = kg.algebra();
  const auto& W = alg.weyl();
  const auto fx = load_fixture("c2/tables.json");
  const std::vector<int> kinds{0, 1};
  const auto prod = alg.product(kinds);
  for (const auto& [in, ids] : fx.at("right_ends").items()) {
    const Tuple t = prod.parse(in);
    const Vertex want = vertex_from_ids(alg, ids);
    const Vertex got = right_end_tuple(alg, kinds, t);
    expect_eq(rep, got, want,
              "R(" + in + "): got " + vertex_ids(alg, got) + ", want " + vertex_ids(alg, want));
    Vertex incl;
    for (int i = 0; i < alg.rank(); ++i)
      incl.push_back(right_end_inclusion(alg, alg.datum().fundamental(i), kinds, t).value_or(-1));
    expect_eq(rep, incl, want, "R(" + in + ") via the canonical inclusion");
    const std::string label = fx.at("weyl_labels").at(in).get<std::string>();
    auto w = kg.weyl_label(got);
    if (label == "*") {
      expect_eq(rep, w.has_value(), false, in + " should not be a Weyl vertex");
    } else {
      expect_eq(rep, w.has_value() && *w == W.parse(label), true,
                in + " should be the vertex of " + label);
      const std::string key = fx.at("right_keys").at(in).get<std::string>();
      expect_eq(rep, w.has_value() && *w == W.parse(key), true,
                in + ": extremal right end disagrees with the printed right key " + key);
    }
  }
  expect_eq(rep, static_cast<int>(kg.vertices().size()), fx.at("distinct_vertices").get<int>(),
            "distinct vertex count");
  int in_image = 0;
  for (const auto& v : kg.vertices()) in_image += kg.weyl_label(v).has_value();
  expect_eq(rep, in_image, W.size(), "Weyl image size");
  int disagree = 0;
  for (const auto& [in, key] : fx.at("right_keys").items())
    disagree += fx.at("weyl_labels").at(in) != key;
  rep.info["keys_differ_at"] = disagree;
  return rep;
}

// ---------------------------------------------------------------- k-graph

Report factorization(const KGraph& kg, const Weight& bound) {
  Report rep = make("kgraph-factorization " + kg.algebra().datum().name());
  for (const auto& p : kg.enumerate_paths(bound)) {
    for (const auto& m : degrees_below(p.degree)) {
      ++rep.instances_checked;
      try {
        auto [g, h] = kg.factorize(p, m);
        if (m.is_zero() && !(g == kg.identity(p.vertex) && h == p))
          rep.fail("degree-0 factor of " + nlohmann::json(kg.path_json(p)).dump() +
                   " is not the range vertex");
      } catch (const Error& e) {
        rep.fail(kg.path_json(p).dump() + ": " + e.what());
      }
    }
  }
  rep.info["degree_bound"] = degree_string(bound);
  return rep;
}

Report associativity(const KGraph& kg, const Weight& bound) {
  Report rep = make("kgraph-associativity " + kg.algebra().datum().name());
  const auto paths = kg.enumerate_paths(bound);
  std::map<Vertex, std::vector<const KPath*>> by_range;
  for (const auto& p : paths) by_range[p.vertex].push_back(&p);
  for (const auto& g : paths) {
    for (const KPath* h : by_range[kg.source(g)]) {
      if (!leq(g.degree + h->degree, bound)) continue;
      KPath gh;
      try {
        gh = kg.compose(g, *h);
      } catch (const Error& e) {
        rep.fail(std::string("composition failed: ") + e.what());
        continue;
      }
      ++rep.instances_checked;
      if (kg.source(gh) != kg.source(*h)) rep.fail("source of a composite is wrong");
      if (gh.degree != g.degree + h->degree) rep.fail("degree is not additive");
      for (const KPath* k : by_range[kg.source(*h)]) {
        if (!leq(gh.degree + k->degree, bound)) continue;
        ++rep.instances_checked;
        try {
          if (kg.compose(gh, *k) != kg.compose(g, kg.compose(*h, *k)))
            rep.fail("(gh)k != g(hk) for g = " + kg.path_json(g).dump());
        } catch (const Error& e) {
          rep.fail(std::string("composition failed: ") + e.what());
        }
      }
    }
  }
  return rep;
}

Report order_compatibility(const KGraph& kg, const Weight& bound) {
  Report rep = make("kgraph-order " + kg.algebra().datum().name());
  for (const auto& p : kg.enumerate_paths(bound)) {
    ++rep.instances_checked;
    if (!kg.vertex_leq(p.vertex, kg.source(p)))
      rep.fail("r(e) <= s(e) fails for " + kg.path_json(p).dump());
  }
  const auto g = kg.skeleton();
  for (const auto& e : g.edges()) {
    if (e.src == e.dst) continue;
    ++rep.instances_checked;
    if (kg.vertex_leq(kg.vertices()[e.src], kg.vertices()[e.dst]))
      rep.fail("skeleton edge " + g.vertex_labels()[e.src] + " -> " + g.vertex_labels()[e.dst] +
               " closes a cycle");
  }
  const auto& W = kg.algebra().weyl();
  for (const auto& v : kg.vertices()) {
    ++rep.instances_checked;
    if (!kg.vertex_leq(v, kg.weyl_vertex(W.identity())) ||
        !kg.vertex_leq(kg.weyl_vertex(W.longest()), v))
      rep.fail(vertex_ids(kg.algebra(), v) + " lies outside [longest, identity]");
  }
  return rep;
}

Report representative_independence(const KGraph& kg, const Weight& bound) {
  Report rep = make("kgraph-representatives " + kg.algebra().datum().name());
  const auto& alg = kg.algebra();
  for (const auto& lambda : degrees_below(bound)) {
    auto bl = alg.highest(lambda);
    for (const auto& v : kg.vertices()) {
      for (int b = 0; b < bl->size(); ++b) {
        const bool path = kg.is_path(v, lambda, b);
        std::optional<Vertex> src;
        if (path) src = kg.source(KPath{v, lambda, b});
        for (const auto& c : kg.fiber(v)) {
          ++rep.instances_checked;
          if (kg.is_path_with(c, lambda, b) != path) {
            rep.fail("membership of " + alg.label(alg.kinds(lambda), bl->tuple(b)) + " at " +
                     vertex_ids(alg, v) + " depends on the representative");
            continue;
          }
          if (path && kg.source_with(c, lambda, b) != *src)
            rep.fail("source of " + alg.label(alg.kinds(lambda), bl->tuple(b)) + " at " +
                     vertex_ids(alg, v) + " depends on the representative");
        }
      }
    }
  }
  return rep;
}

Report source_identity(const KGraph& kg) {
  Report rep = make("source-identity " + kg.algebra().datum().name());
  const auto& alg = kg.algebra();
  auto brho = alg.highest(alg.datum().rho());
  const auto rho_kinds = alg.kinds(alg.datum().rho());
  for (int i = 0; i < alg.rank(); ++i) {
    const Weight lambda = alg.datum().fundamental(i);
    auto bl = alg.highest(lambda);
    for (int c = 0; c < brho->size(); ++c)
      for (int b = 0; b < bl->size(); ++b) {
        if (!is_cartan(alg, concat(rho_kinds, alg.kinds(lambda)),
                       concat(brho->tuple(c), bl->tuple(b))))
          continue;
        ++rep.instances_checked;
        if (!source_identity_check(alg, brho->tuple(c), lambda, bl->tuple(b)))
          rep.fail("R_i(c x b) != R_i(c_i x b) for c = " + brho->label(c) + ", b = " +
                   bl->label(b));
      }
  }
  return rep;
}

Report paths_bruhat(const KGraph& kg) {
  Report rep = make("paths-bruhat " + kg.algebra().datum().name());
  const auto& alg = kg.algebra();
  const auto& W = alg.weyl();
  for (const auto& lambda : test_weights(alg.datum()))
    for (const auto& w : W.elements())
      for (const auto& w2 : W.elements()) {
        if (!W.bruhat_leq(w2, w)) continue;
        ++rep.instances_checked;
        if (!kg.is_path(kg.weyl_vertex(w), lambda, alg.extremal(w2, lambda)))
          rep.fail("(b_{" + W.name(w) + " rho}, b_{" + W.name(w2) + " " + to_string(lambda) +
                   "}) is not a path");
      }
  return rep;
}

// ---------------------------------------------------------------- embeddings

Report right_weak(const KGraph& kg) {
  Report rep = validate_right_weak(kg);
  rep.theorem += " " + kg.algebra().datum().name();
  const long long n = uniqueness_search_right_weak(kg);
  expect_eq(rep, n, 1LL, "found " + std::to_string(n) + " right-weak embeddings, expected 1");
  rep.info["embeddings"] = n;
  rep.info["unanchored_embeddings"] = uniqueness_search_right_weak(kg, false);
  return rep;
}

Report left_weak(const KGraph& kg) {
  const std::string name = kg.algebra().datum().name();
  Report rep = make("embedding-leftweak " + name);
  const long long n = left_weak_embedding_search(kg);
  rep.info["embeddings"] = n;
  rep.info["unanchored_embeddings"] = left_weak_embedding_search(kg, false);
  if (name == "A2") expect_eq(rep, n, 0LL, "A2 admits a left-weak embedding");
  if (name == "A1") expect_eq(rep, n, 1LL, "A1 should embed its single edge");
  return rep;
}

Report bruhat_embeddings(const KGraph& kg, const Weight& bound) {
  Report rep = validate_all_bruhat(kg, bound);
  rep.theorem += " " + kg.algebra().datum().name();
  auto cands = coloring_candidates(kg, bound);
  long double count = 1;
  for (const auto& c : cands) count *= static_cast<long double>(c.size());
  if (count < 4e18L)
    rep.info["colorings"] = static_cast<long long>(count);
  else
    rep.info["colorings"] = static_cast<double>(count);
  rep.info["degree_bound"] = degree_string(bound);
  Report minimal = validate_bruhat(kg, minimal_coloring(kg));
  rep.instances_checked += minimal.instances_checked;
  for (auto& f : minimal.failures) rep.fail("minimal coloring: " + f);
  return rep;
}

Report skeleton_vs_extremal(const KGraph& kg) {
  const auto& alg = kg.algebra();
  const auto& W = alg.weyl();
  const std::string name = alg.datum().name();
  Report rep = make("skeleton-extremal " + name);
  long long missing = 0;
  for (int i = 0; i < alg.rank(); ++i) {
    const Weight om = alg.datum().fundamental(i);
    std::set<KPath> ext;
    for (const auto& w : W.elements())
      for (const auto& w2 : W.elements())
        if (W.bruhat_leq(w2, w)) ext.insert(KPath{kg.weyl_vertex(w), om, alg.extremal(w2, om)});
    for (const auto& p : kg.paths_of_degree(om)) {
      ++rep.instances_checked;
      if (!ext.count(p)) {
        ++missing;
        if (name == "A2") rep.fail("skeleton edge " + kg.path_json(p).dump() + " is not extremal");
      }
    }
  }
  rep.info["non_extremal_edges"] = missing;
  return rep;
}

// ---------------------------------------------------------------- keys

Report keys_example() {
  Report rep = make("keys-example");
  const auto fx = load_fixture("keys/example-keys-expected.json");
  const Tableau t = Tableau::from_json(load_fixture("fig-example-keys.json"));
  expect_eq(rep, t, Tableau::from_json(fx.at("tableau")), "example tableau files disagree");
  expect_eq(rep, left_key(t), Tableau::from_json(fx.at("left_key")), "left key");
  expect_eq(rep, right_key(t), Tableau::from_json(fx.at("right_key")), "right key");
  std::set<std::vector<std::vector<int>>> seen;
  const auto lt = left_key_trace(t).trace;
  const auto rt = right_key_trace(t).trace;
  for (const auto* tr : {&lt, &rt})
    for (const auto& cols : *tr) seen.insert(SkewTableau::from_json(column_layout(cols)).rows());
  for (const auto& s : fx.at("skew")) {
    const SkewTableau want = SkewTableau::from_json(s);
    expect_eq(rep, seen.count(want.rows()), std::size_t{1},
              want.to_string() + " is not produced by the slides");
    expect_eq(rep, rectify(want), t, want.to_string() + " does not rectify to T");
  }
  return rep;
}

Report key_idempotence(const Algebra& alg) {
  Report rep = make("key-idempotence " + alg.datum().name());
  const int n = alg.rank() + 1;
  std::vector<std::vector<int>> shapes{{2, 1}, {1}, {2}, {3, 2, 1}, {2, 1, 1}};
  for (const auto& shape : shapes) {
    if (shape.front() > alg.rank()) continue;
    for (const auto& t : tableaux_of_shape(shape, n)) {
      const Tableau lk = left_key(t);
      const Tableau rk = right_key(t);
      expect_eq(rep, left_key(lk), lk, "K-(K-(T)) != K-(T) for " + t.to_string());
      expect_eq(rep, right_key(rk), rk, "K+(K+(T)) != K+(T) for " + t.to_string());
      expect_eq(rep, is_key(lk) && is_key(rk), true, "keys of " + t.to_string() + " not nested");
      expect_eq(rep, lk.shape() == t.shape() && rk.shape() == t.shape(), true,
                "key shape of " + t.to_string());
      if (is_key(t)) expect_eq(rep, lk == t && rk == t, true, t.to_string() + " is a key");
      if (t.columns.size() == 1) expect_eq(rep, lk == t && rk == t, true, "single column");
    }
  }
  return rep;
}

Report keys_ends(const KGraph& kg) {
  const auto& alg = kg.algebra();
  Report rep = make("keys-ends " + alg.datum().name());
  const auto kinds = alg.kinds(alg.datum().rho());
  auto brho = alg.highest(alg.datum().rho());
  std::set<Tableau> keys;
  for (int b = 0; b < brho->size(); ++b) {
    const Tuple& t = brho->tuple(b);
    const Tableau tab = from_crystal(alg, kinds, t);
    expect_eq(rep, to_crystal(alg, tab), std::make_pair(kinds, t), "round trip of " + brho->label(b));
    const Tableau key = left_key(tab);
    keys.insert(key);
    auto cols = key.columns;
    std::reverse(cols.begin(), cols.end());
    Vertex fromkey;
    for (const auto& c : cols) fromkey.push_back(element_of(alg, c));
    expect_eq(rep, right_end_tuple(alg, kinds, t), fromkey,
              "R(" + brho->label(b) + ") differs from the left key of " + tab.to_string());
  }
  expect_eq(rep, static_cast<int>(keys.size()), alg.weyl().size(), "number of left keys");
  expect_eq(rep, static_cast<int>(kg.vertices().size()), alg.weyl().size(), "number of vertices");
  rep.info["vertices"] = kg.vertices().size();
  return rep;
}

Report frankness(const Algebra& alg) {
  Report rep = make("frankness " + alg.datum().name());
  for (const auto& t : tableaux_of_shape(rho_lengths(alg.rank()), alg.rank() + 1)) {
    auto lengths = t.shape();
    std::sort(lengths.begin(), lengths.end());
    auto lt = left_key_trace(t).trace;
    auto rt = right_key_trace(t).trace;
    lt.insert(lt.end(), rt.begin(), rt.end());
    for (const auto& cols : lt) {
      std::vector<int> ls;
      for (const auto& c : cols) ls.push_back(static_cast<int>(c.size()));
      std::sort(ls.begin(), ls.end());
      expect_eq(rep, ls, lengths, "column lengths are not a permutation for " + t.to_string());
      const SkewTableau s = SkewTableau::from_json(column_layout(cols));
      expect_eq(rep, s.is_semistandard(), true, s.to_string() + " is not semistandard");
      expect_eq(rep, rectify(s), t, s.to_string() + " does not rectify to " + t.to_string());
    }
  }
  return rep;
}

namespace {

void all_rectifications(const SkewTableau& s, std::set<Tableau>& out, int& budget) {
  if (budget-- <= 0) return;
  if (s.is_straight()) {
    out.insert(s.to_tableau());
    return;
  }
  for (const auto& [r, c] : s.inner_corners()) all_rectifications(jdt_slide(s, r, c), out, budget);
}

}  // namespace

Report slide_order(const Algebra& alg) {
  Report rep = make("slide-order " + alg.datum().name());
  std::vector<SkewTableau> cases = two_column_skews(alg.rank() + 1, alg.rank() + 1);
  for (const auto& t : tableaux_of_shape(rho_lengths(alg.rank()), alg.rank() + 1))
    for (const auto& cols : left_key_trace(t).trace)
      cases.push_back(SkewTableau::from_json(column_layout(cols)));
  for (const auto& s : cases) {
    std::set<Tableau> results;
    int budget = 5000;
    all_rectifications(s, results, budget);
    expect_eq(rep, results.size(), std::size_t{1},
              s.to_string() + " rectifies to " + std::to_string(results.size()) + " tableaux");
  }
  return rep;
}

Report coplactic(const Algebra& alg) {
  Report rep = make("coplactic " + alg.datum().name());
  for (const auto& s : two_column_skews(alg.rank() + 1, alg.rank() + 1)) {
    for (const auto& [r, c] : s.inner_corners()) {
      const SkewTableau slid = jdt_slide(s, r, c);
      for (int i = 0; i < alg.rank(); ++i) {
        for (bool lower : {true, false}) {
          auto op = [&](const SkewTableau& x) { return lower ? skew_f(alg, x, i) : skew_e(alg, x, i); };
          auto a = op(s);
          std::optional<SkewTableau> lhs;
          if (a) lhs = jdt_slide(*a, r, c);
          expect_eq(rep, lhs, op(slid),
                    std::string(lower ? "F" : "E") + std::to_string(i + 1) +
                        " does not commute with the slide on " + s.to_string());
        }
      }
    }
  }
  return rep;
}

Report braiding_via_slides(const Algebra& alg) {
  Report rep = make("braiding-via-slides " + alg.datum().name());
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j) {
      const int ni = alg.fundamental(i)->size();
      const int nj = alg.fundamental(j)->size();
      for (int x = 0; x < ni; ++x)
        for (int y = 0; y < nj; ++y) {
          // x (kind i) tensor y (kind j) is the column pair (col y, col x).
          auto s = alg.sigma(i, j, x, y);
          auto t = two_column_braiding(column_of(alg, j, y), column_of(alg, i, x));
          std::optional<std::pair<int, int>> via;
          if (t) via = std::make_pair(element_of(alg, t->second), element_of(alg, t->first));
          expect_eq(rep, via, s,
                    "slides disagree with sigma on " + alg.fundamental(i)->label(x) + " x " +
                        alg.fundamental(j)->label(y));
        }
    }
  return rep;
}

// ---------------------------------------------------------------- lemmas

Report lemma_epsilon_w(const Algebra& alg) {
  Report rep = make("epsilon-extremal " + alg.datum().name());
  const auto& W = alg.weyl();
  for (const auto& lambda : test_weights(alg.datum())) {
    auto bl = alg.highest(lambda);
    for (const auto& w : W.elements()) {
      const int b = alg.extremal(w, lambda);
      expect_eq(rep, bl->weight(b), W.act(w, lambda), "wt(b_{w lambda}) != w lambda");
      for (int i = 0; i < alg.rank(); ++i) {
        const int l = W.length(W.multiply(W.simple(i), w));
        const std::string at = W.name(w) + ", i = " + std::to_string(i + 1) + ", " + to_string(lambda);
        if (l > W.length(w)) expect_eq(rep, bl->epsilon(i, b), 0, "epsilon != 0 at " + at);
        else expect_eq(rep, bl->phi(i, b), 0, "phi != 0 at " + at);
      }
    }
  }
  return rep;
}

Report lemma_action_f(const Algebra& alg) {
  Report rep = make("f-string-extremal " + alg.datum().name());
  const auto& W = alg.weyl();
  const auto lams = test_weights(alg.datum());
  for (const auto& la : lams)
    for (const auto& lb : lams) {
      auto ca = alg.highest(la);
      auto cb = alg.highest(lb);
      TensorProduct tp({ca, cb}, alg.convention());
      for (const auto& w : W.elements())
        for (const auto& w2 : W.elements())
          for (int i = 0; i < alg.rank(); ++i) {
            const auto si = W.simple(i);
            if (W.length(W.multiply(si, w)) < W.length(w)) continue;
            if (W.length(W.multiply(si, w2)) < W.length(w2)) continue;
            const int x = alg.extremal(w, la);
            const int y = alg.extremal(w2, lb);
            const int n = alg.datum().pairing(W.act(w, la), i);
            const int n2 = alg.datum().pairing(W.act(w2, lb), i);
            const std::string at = "w = " + W.name(w) + ", w' = " + W.name(w2) + ", i = " +
                                   std::to_string(i + 1);
            std::optional<Tuple> cur = Tuple{x, y};
            Tuple expect{x, y};
            for (int k = 1; k <= n + n2; ++k) {
              cur = cur ? tp.f(i, *cur) : std::nullopt;
              const int slot = k <= n ? 0 : 1;
              const auto step = (slot == 0 ? ca : cb)->f(i, expect[slot]);
              ++rep.instances_checked;
              if (step) expect[slot] = *step;
              if (!cur || !step || *cur != expect) {
                rep.fail("F^" + std::to_string(k) + " differs at " + at);
                break;
              }
              if (k == n)
                expect_eq(rep, *cur, Tuple{ca->s(i, x), y}, "F^n != s_i x b' at " + at);
            }
            expect_eq(rep, tp.s(i, {x, y}), Tuple{ca->s(i, x), cb->s(i, y)},
                      "s_i does not act factorwise at " + at);
          }
    }
  return rep;
}

Report cartan_bruhat(const Algebra& alg) {
  Report rep = make("cartan-bruhat " + alg.datum().name());
  const auto& W = alg.weyl();
  const auto lams = test_weights(alg.datum());
  for (const auto& la : lams)
    for (const auto& lb : lams) {
      const auto kinds = concat(alg.kinds(la), alg.kinds(lb));
      for (const auto& w : W.elements())
        for (const auto& w2 : W.elements()) {
          if (!W.bruhat_leq(w2, w)) continue;
          ++rep.instances_checked;
          const Tuple t = concat(alg.extremal_tuple(w, la), alg.extremal_tuple(w2, lb));
          if (!is_cartan(alg, kinds, t))
            rep.fail("b_{" + W.name(w) + " " + to_string(la) + "} x b_{" + W.name(w2) + " " +
                     to_string(lb) + "} is not Cartan");
        }
    }
  return rep;
}

Report source_end(const Algebra& alg) {
  Report rep = make("source-end " + alg.datum().name());
  const auto& W = alg.weyl();
  for (const auto& lambda : test_weights(alg.datum()))
    for (const auto& t : W.reflections()) {
      const IndexSet sr = supp_root(W.positive_root_of(t));
      const IndexSet sw = supp_weight(lambda);
      for (const auto& w : W.elements()) {
        const auto wt = W.multiply(w, t);
        if (W.length(wt) <= W.length(w)) continue;
        for (int i = 0; i < alg.rank(); ++i) {
          if (sr.count(i) && !sw.count(i)) continue;
          ++rep.instances_checked;
          const auto kinds = concat({i}, alg.kinds(lambda));
          const Tuple tup = concat({alg.extremal_fundamental(wt, i)}, alg.extremal_tuple(w, lambda));
          if (right_end_fundamental(alg, i, kinds, tup) != alg.extremal_fundamental(w, i))
            rep.fail("R_" + std::to_string(i + 1) + " at w = " + W.name(w) + ", t = " + W.name(t) +
                     ", " + to_string(lambda));
        }
      }
    }
  return rep;
}

Report source_edge(const KGraph& kg) {
  const auto& alg = kg.algebra();
  Report rep = make("source-edge " + alg.datum().name());
  const auto& W = alg.weyl();
  for (const auto& lambda : test_weights(alg.datum()))
    for (const auto& t : W.reflections()) {
      const IndexSet sr = supp_root(W.positive_root_of(t));
      const IndexSet sw = supp_weight(lambda);
      if (!std::includes(sw.begin(), sw.end(), sr.begin(), sr.end())) continue;
      for (const auto& w : W.elements()) {
        const auto wt = W.multiply(w, t);
        if (W.length(wt) <= W.length(w)) continue;
        ++rep.instances_checked;
        KPath p{kg.weyl_vertex(wt), lambda, alg.extremal(w, lambda)};
        const std::string at = "w = " + W.name(w) + ", t = " + W.name(t) + ", " + to_string(lambda);
        if (!kg.is_path(p.vertex, p.degree, p.element)) rep.fail("not a path at " + at);
        else if (kg.source(p) != kg.weyl_vertex(w)) rep.fail("wrong source at " + at);
      }
    }
  return rep;
}

Report braid_equation(const Algebra& alg) {
  Report rep = make("braid-equation " + alg.datum().name());
  const int r = alg.rank();
  auto step = [&](std::vector<int>& kinds, std::optional<Tuple>& t, int pos) {
    if (!t) return;
    auto s = alg.sigma(kinds[pos], kinds[pos + 1], (*t)[pos], (*t)[pos + 1]);
    if (!s) {
      t.reset();
      return;
    }
    std::swap(kinds[pos], kinds[pos + 1]);
    (*t)[pos] = s->first;
    (*t)[pos + 1] = s->second;
  };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const std::vector<int> kinds{a, b, c};
        auto cart = alg.cartan(kinds);
        for (int e = 0; e < cart->size(); ++e) {
          ++rep.instances_checked;
          std::vector<int> k1 = kinds, k2 = kinds;
          std::optional<Tuple> t1 = cart->tuple(e), t2 = cart->tuple(e);
          for (int pos : {0, 1, 0}) step(k1, t1, pos);
          for (int pos : {1, 0, 1}) step(k2, t2, pos);
          if (!t1 || !t2 || *t1 != *t2 || k1 != k2)
            rep.fail("braid equation fails on " + alg.label(kinds, cart->tuple(e)));
        }
      }
  return rep;
}

Report extremal_flip(const Algebra& alg) {
  Report rep = make("sigma-flip-extremal " + alg.datum().name());
  const auto& W = alg.weyl();
  const auto lams = test_weights(alg.datum());
  for (const auto& la : lams)
    for (const auto& lb : lams)
      for (const auto& w : W.elements()) {
        ++rep.instances_checked;
        const Tuple ta = alg.extremal_tuple(w, la);
        const Tuple tb = alg.extremal_tuple(w, lb);
        auto got = alg.braid(alg.kinds(la), alg.kinds(lb), concat(ta, tb));
        if (!got || *got != concat(tb, ta))
          rep.fail("sigma is not the flip at w = " + W.name(w) + ", " + to_string(la) + ", " +
                   to_string(lb));
      }
  return rep;
}

// ---------------------------------------------------------------- suites

namespace {

Weight bound_or(const Options& opt, int rank, int fill) {
  if (!opt.degree_bound.empty()) return parse_degree(opt.degree_bound, rank);
  return Weight(std::vector<int>(rank, fill));
}

std::vector<std::string> algebras_or(const Options& opt, std::vector<std::string> dflt) {
  return opt.algebras.empty() ? dflt : opt.algebras;
}

}  // namespace

std::vector<Report> run_suite(const std::string& name, const Options& opt) {
  std::vector<Report> out;
  const Convention conv = opt.convention.value_or(Convention::HongKang);
  if (name == "a2-fixtures") {
    auto alg = algebra("A2", Convention::HongKang);
    KGraph kg(alg);
    out = {a2_vertices(kg),       a2_skeleton(kg),    a2_braiding(*alg),   a2_jdt_braiding(*alg),
           a2_right_ends(*alg),   a2_red_edges(kg),   a2_weyl_graphs(*alg)};
  } else if (name == "c2-fixtures") {
    auto alg = algebra("C2", Convention::Opposite);
    KGraph kg(alg);
    out = {c2_crystal_graph(*alg), c2_braiding(*alg), c2_right_ends(kg)};
  } else if (name == "kgraph-axioms") {
    for (const auto& a : algebras_or(opt, {"A2", "C2"})) {
      KGraph kg(algebra(a, conv));
      const Weight bound = bound_or(opt, kg.algebra().rank(), 2);
      out.push_back(factorization(kg, bound));
      out.push_back(associativity(kg, bound));
      out.push_back(order_compatibility(kg, bound));
      out.push_back(representative_independence(kg, bound_or(opt, kg.algebra().rank(), 1)));
      out.push_back(source_identity(kg));
      out.push_back(paths_bruhat(kg));
    }
  } else if (name == "embeddings") {
    for (const auto& a : algebras_or(opt, {"A2", "C2"})) {
      KGraph kg(algebra(a, conv));
      out.push_back(right_weak(kg));
      out.push_back(left_weak(kg));
      out.push_back(bruhat_embeddings(kg, bound_or(opt, kg.algebra().rank(), 1)));
      out.push_back(skeleton_vs_extremal(kg));
    }
  } else if (name == "keys") {
    out.push_back(keys_example());
    for (const auto& a : algebras_or(opt, {"A2", "A3"})) {
      auto alg = algebra(a, Convention::HongKang);
      if (alg->datum().family() != RootDatum::Family::TypeA)
        throw PreconditionError("the keys suite needs a type A algebra");
      KGraph kg(alg);
      out.push_back(keys_ends(kg));
      out.push_back(key_idempotence(*alg));
      out.push_back(frankness(*alg));
      out.push_back(slide_order(*alg));
      out.push_back(coplactic(*alg));
      out.push_back(braiding_via_slides(*alg));
    }
  } else if (name == "lemmas") {
    for (const auto& a : algebras_or(opt, {"A2", "C2"})) {
      auto alg = algebra(a, conv);
      KGraph kg(alg);
      out.push_back(lemma_epsilon_w(*alg));
      out.push_back(lemma_action_f(*alg));
      out.push_back(cartan_bruhat(*alg));
      out.push_back(source_end(*alg));
      out.push_back(source_edge(kg));
      out.push_back(braid_equation(*alg));
      out.push_back(extremal_flip(*alg));
    }
  } else {
    throw PreconditionError("unknown suite '" + name + "' (known: " + join(suite_names(), ", ") +
                            ")");
  }
  return out;
}

nlohmann::json suite_json(const std::string& name, const std::vector<Report>& reports) {
  nlohmann::json rs = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    rs.push_back(r.to_json());
    ok = ok && r.ok();
  }
  return {{"suite", name}, {"ok", ok}, {"reports", rs}};
}

}  // namespace hrg::verify
