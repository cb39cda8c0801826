#include "hrg/embeddings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hrg {

void Report::fail(std::string msg) {
  // Large sweeps only keep a prefix of the failure list.
  if (failures.size() < 200) failures.push_back(std::move(msg));
}

nlohmann::json Report::to_json() const {
  nlohmann::json j = {
      {"theorem", theorem}, {"instances_checked", instances_checked}, {"failures", failures}};
  if (!info.empty()) j["info"] = info;
  return j;
}

ColoredGraphMap embed_right_weak(const KGraph& kg) {
  const auto& W = kg.algebra().weyl();
  ColoredGraphMap m;
  for (const auto& w : W.elements()) m.vertex_map.push_back(kg.weyl_vertex(w));
  const auto g = W.right_weak_graph();
  for (const auto& e : g.edges()) {
    const WeylElement w = W.element(e.src);
    const WeylElement ws = W.element(e.dst);
    const Weight om = kg.algebra().datum().fundamental(e.color);
    m.edge_map.push_back(KPath{kg.weyl_vertex(ws), om, kg.algebra().extremal(w, om)});
  }
  return m;
}

Report validate_right_weak(const KGraph& kg) {
  Report rep{"embedding-rightweak", 0, {}};
  const auto& W = kg.algebra().weyl();
  const auto g = W.right_weak_graph();
  const auto m = embed_right_weak(kg);
  std::set<Vertex> seen_v(m.vertex_map.begin(), m.vertex_map.end());
  if (seen_v.size() != m.vertex_map.size()) rep.fail("vertex map is not injective");
  std::set<KPath> seen_e;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    ++rep.instances_checked;
    const auto& e = g.edges()[k];
    const KPath& p = m.edge_map[k];
    const std::string name = W.name(W.element(e.src)) + "->" + W.name(W.element(e.dst));
    if (!kg.is_path(p.vertex, p.degree, p.element)) {
      rep.fail(name + ": image is not a path");
      continue;
    }
    if (p.vertex != m.vertex_map[e.dst]) rep.fail(name + ": wrong range");
    if (kg.source(p) != m.vertex_map[e.src]) rep.fail(name + ": wrong source");
    if (p.degree != kg.algebra().datum().fundamental(e.color)) rep.fail(name + ": wrong color");
    if (!seen_e.insert(p).second) rep.fail(name + ": edge map is not injective");
  }
  return rep;
}

long long count_embeddings(const ColoredDigraph& pattern, const ColoredDigraph& target,
                           const std::optional<std::vector<int>>& anchor) {
  const int n = pattern.vertex_count();
  const int m = target.vertex_count();
  if (n > m) return 0;
  if (anchor && static_cast<int>(anchor->size()) != n)
    throw PreconditionError("anchor needs one target vertex per pattern vertex");
  // mult[c][a][b] = number of target edges a -> b of color c.
  int colors = static_cast<int>(target.color_labels().size());
  for (const auto& e : pattern.edges()) colors = std::max(colors, e.color + 1);
  std::vector<std::vector<std::vector<int>>> mult(
      colors, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
  for (const auto& e : target.edges()) ++mult[e.color][e.src][e.dst];

  // Visit pattern vertices in BFS order so constraints bite early.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : pattern.edges()) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  for (int s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::vector<int> q{s};
    placed[s] = true;
    for (std::size_t h = 0; h < q.size(); ++h) {
      order.push_back(q[h]);
      for (int y : adj[q[h]])
        if (!placed[y]) {
          placed[y] = true;
          q.push_back(y);
        }
    }
  }
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  // Edges checked when their later endpoint is assigned.
  std::vector<std::vector<ColoredDigraph::Edge>> due(n);
  for (const auto& e : pattern.edges()) due[std::max(pos[e.src], pos[e.dst])].push_back(e);

  std::vector<int> img(n, -1);
  std::vector<bool> used(m, false);
  long long total = 0;
  std::function<void(int, long long)> rec = [&](int k, long long weight) {
    if (k == n) {
      total += weight;
      return;
    }
    const int v = order[k];
    for (int t = 0; t < m; ++t) {
      if (used[t] || (anchor && (*anchor)[v] != t)) continue;
      img[v] = t;
      long long w = weight;
      for (const auto& e : due[k]) {
        w *= mult[e.color][img[e.src]][img[e.dst]];
        if (w == 0) break;
      }
      if (w != 0) {
        used[t] = true;
        rec(k + 1, w);
        used[t] = false;
      }
      img[v] = -1;
    }
  };
  rec(0, 1);
  return total;
}

namespace {

std::optional<std::vector<int>> weyl_anchor(const KGraph& kg, bool anchored) {
  if (!anchored) return std::nullopt;
  std::vector<int> a;
  for (const auto& w : kg.algebra().weyl().elements())
    a.push_back(kg.vertex_index(kg.weyl_vertex(w)));
  return a;
}

}  // namespace

long long uniqueness_search_right_weak(const KGraph& kg, bool anchored) {
  return count_embeddings(kg.algebra().weyl().right_weak_graph(), kg.skeleton(),
                          weyl_anchor(kg, anchored));
}

long long left_weak_embedding_search(const KGraph& kg, bool anchored) {
  return count_embeddings(kg.algebra().weyl().left_weak_graph(), kg.skeleton(),
                          weyl_anchor(kg, anchored));
}

namespace {

bool support_ok(const RootVector& gamma, const Weight& lambda) {
  auto r = supp_root(gamma);
  auto w = supp_weight(lambda);
  return std::includes(w.begin(), w.end(), r.begin(), r.end());
}

RootVector edge_root(const WeylGroup& W, const ColoredDigraph::Edge& e) {
  return W.positive_root_of(W.reflections().at(e.color));
}

}  // namespace

std::vector<std::vector<Weight>> coloring_candidates(const KGraph& kg, const Weight& bound) {
  const auto& W = kg.algebra().weyl();
  const auto g = W.bruhat_graph();
  std::vector<Weight> weights;
  std::function<void(int, Weight&)> rec = [&](int i, Weight& cur) {
    if (i == kg.algebra().rank()) {
      if (!cur.is_zero()) weights.push_back(cur);
      return;
    }
    for (int k = 0; k <= bound[i]; ++k) {
      cur.coords[i] = k;
      rec(i + 1, cur);
    }
  };
  Weight cur = kg.algebra().datum().zero();
  rec(0, cur);
  std::vector<std::vector<Weight>> out;
  for (const auto& e : g.edges()) {
    const RootVector gamma = edge_root(W, e);
    std::vector<Weight> ok;
    for (const auto& w : weights)
      if (support_ok(gamma, w)) ok.push_back(w);
    out.push_back(std::move(ok));
  }
  return out;
}

bool is_compatible(const KGraph& kg, const CompatibleColoring& c) {
  const auto& W = kg.algebra().weyl();
  const auto g = W.bruhat_graph();
  if (c.colors.size() != g.edges().size()) return false;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (!kg.algebra().datum().is_dominant(c.colors[k])) return false;
    if (!support_ok(edge_root(W, g.edges()[k]), c.colors[k])) return false;
  }
  return true;
}

std::vector<CompatibleColoring> enumerate_compatible_colorings(const KGraph& kg,
                                                               const Weight& bound,
                                                               long long limit) {
  const auto cand = coloring_candidates(kg, bound);
  long long count = 1;
  for (const auto& c : cand) {
    count *= static_cast<long long>(c.size());
    if (count > limit) throw PreconditionError("too many colorings within the bound");
  }
  std::vector<CompatibleColoring> out;
  if (count == 0) return out;
  std::vector<std::size_t> idx(cand.size(), 0);
  while (true) {
    CompatibleColoring c;
    for (std::size_t k = 0; k < cand.size(); ++k) c.colors.push_back(cand[k][idx[k]]);
    out.push_back(std::move(c));
    std::size_t k = cand.size();
    while (k > 0) {
      --k;
      if (++idx[k] < cand[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (cand.empty()) return out;
  }
}

CompatibleColoring minimal_coloring(const KGraph& kg) {
  const auto& W = kg.algebra().weyl();
  const auto g = W.bruhat_graph();
  CompatibleColoring c;
  for (const auto& e : g.edges()) {
    Weight w = kg.algebra().datum().zero();
    for (int i : supp_root(edge_root(W, e))) w.coords[i] = 1;
    c.colors.push_back(w);
  }
  return c;
}

ColoredGraphMap embed_bruhat(const KGraph& kg, const CompatibleColoring& c) {
  if (!is_compatible(kg, c)) throw PreconditionError("coloring is not compatible");
  const auto& W = kg.algebra().weyl();
  const auto g = W.bruhat_graph();
  ColoredGraphMap m;
  for (const auto& w : W.elements()) m.vertex_map.push_back(kg.weyl_vertex(w));
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    m.edge_map.push_back(KPath{kg.weyl_vertex(W.element(e.dst)), c.colors[k],
                               kg.algebra().extremal(W.element(e.src), c.colors[k])});
  }
  return m;
}

namespace {

std::string check_edge(const KGraph& kg, const ColoredDigraph::Edge& e, const Weight& lambda) {
  const auto& W = kg.algebra().weyl();
  const WeylElement w = W.element(e.src);
  const WeylElement wt = W.element(e.dst);
  KPath p{kg.weyl_vertex(wt), lambda, kg.algebra().extremal(w, lambda)};
  const std::string name = W.name(w) + "->" + W.name(wt) + " @" + degree_string(lambda);
  if (!kg.is_path(p.vertex, p.degree, p.element)) return name + ": image is not a path";
  if (kg.source(p) != kg.weyl_vertex(w)) return name + ": wrong source";
  return {};
}

}  // namespace

Report validate_bruhat(const KGraph& kg, const CompatibleColoring& c) {
  Report rep{"embedding-bruhat", 0, {}};
  const auto g = kg.algebra().weyl().bruhat_graph();
  const auto m = embed_bruhat(kg, c);
  std::set<KPath> seen;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    ++rep.instances_checked;
    auto msg = check_edge(kg, g.edges()[k], c.colors[k]);
    if (!msg.empty()) rep.fail(msg);
    if (m.edge_map[k].degree != c.colors[k]) rep.fail("degree mismatch");
    if (!seen.insert(m.edge_map[k]).second) rep.fail("edge map is not injective");
  }
  return rep;
}

Report validate_all_bruhat(const KGraph& kg, const Weight& bound) {
  Report rep{"embedding-bruhat", 0, {}};
  const auto g = kg.algebra().weyl().bruhat_graph();
  const auto cand = coloring_candidates(kg, bound);
  // Each edge's image depends only on its own color, so per-(edge, color)
  // checks cover every coloring; injectivity is checked per coloring below.
  const auto& W = kg.algebra().weyl();
  std::vector<std::map<Weight, std::pair<KPath, std::string>>> memo(cand.size());
  for (std::size_t k = 0; k < cand.size(); ++k) {
    const auto& e = g.edges()[k];
    for (const auto& w : cand[k]) {
      KPath p{kg.weyl_vertex(W.element(e.dst)), w, kg.algebra().extremal(W.element(e.src), w)};
      memo[k].emplace(w, std::make_pair(std::move(p), check_edge(kg, e, w)));
    }
  }
  for (const auto& c : enumerate_compatible_colorings(kg, bound)) {
    ++rep.instances_checked;
    std::set<KPath> seen;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const auto& [p, msg] = memo[k].at(c.colors[k]);
      if (!msg.empty()) rep.fail(msg);
      if (!seen.insert(p).second) rep.fail("edge map is not injective");
    }
  }
  return rep;
}

}  // namespace hrg
