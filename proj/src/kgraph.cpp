#include "hrg/kgraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hrg/rightends.hpp"

namespace hrg {

KGraph::KGraph(AlgebraPtr algebra) : alg_(std::move(algebra)) {
  for (int i = 0; i < alg_->rank(); ++i) rho_kinds_.push_back(i);
  auto brho = alg_->cartan(rho_kinds_);
  for (int c = 0; c < brho->size(); ++c) {
    Vertex v = right_end_tuple(*alg_, rho_kinds_, brho->tuple(c));
    fibers_[v].push_back(brho->tuple(c));
  }
  for (const auto& [v, f] : fibers_) vertices_.push_back(v);
}

void KGraph::check_vertex(const Vertex& v) const {
  if (!fibers_.count(v)) throw PreconditionError("not a vertex: " + vertex_label(v));
}

int KGraph::vertex_index(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw PreconditionError("not a vertex");
  return static_cast<int>(it - vertices_.begin());
}

std::string KGraph::vertex_label(const Vertex& v) const {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += alg_->fundamental(static_cast<int>(i))->label(v[i]);
  }
  return s + ")";
}

Vertex KGraph::parse_vertex(const std::string& label) const {
  Tuple t = alg_->product(rho_kinds_).parse(label);
  check_vertex(t);
  return t;
}

const std::vector<Tuple>& KGraph::fiber(const Vertex& v) const {
  auto it = fibers_.find(v);
  if (it == fibers_.end()) throw PreconditionError("not a vertex: " + vertex_label(v));
  return it->second;
}

bool KGraph::is_path_with(const Tuple& c, const Weight& lambda, int b) const {
  auto bl = alg_->highest(lambda);
  if (b < 0 || b >= bl->size()) throw std::out_of_range("element of B(lambda)");
  std::vector<int> kinds = rho_kinds_;
  const auto lk = alg_->kinds(lambda);
  kinds.insert(kinds.end(), lk.begin(), lk.end());
  Tuple full = c;
  const Tuple& bt = bl->tuple(b);
  full.insert(full.end(), bt.begin(), bt.end());
  return is_cartan(*alg_, kinds, full);
}

bool KGraph::is_path(const Vertex& v, const Weight& lambda, int b) const {
  return is_path_with(representative(v), lambda, b);
}

Vertex KGraph::source(const KPath& p) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = source_cache_.find(p);
    if (it != source_cache_.end()) return it->second;
  }
  if (!is_path(p.vertex, p.degree, p.element)) throw PreconditionError("not a path");
  const auto lk = alg_->kinds(p.degree);
  const Tuple& bt = alg_->highest(p.degree)->tuple(p.element);
  Vertex s;
  for (int i = 0; i < alg_->rank(); ++i) {
    std::vector<int> kinds{i};
    kinds.insert(kinds.end(), lk.begin(), lk.end());
    Tuple t{p.vertex[i]};
    t.insert(t.end(), bt.begin(), bt.end());
    auto r = right_end_chain(*alg_, kinds, t, 0);
    if (!r) throw Error("source: zero braiding on a valid path");
    s.push_back(*r);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  source_cache_.emplace(p, s);
  return s;
}

Vertex KGraph::source_with(const Tuple& c, const Weight& lambda, int b) const {
  std::vector<int> kinds = rho_kinds_;
  const auto lk = alg_->kinds(lambda);
  kinds.insert(kinds.end(), lk.begin(), lk.end());
  Tuple full = c;
  const Tuple& bt = alg_->highest(lambda)->tuple(b);
  full.insert(full.end(), bt.begin(), bt.end());
  Vertex s;
  for (int i = 0; i < alg_->rank(); ++i) {
    auto r = right_end_chain(*alg_, kinds, full, i);
    if (!r) throw PreconditionError("not a path");
    s.push_back(*r);
  }
  return s;
}

KPath KGraph::identity(const Vertex& v) const {
  check_vertex(v);
  return KPath{v, alg_->datum().zero(), 0};
}

KPath KGraph::compose(const KPath& p, const KPath& q) const {
  if (source(p) != q.vertex) throw PreconditionError("paths are not composable");
  std::vector<int> kinds = alg_->kinds(p.degree);
  const auto qk = alg_->kinds(q.degree);
  kinds.insert(kinds.end(), qk.begin(), qk.end());
  Tuple t = alg_->highest(p.degree)->tuple(p.element);
  const Tuple& qt = alg_->highest(q.degree)->tuple(q.element);
  t.insert(t.end(), qt.begin(), qt.end());
  const Weight total = p.degree + q.degree;
  auto b = alg_->cartan(kinds)->find_tuple(t);
  if (!b) throw Error("composition projects to zero");
  const int image = alg_->isomorphism(kinds, alg_->kinds(total))[*b];
  return KPath{p.vertex, total, image};
}

ColoredDigraph KGraph::skeleton() const {
  ColoredDigraph g;
  for (const auto& v : vertices_) g.add_vertex(vertex_label(v));
  for (int i = 0; i < alg_->rank(); ++i) g.add_color("omega" + std::to_string(i + 1));
  for (int i = 0; i < alg_->rank(); ++i) {
    const Weight w = alg_->datum().fundamental(i);
    for (const auto& p : paths_of_degree(w)) {
      g.add_edge(vertex_index(source(p)), vertex_index(p.vertex), i,
                 alg_->highest(w)->label(p.element));
    }
  }
  return g;
}

std::vector<KPath> KGraph::paths_of_degree(const Weight& lambda) const {
  auto bl = alg_->highest(lambda);
  std::vector<KPath> out;
  for (const auto& v : vertices_)
    for (int b = 0; b < bl->size(); ++b)
      if (is_path(v, lambda, b)) out.push_back(KPath{v, lambda, b});
  return out;
}

std::vector<KPath> KGraph::enumerate_paths(const Weight& bound) const {
  if (!alg_->datum().is_dominant(bound)) throw PreconditionError("degree bound must be >= 0");
  std::vector<Weight> degrees;
  std::function<void(int, Weight&)> rec = [&](int i, Weight& cur) {
    if (i == alg_->rank()) {
      degrees.push_back(cur);
      return;
    }
    for (int k = 0; k <= bound[i]; ++k) {
      cur.coords[i] = k;
      rec(i + 1, cur);
    }
  };
  Weight cur = alg_->datum().zero();
  rec(0, cur);
  long long budget = 0;
  for (const auto& d : degrees) {
    budget += static_cast<long long>(alg_->highest(d)->size()) * vertices_.size();
    if (budget > kMaxEnumeration)
      throw PreconditionError("degree bound " + degree_string(bound) + " is too large to enumerate");
  }
  std::vector<KPath> out;
  for (const auto& d : degrees) {
    auto ps = paths_of_degree(d);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::pair<KPath, KPath> KGraph::factorize(const KPath& p, const Weight& m) const {
  const Weight n = p.degree - m;
  if (!alg_->datum().is_dominant(m) || !alg_->datum().is_dominant(n))
    throw PreconditionError("split does not fit the degree");
  std::vector<std::pair<KPath, KPath>> found;
  auto bm = alg_->highest(m);
  auto bn = alg_->highest(n);
  for (int g = 0; g < bm->size(); ++g) {
    if (!is_path(p.vertex, m, g)) continue;
    KPath gp{p.vertex, m, g};
    const Vertex mid = source(gp);
    for (int h = 0; h < bn->size(); ++h) {
      if (!is_path(mid, n, h)) continue;
      KPath hp{mid, n, h};
      if (compose(gp, hp) == p) found.emplace_back(gp, hp);
    }
  }
  if (found.size() != 1)
    throw Error("path has " + std::to_string(found.size()) + " factorizations of degree " +
                degree_string(m) + "+" + degree_string(n));
  return found.front();
}

Vertex KGraph::weyl_vertex(WeylElement w) const {
  Tuple c = alg_->extremal_tuple(w, alg_->datum().rho());
  return right_end_tuple(*alg_, rho_kinds_, c);
}

std::optional<WeylElement> KGraph::weyl_label(const Vertex& v) const {
  for (const auto& w : alg_->weyl().elements())
    if (weyl_vertex(w) == v) return w;
  return std::nullopt;
}

bool KGraph::vertex_leq(const Vertex& v, const Vertex& v2) const {
  for (int i = 0; i < alg_->rank(); ++i)
    if (!alg_->fundamental(i)->below(v[i], v2[i])) return false;
  return true;
}

std::string KGraph::element_label(const Weight& lambda, int b) const {
  return alg_->highest(lambda)->label(b);
}

nlohmann::json KGraph::path_json(const KPath& p) const {
  auto ids = [this](const Vertex& v) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back(alg_->fundamental(static_cast<int>(i))->label(v[i]));
    return out;
  };
  return {{"vertex", ids(p.vertex)},
          {"element", element_label(p.degree, p.element)},
          {"degree", p.degree.coords},
          {"source", ids(source(p))}};
}

std::string degree_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.coords.size(); ++i) s += (i ? "," : "") + std::to_string(w.coords[i]);
  return "(" + s + ")";
}

Weight parse_degree(const std::string& s, int rank) {
  std::vector<int> c;
  std::string tok;
  std::istringstream is(s);
  try {
    while (std::getline(is, tok, ',')) c.push_back(std::stoi(tok));
  } catch (const std::logic_error&) {
    throw PreconditionError("malformed degree '" + s + "'");
  }
  if (static_cast<int>(c.size()) != rank)
    throw PreconditionError("degree '" + s + "' needs " + std::to_string(rank) + " entries");
  for (int x : c)
    if (x < 0) throw PreconditionError("degree entries must be >= 0");
  return Weight(std::move(c));
}

}  // namespace hrg
