#include "hrg/crystal.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>
#include <sstream>

namespace hrg {

std::string to_string(Convention c) {
  return c == Convention::HongKang ? "hongkang" : "opposite";
}

Convention parse_convention(const std::string& s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "hongkang" || low == "hong-kang" || low == "hk") return Convention::HongKang;
  if (low == "opposite" || low == "opp") return Convention::Opposite;
  throw PreconditionError("unknown convention '" + s + "' (hongkang|opposite)");
}

Crystal::Crystal(std::shared_ptr<const RootDatum> datum, std::vector<std::string> labels,
                 std::vector<Weight> weights, std::vector<std::vector<int>> f)
    : datum_(std::move(datum)), labels_(std::move(labels)), weights_(std::move(weights)),
      f_(std::move(f)) {
  const int r = datum_->rank();
  const int n = size();
  if (static_cast<int>(weights_.size()) != n) throw Error("crystal: one weight per element");
  if (static_cast<int>(f_.size()) != r) throw Error("crystal: one F table per index");
  for (int b = 0; b < n; ++b) {
    if (!by_label_.emplace(labels_[b], b).second)
      throw Error("crystal: duplicate element id '" + labels_[b] + "'");
    if (weights_[b].rank() != r) throw Error("crystal: weight rank mismatch for " + labels_[b]);
  }
  e_.assign(r, std::vector<int>(n, -1));
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(f_[i].size()) != n) throw Error("crystal: F table size mismatch");
    for (int b = 0; b < n; ++b) {
      const int t = f_[i][b];
      if (t < 0) continue;
      if (t >= n) throw Error("crystal: F target out of range");
      if (e_[i][t] >= 0)
        throw Error("crystal: F_" + std::to_string(i + 1) + " is not injective at " + labels_[t]);
      e_[i][t] = b;
      Weight expect = weights_[b];
      for (int j = 0; j < r; ++j) expect.coords[j] -= datum_->cartan(j, i);
      if (weights_[t] != expect)
        throw Error("crystal: wt(F_" + std::to_string(i + 1) + " " + labels_[b] +
                    ") != wt - alpha_" + std::to_string(i + 1));
    }
  }
  for (int b = 0; b < n; ++b) {
    for (int i = 0; i < r; ++i) {
      if (phi(i, b) - epsilon(i, b) != datum_->pairing(weights_[b], i))
        throw Error("crystal: phi - epsilon != <wt, alpha^vee> at " + labels_[b]);
    }
  }
}

Crystal Crystal::from_json(std::shared_ptr<const RootDatum> datum, const nlohmann::json& j) {
  try {
    auto labels = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, int> idx;
    for (std::size_t k = 0; k < labels.size(); ++k) idx[labels[k]] = static_cast<int>(k);
    std::vector<Weight> wts;
    for (const auto& l : labels) wts.emplace_back(j.at("wt").at(l).get<std::vector<int>>());
    const int r = datum->rank();
    std::vector<std::vector<int>> f(r, std::vector<int>(labels.size(), -1));
    for (const auto& [key, table] : j.at("f").items()) {
      const int i = std::stoi(key) - 1;
      if (i < 0 || i >= r) throw Error("crystal file: index " + key + " out of range");
      for (const auto& [src, dst] : table.items()) {
        auto s = idx.find(src);
        auto d = idx.find(dst.get<std::string>());
        if (s == idx.end() || d == idx.end()) throw Error("crystal file: unknown element id");
        f[i][s->second] = d->second;
      }
    }
    Crystal c(std::move(datum), std::move(labels), std::move(wts), std::move(f));
    if (j.contains("weight")) {
      Weight hw(j.at("weight").get<std::vector<int>>());
      if (c.highest_weight() != hw) throw Error("crystal file: highest weight mismatch");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed crystal file: ") + e.what());
  }
}

nlohmann::json Crystal::to_json() const {
  nlohmann::json wt = nlohmann::json::object();
  nlohmann::json f = nlohmann::json::object();
  for (int b = 0; b < size(); ++b) wt[labels_[b]] = weights_[b].coords;
  for (int i = 0; i < datum_->rank(); ++i) {
    nlohmann::json table = nlohmann::json::object();
    for (int b = 0; b < size(); ++b)
      if (f_[i][b] >= 0) table[labels_[b]] = labels_[f_[i][b]];
    f[std::to_string(i + 1)] = std::move(table);
  }
  nlohmann::json out = {{"elements", labels_}, {"wt", wt}, {"f", f}};
  if (highest_weight_elements().size() == 1) out["weight"] = highest_weight().coords;
  return out;
}

int Crystal::index(const std::string& label) const {
  auto b = find(label);
  if (!b) throw PreconditionError("unknown crystal element '" + label + "'");
  return *b;
}

std::optional<int> Crystal::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Crystal::f(int i, int b) const {
  const int t = f_.at(i).at(b);
  if (t < 0) return std::nullopt;
  return t;
}

std::optional<int> Crystal::e(int i, int b) const {
  const int t = e_.at(i).at(b);
  if (t < 0) return std::nullopt;
  return t;
}

int Crystal::epsilon(int i, int b) const {
  int k = 0;
  for (int x = e_.at(i).at(b); x >= 0; x = e_[i][x]) ++k;
  return k;
}

int Crystal::phi(int i, int b) const {
  int k = 0;
  for (int x = f_.at(i).at(b); x >= 0; x = f_[i][x]) ++k;
  return k;
}

int Crystal::s(int i, int b) const {
  const int k = datum_->pairing(weight(b), i);
  int x = b;
  for (int n = 0; n < std::abs(k); ++n) {
    auto y = k > 0 ? f(i, x) : e(i, x);
    if (!y) throw Error("crystal: Weyl action hit zero at " + labels_[b] + "; malformed crystal");
    x = *y;
  }
  return x;
}

std::vector<int> Crystal::highest_weight_elements() const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b) {
    bool hw = true;
    for (int i = 0; i < datum_->rank() && hw; ++i) hw = e_[i][b] < 0;
    if (hw) out.push_back(b);
  }
  return out;
}

int Crystal::highest() const {
  auto hw = highest_weight_elements();
  if (hw.size() != 1) throw PreconditionError("crystal does not have a unique highest weight element");
  return hw.front();
}

std::vector<int> Crystal::connected_component(int b) const {
  std::vector<bool> seen(size(), false);
  std::deque<int> q{b};
  seen.at(b) = true;
  std::vector<int> out;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    out.push_back(x);
    for (int i = 0; i < datum_->rank(); ++i) {
      for (int y : {f_[i][x], e_[i][x]}) {
        if (y >= 0 && !seen[y]) {
          seen[y] = true;
          q.push_back(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Crystal::is_connected() const {
  return size() > 0 && static_cast<int>(connected_component(0).size()) == size();
}

bool Crystal::below(int b, int b2) const {
  std::vector<bool> seen(size(), false);
  std::deque<int> q{b2};
  seen.at(b2) = true;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == b) return true;
    for (int i = 0; i < datum_->rank(); ++i) {
      int y = f_[i][x];
      if (y >= 0 && !seen[y]) {
        seen[y] = true;
        q.push_back(y);
      }
    }
  }
  return false;
}

std::optional<int> Crystal::find_tuple(const Tuple& t) const {
  auto it = by_tuple_.find(t);
  if (it == by_tuple_.end()) return std::nullopt;
  return it->second;
}

void Crystal::attach_tuples(std::vector<CrystalPtr> factors, std::vector<Tuple> tuples) {
  factors_ = std::move(factors);
  tuples_ = std::move(tuples);
  for (std::size_t k = 0; k < tuples_.size(); ++k) by_tuple_[tuples_[k]] = static_cast<int>(k);
}

ColoredDigraph Crystal::graph() const {
  ColoredDigraph g;
  for (const auto& l : labels_) g.add_vertex(l);
  for (int i = 0; i < datum_->rank(); ++i) g.add_color(std::to_string(i + 1));
  for (int b = 0; b < size(); ++b)
    for (int i = 0; i < datum_->rank(); ++i)
      if (f_[i][b] >= 0) g.add_edge(b, f_[i][b], i);
  return g;
}

TensorProduct::TensorProduct(std::vector<CrystalPtr> factors, Convention convention)
    : factors_(std::move(factors)), convention_(convention) {
  for (const auto& c : factors_) {
    if (!c) throw PreconditionError("null tensor factor");
    if (c->datum().cartan_matrix() != factors_.front()->datum().cartan_matrix())
      throw PreconditionError("tensor factors over different root data");
  }
}

Weight TensorProduct::weight(const Tuple& t) const {
  if (factors_.empty()) throw PreconditionError("empty tensor product has no datum");
  Weight w = factors_.front()->datum().zero();
  for (int k = 0; k < arity(); ++k) w += factors_[k]->weight(t.at(k));
  return w;
}

void TensorProduct::prefix(int i, const Tuple& t, std::vector<int>& eps,
                           std::vector<int>& ph) const {
  const int n = arity();
  if (static_cast<int>(t.size()) != n) throw PreconditionError("tuple arity mismatch");
  eps.assign(n, 0);
  ph.assign(n, 0);
  if (n == 0) return;
  eps[0] = factors_[0]->epsilon(i, t[0]);
  ph[0] = factors_[0]->phi(i, t[0]);
  int wx = factors_[0]->datum().pairing(factors_[0]->weight(t[0]), i);
  for (int k = 1; k < n; ++k) {
    const Crystal& c = *factors_[k];
    const int eb = c.epsilon(i, t[k]);
    const int pb = c.phi(i, t[k]);
    const int wb = pb - eb;
    if (convention_ == Convention::HongKang) {
      eps[k] = std::max(eps[k - 1], eb - wx);
      ph[k] = std::max(pb, ph[k - 1] + wb);
    } else {
      eps[k] = std::max(eb, eps[k - 1] - wb);
      ph[k] = std::max(ph[k - 1], pb + wx);
    }
    wx += wb;
  }
}

int TensorProduct::epsilon(int i, const Tuple& t) const {
  std::vector<int> eps, ph;
  prefix(i, t, eps, ph);
  return eps.empty() ? 0 : eps.back();
}

int TensorProduct::phi(int i, const Tuple& t) const {
  std::vector<int> eps, ph;
  prefix(i, t, eps, ph);
  return ph.empty() ? 0 : ph.back();
}

std::optional<Tuple> TensorProduct::apply(int i, const Tuple& t, bool lower) const {
  std::vector<int> eps, ph;
  prefix(i, t, eps, ph);
  if (t.empty()) return std::nullopt;
  int k = arity() - 1;
  for (; k > 0; --k) {
    const Crystal& c = *factors_[k];
    bool on_left;
    if (convention_ == Convention::HongKang) {
      const int eb = c.epsilon(i, t[k]);
      on_left = lower ? ph[k - 1] > eb : ph[k - 1] >= eb;
    } else {
      const int pb = c.phi(i, t[k]);
      on_left = !(lower ? pb > eps[k - 1] : pb >= eps[k - 1]);
    }
    if (!on_left) break;
  }
  auto y = lower ? factors_[k]->f(i, t[k]) : factors_[k]->e(i, t[k]);
  if (!y) return std::nullopt;
  Tuple out = t;
  out[k] = *y;
  return out;
}

std::optional<Tuple> TensorProduct::f(int i, const Tuple& t) const { return apply(i, t, true); }
std::optional<Tuple> TensorProduct::e(int i, const Tuple& t) const { return apply(i, t, false); }

Tuple TensorProduct::s(int i, const Tuple& t) const {
  const int k = factors_.front()->datum().pairing(weight(t), i);
  Tuple x = t;
  for (int n = 0; n < std::abs(k); ++n) {
    auto y = k > 0 ? f(i, x) : e(i, x);
    if (!y) throw Error("tensor product: Weyl action hit zero");
    x = *y;
  }
  return x;
}

Tuple TensorProduct::highest() const {
  Tuple t;
  for (const auto& c : factors_) t.push_back(c->highest());
  return t;
}

std::string TensorProduct::label(const Tuple& t) const {
  if (static_cast<int>(t.size()) != arity()) throw PreconditionError("tuple arity mismatch");
  if (t.empty()) return "()";
  std::string out;
  for (int k = 0; k < arity(); ++k) {
    if (k) out += "⊗";
    out += factors_[k]->label(t[k]);
  }
  return out;
}

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::string norm;
  for (std::size_t k = 0; k < s.size();) {
    if (s.compare(k, 3, "⊗") == 0) {
      norm += ' ';
      k += 3;
    } else {
      char c = s[k++];
      norm += (c == ',' || c == '*' || c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
    }
  }
  std::istringstream is(norm);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Tuple TensorProduct::parse(const std::string& label) const {
  auto tokens = split_tokens(label);
  std::size_t needed = 0;
  for (const auto& c : factors_) needed += c->is_product_component() ? c->factors().size() : 1;
  if (tokens.size() < needed) {
    // Allow concatenated ids such as "a1b3".
    std::vector<std::string> finer;
    static const std::regex piece("[A-Za-z]+[0-9]+");
    for (const auto& tok : tokens) {
      for (auto it = std::sregex_iterator(tok.begin(), tok.end(), piece);
           it != std::sregex_iterator(); ++it)
        finer.push_back(it->str());
    }
    tokens = std::move(finer);
  }
  if (tokens.size() != needed)
    throw PreconditionError("element '" + label + "' has the wrong number of factors");
  Tuple t;
  std::size_t pos = 0;
  for (const auto& c : factors_) {
    if (c->is_product_component()) {
      std::string joined;
      for (std::size_t k = 0; k < c->factors().size(); ++k) {
        if (k) joined += "⊗";
        joined += tokens[pos++];
      }
      t.push_back(c->index(joined));
    } else {
      t.push_back(c->index(tokens[pos++]));
    }
  }
  return t;
}

bool TensorProduct::contains(const Tuple& t) const {
  if (static_cast<int>(t.size()) != arity()) return false;
  for (int k = 0; k < arity(); ++k)
    if (t[k] < 0 || t[k] >= factors_[k]->size()) return false;
  return true;
}

CrystalPtr TensorProduct::cartan_component() const { return component_of(highest()); }

CrystalPtr TensorProduct::component_of(const Tuple& start) const {
  if (factors_.empty()) throw PreconditionError("empty tensor product");
  if (!contains(start)) throw PreconditionError("tuple outside the tensor product");
  const auto& datum = factors_.front()->datum_ptr();
  const int r = datum->rank();
  std::vector<Tuple> tuples{start};
  std::map<Tuple, int> idx{{start, 0}};
  for (std::size_t head = 0; head < tuples.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      for (bool lower : {true, false}) {
        auto y = apply(i, tuples[head], lower);
        if (y && !idx.count(*y)) {
          idx[*y] = static_cast<int>(tuples.size());
          tuples.push_back(*y);
        }
      }
    }
  }
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  std::vector<std::vector<int>> f(r, std::vector<int>(tuples.size(), -1));
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    labels.push_back(label(tuples[k]));
    wts.push_back(weight(tuples[k]));
    for (int i = 0; i < r; ++i)
      if (auto y = apply(i, tuples[k], true)) f[i][k] = idx.at(*y);
  }
  auto c = std::make_shared<Crystal>(datum, std::move(labels), std::move(wts), std::move(f));
  c->attach_tuples(factors_, std::move(tuples));
  return c;
}

std::vector<int> canonical_isomorphism(const Crystal& a, const Crystal& b) {
  if (a.size() != b.size()) throw PreconditionError("crystals have different sizes");
  const int ha = a.highest();
  const int hb = b.highest();
  if (a.weight(ha) != b.weight(hb))
    throw PreconditionError("crystals have different highest weights");
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  map[ha] = hb;
  used[hb] = true;
  std::deque<int> q{ha};
  const int r = a.datum().rank();
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (int i = 0; i < r; ++i) {
      auto fx = a.f(i, x);
      auto fy = b.f(i, map[x]);
      if (fx.has_value() != fy.has_value()) throw Error("crystals are not isomorphic");
      if (!fx) continue;
      if (map[*fx] < 0) {
        if (used[*fy]) throw Error("crystals are not isomorphic");
        map[*fx] = *fy;
        used[*fy] = true;
        q.push_back(*fx);
      } else if (map[*fx] != *fy) {
        throw Error("crystals are not isomorphic");
      }
    }
  }
  for (int x = 0; x < a.size(); ++x) {
    if (map[x] < 0) throw PreconditionError("crystal is not connected");
    if (a.weight(x) != b.weight(map[x])) throw Error("crystals are not isomorphic");
  }
  return map;
}

std::vector<std::vector<int>> type_a_columns(int rank, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= rank + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

Crystal type_a_fundamental(std::shared_ptr<const RootDatum> datum, int k) {
  const int r = datum->rank();
  auto cols = type_a_columns(r, k + 1);
  std::map<std::vector<int>, int> idx;
  std::vector<std::string> labels;
  std::vector<Weight> wts;
  const char letter = static_cast<char>('a' + k);
  for (std::size_t n = 0; n < cols.size(); ++n) {
    idx[cols[n]] = static_cast<int>(n);
    labels.push_back(std::string(1, letter) + std::to_string(n + 1));
    Weight w = datum->zero();
    std::set<int> s(cols[n].begin(), cols[n].end());
    for (int i = 0; i < r; ++i) w.coords[i] = int(s.count(i + 1)) - int(s.count(i + 2));
    wts.push_back(w);
  }
  std::vector<std::vector<int>> f(r, std::vector<int>(cols.size(), -1));
  for (std::size_t n = 0; n < cols.size(); ++n) {
    for (int i = 0; i < r; ++i) {
      auto c = cols[n];
      auto it = std::find(c.begin(), c.end(), i + 1);
      if (it == c.end() || std::find(c.begin(), c.end(), i + 2) != c.end()) continue;
      *it = i + 2;
      f[i][n] = idx.at(c);
    }
  }
  return Crystal(std::move(datum), std::move(labels), std::move(wts), std::move(f));
}

}  // namespace

Crystal build_fundamental(std::shared_ptr<const RootDatum> datum, int i) {
  if (i < 0 || i >= datum->rank()) throw std::out_of_range("fundamental index");
  if (datum->family() == RootDatum::Family::TypeA) {
    Crystal c = type_a_fundamental(datum, i);
    c.set_fundamental_index(i);
    return c;
  }
  if (datum->family() == RootDatum::Family::TypeC2) {
    auto W = [](int a, int b) { return Weight({a, b}); };
    if (i == 0) {
      Crystal c(datum, {"a1", "a2", "a3", "a4"}, {W(1, 0), W(-1, 1), W(1, -1), W(-1, 0)},
                {{1, -1, 3, -1}, {-1, 2, -1, -1}});
      c.set_fundamental_index(0);
      return c;
    }
    Crystal c(datum, {"b1", "b2", "b3", "b4", "b5"},
              {W(0, 1), W(2, -1), W(0, 0), W(-2, 1), W(0, -1)},
              {{-1, 2, 3, -1, -1}, {1, -1, -1, 4, -1}});
    c.set_fundamental_index(1);
    return c;
  }
  throw PreconditionError("no built-in fundamental crystals for " + datum->name() +
                          "; supply a crystal data file");
}

}  // namespace hrg
