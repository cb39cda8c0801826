#include "hrg/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <set>

namespace hrg {

namespace {
std::atomic<std::uint64_t> next_group_id{1};
}

WeylGroup::WeylGroup(std::shared_ptr<const RootDatum> datum, int size_cap)
    : datum_(std::move(datum)), id_(next_group_id++) {
  const Weight rho = datum_->rho();
  fingerprints_.push_back(rho);
  words_.push_back({});
  lookup_[rho] = 0;
  for (std::size_t head = 0; head < fingerprints_.size(); ++head) {
    for (int i = 0; i < datum_->rank(); ++i) {
      std::vector<int> w = words_[head];
      w.push_back(i);
      Weight fp = apply_word(w, rho);
      if (lookup_.count(fp)) continue;
      if (size() >= size_cap)
        throw Error("Weyl group of " + datum_->name() + " exceeds " + std::to_string(size_cap) +
                    " elements");
      lookup_[fp] = size();
      fingerprints_.push_back(std::move(fp));
      words_.push_back(std::move(w));
    }
  }
  for (int k = 0; k < size(); ++k) {
    int inv = 0;
    for (const auto& g : datum_->positive_roots())
      if (act(element(k), g).is_negative()) ++inv;
    lengths_.push_back(inv);
  }

  std::set<int> refl;
  for (const auto& w : elements()) {
    for (int i = 0; i < datum_->rank(); ++i)
      refl.insert(multiply(multiply(w, simple(i)), inverse(w)).index);
  }
  for (int t : refl) {
    reflections_.push_back(element(t));
    const Weight& fp = fingerprints_[t];
    std::optional<RootVector> root;
    for (const auto& g : datum_->positive_roots())
      if (datum_->reflect_by_root(g, rho) == fp) root = g;
    if (!root) throw Error("reflection without a positive root");
    reflection_roots_.push_back(*root);
  }
}

void WeylGroup::check(WeylElement w) const {
  if (w.group != id_) throw PreconditionError("Weyl element belongs to a different group");
  if (w.index < 0 || w.index >= size()) throw std::out_of_range("Weyl element index");
}

Weight WeylGroup::apply_word(const std::vector<int>& word, Weight v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = datum_->reflect(*it, v);
  return v;
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out;
  for (int k = 0; k < size(); ++k) out.push_back({id_, k});
  return out;
}

WeylElement WeylGroup::element(int index) const {
  WeylElement w{id_, index};
  check(w);
  return w;
}

WeylElement WeylGroup::longest() const {
  auto it = std::max_element(lengths_.begin(), lengths_.end());
  return element(static_cast<int>(it - lengths_.begin()));
}

WeylElement WeylGroup::simple(int i) const { return from_word({i}); }

const Weight& WeylGroup::fingerprint(WeylElement w) const {
  check(w);
  return fingerprints_[w.index];
}

const std::vector<int>& WeylGroup::word(WeylElement w) const {
  check(w);
  return words_[w.index];
}

int WeylGroup::length(WeylElement w) const {
  check(w);
  return lengths_[w.index];
}

std::string WeylGroup::name(WeylElement w) const {
  const auto& wd = word(w);
  if (wd.empty()) return "1";
  std::string s;
  for (int i : wd) s += "s" + std::to_string(i + 1);
  return s;
}

WeylElement WeylGroup::parse(const std::string& name) const {
  if (name == "1" || name == "e" || name.empty()) return identity();
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] != 's') throw PreconditionError("malformed Weyl word '" + name + "'");
    std::size_t end = pos + 1;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    if (end == pos + 1) throw PreconditionError("malformed Weyl word '" + name + "'");
    int i = std::stoi(name.substr(pos + 1, end - pos - 1));
    if (i < 1 || i > datum_->rank())
      throw PreconditionError("generator index out of range in '" + name + "'");
    word.push_back(i - 1);
    pos = end;
  }
  return from_word(word);
}

std::optional<WeylElement> WeylGroup::find(const Weight& fp) const {
  auto it = lookup_.find(fp);
  if (it == lookup_.end()) return std::nullopt;
  return WeylElement{id_, it->second};
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  for (int i : word)
    if (i < 0 || i >= datum_->rank()) throw std::out_of_range("generator index");
  auto w = find(apply_word(word, datum_->rho()));
  if (!w) throw Error("word does not evaluate to a group element");
  return *w;
}

WeylElement WeylGroup::multiply(WeylElement u, WeylElement w) const {
  check(u);
  check(w);
  return *find(apply_word(words_[u.index], fingerprints_[w.index]));
}

WeylElement WeylGroup::inverse(WeylElement w) const {
  auto wd = word(w);
  std::reverse(wd.begin(), wd.end());
  return from_word(wd);
}

Weight WeylGroup::act(WeylElement w, const Weight& lambda) const {
  return apply_word(word(w), lambda);
}

RootVector WeylGroup::act(WeylElement w, const RootVector& gamma) const {
  const auto& wd = word(w);
  RootVector v = gamma;
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = datum_->reflect(*it, v);
  return v;
}

bool WeylGroup::is_reflection(WeylElement w) const {
  check(w);
  return std::find(reflections_.begin(), reflections_.end(), w) != reflections_.end();
}

RootVector WeylGroup::positive_root_of(WeylElement t) const {
  auto it = std::find(reflections_.begin(), reflections_.end(), t);
  if (it == reflections_.end()) throw PreconditionError(name(t) + " is not a reflection");
  return reflection_roots_[it - reflections_.begin()];
}

WeylElement WeylGroup::reflection_of(const RootVector& gamma) const {
  const RootVector pos = gamma.is_negative() ? -gamma : gamma;
  for (std::size_t k = 0; k < reflection_roots_.size(); ++k)
    if (reflection_roots_[k] == pos) return reflections_[k];
  throw PreconditionError(to_string(gamma) + " is not a root");
}

ColoredDigraph WeylGroup::empty_graph() const {
  ColoredDigraph g;
  for (const auto& w : elements()) g.add_vertex(name(w));
  return g;
}

ColoredDigraph WeylGroup::bruhat_graph() const {
  ColoredDigraph g = empty_graph();
  for (const auto& t : reflections_) g.add_color(name(t));
  for (const auto& u : elements()) {
    for (std::size_t k = 0; k < reflections_.size(); ++k) {
      WeylElement w = multiply(u, reflections_[k]);
      if (length(w) > length(u)) g.add_edge(u.index, w.index, static_cast<int>(k));
    }
  }
  return g;
}

ColoredDigraph WeylGroup::bruhat_graph_left() const {
  ColoredDigraph g = empty_graph();
  for (const auto& t : reflections_) g.add_color(name(t));
  for (const auto& u : elements()) {
    for (const auto& t : reflections_) {
      WeylElement w = multiply(t, u);
      if (length(w) <= length(u)) continue;
      WeylElement right = multiply(inverse(u), w);
      auto k = std::find(reflections_.begin(), reflections_.end(), right) - reflections_.begin();
      g.add_edge(u.index, w.index, static_cast<int>(k));
    }
  }
  return g;
}

ColoredDigraph WeylGroup::right_weak_graph() const {
  ColoredDigraph g = empty_graph();
  for (int i = 0; i < datum_->rank(); ++i) g.add_color(std::to_string(i + 1));
  for (const auto& u : elements()) {
    for (int i = 0; i < datum_->rank(); ++i) {
      WeylElement w = multiply(u, simple(i));
      if (length(w) > length(u)) g.add_edge(u.index, w.index, i);
    }
  }
  return g;
}

ColoredDigraph WeylGroup::left_weak_graph() const {
  ColoredDigraph g = empty_graph();
  for (int i = 0; i < datum_->rank(); ++i) g.add_color(std::to_string(i + 1));
  for (const auto& u : elements()) {
    for (int i = 0; i < datum_->rank(); ++i) {
      WeylElement w = multiply(simple(i), u);
      if (length(w) > length(u)) g.add_edge(u.index, w.index, i);
    }
  }
  return g;
}

bool WeylGroup::bruhat_leq(WeylElement u, WeylElement w) const {
  check(u);
  check(w);
  std::lock_guard<std::mutex> lock(reach_mutex_);
  if (reach_.empty()) {
    const int n = size();
    reach_.assign(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> succ(n);
    const auto graph = bruhat_graph();
    for (const auto& e : graph.edges()) succ[e.src].push_back(e.dst);
    // Edges strictly increase length, so processing by decreasing length
    // sees every successor's closure first.
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [this](int a, int b) { return lengths_[a] > lengths_[b]; });
    for (int v : order) {
      reach_[v][v] = true;
      for (int s : succ[v])
        for (int x = 0; x < n; ++x)
          if (reach_[s][x]) reach_[v][x] = true;
    }
  }
  return reach_[u.index][w.index];
}

std::vector<int> WeylGroup::removal_sequence(WeylElement w, WeylElement w2) const {
  if (!bruhat_leq(w2, w))
    throw PreconditionError(name(w) + " is not above " + name(w2) + " in Bruhat order");
  const std::vector<int> base = word(w);
  const int target_len = length(w2);
  std::vector<int> seq;
  std::vector<bool> removed(base.size(), false);

  auto current_word = [&] {
    std::vector<int> out;
    for (std::size_t k = 0; k < base.size(); ++k)
      if (!removed[k]) out.push_back(base[k]);
    return out;
  };

  std::function<bool(int, int)> dfs = [&](int upper, int cur_len) -> bool {
    if (cur_len == target_len) return from_word(current_word()) == w2;
    for (int pos = upper - 1; pos >= 0; --pos) {
      removed[pos] = true;
      auto wd = current_word();
      if (length(from_word(wd)) == cur_len - 1) {
        seq.push_back(pos + 1);
        if (dfs(pos, cur_len - 1)) return true;
        seq.pop_back();
      }
      removed[pos] = false;
    }
    return false;
  };
  if (!dfs(static_cast<int>(base.size()), length(w)))
    throw Error("no removal sequence found");
  return seq;
}

}  // namespace hrg
