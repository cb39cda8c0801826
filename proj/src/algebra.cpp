#include "hrg/algebra.hpp"

#include <algorithm>

namespace hrg {

Algebra::Algebra(RootDatum datum, Convention convention, std::vector<Crystal> fundamentals)
    : datum_(std::make_shared<const RootDatum>(std::move(datum))),
      weyl_(std::make_unique<WeylGroup>(datum_)),
      convention_(convention) {
  const int r = datum_->rank();
  if (fundamentals.empty()) {
    for (int i = 0; i < r; ++i)
      fundamentals_.push_back(std::make_shared<const Crystal>(build_fundamental(datum_, i)));
  } else {
    if (static_cast<int>(fundamentals.size()) != r)
      throw PreconditionError("need one fundamental crystal per index");
    for (int i = 0; i < r; ++i) {
      if (fundamentals[i].datum().cartan_matrix() != datum_->cartan_matrix())
        throw PreconditionError("fundamental crystal over a different Cartan matrix");
      if (!fundamentals[i].is_connected() ||
          fundamentals[i].highest_weight() != datum_->fundamental(i))
        throw PreconditionError("crystal " + std::to_string(i + 1) +
                                " is not connected of highest weight omega_" +
                                std::to_string(i + 1));
      Crystal c = fundamentals[i];
      c.set_fundamental_index(i);
      fundamentals_.push_back(std::make_shared<const Crystal>(std::move(c)));
    }
  }
}

std::shared_ptr<Algebra> Algebra::builtin(const std::string& name, Convention convention) {
  return std::make_shared<Algebra>(RootDatum::builtin(name), convention);
}

CrystalPtr Algebra::fundamental(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("fundamental index");
  return fundamentals_[i];
}

std::vector<int> Algebra::kinds(const Weight& lambda) const {
  if (!datum_->is_dominant(lambda)) throw PreconditionError(to_string(lambda) + " is not dominant");
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < lambda[i]; ++k) out.push_back(i);
  return out;
}

Weight Algebra::weight_of(const std::vector<int>& kinds) const {
  Weight w = datum_->zero();
  for (int i : kinds) w += datum_->fundamental(i);
  return w;
}

TensorProduct Algebra::product(const std::vector<int>& kinds) const {
  std::vector<CrystalPtr> f;
  for (int i : kinds) f.push_back(fundamental(i));
  return TensorProduct(std::move(f), convention_);
}

CrystalPtr Algebra::cartan(const std::vector<int>& kinds) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cartan_cache_.find(kinds);
    if (it != cartan_cache_.end()) return it->second;
  }
  CrystalPtr c;
  if (kinds.empty()) {
    auto trivial = std::make_shared<Crystal>(datum_, std::vector<std::string>{"()"},
                                             std::vector<Weight>{datum_->zero()},
                                             std::vector<std::vector<int>>(rank(), {-1}));
    trivial->attach_tuples({}, {Tuple{}});
    c = trivial;
  } else {
    c = product(kinds).cartan_component();
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return cartan_cache_.emplace(kinds, c).first->second;
}

CrystalPtr Algebra::highest(const Weight& lambda) const { return cartan(kinds(lambda)); }

const std::vector<int>& Algebra::isomorphism(const std::vector<int>& from,
                                             const std::vector<int>& to) const {
  auto key = std::make_pair(from, to);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = iso_cache_.find(key);
    if (it != iso_cache_.end()) return it->second;
  }
  auto map = canonical_isomorphism(*cartan(from), *cartan(to));
  std::lock_guard<std::mutex> lock(mutex_);
  return iso_cache_.emplace(key, std::move(map)).first->second;
}

std::optional<std::pair<int, int>> Algebra::sigma(int i, int j, int x, int y) const {
  const int nj = fundamental(j)->size();
  if (x < 0 || x >= fundamental(i)->size() || y < 0 || y >= nj)
    throw std::out_of_range("braiding argument");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = sigma_cache_.find({i, j});
    if (it != sigma_cache_.end()) return it->second[x * nj + y];
  }
  std::vector<std::optional<std::pair<int, int>>> table(fundamental(i)->size() * nj);
  auto src = cartan({i, j});
  auto dst = cartan({j, i});
  const auto& iso = isomorphism({i, j}, {j, i});
  for (int b = 0; b < src->size(); ++b) {
    const auto& t = src->tuple(b);
    const auto& u = dst->tuple(iso[b]);
    table[t[0] * nj + t[1]] = std::make_pair(u[0], u[1]);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return sigma_cache_.emplace(std::make_pair(i, j), std::move(table)).first->second[x * nj + y];
}

std::optional<Tuple> Algebra::braid(const std::vector<int>& left, const std::vector<int>& right,
                                    const Tuple& t) const {
  std::vector<int> from = left;
  from.insert(from.end(), right.begin(), right.end());
  std::vector<int> to = right;
  to.insert(to.end(), left.begin(), left.end());
  auto src = cartan(from);
  auto b = src->find_tuple(t);
  if (!b) return std::nullopt;
  return cartan(to)->tuple(isomorphism(from, to)[*b]);
}

int Algebra::extremal(WeylElement w, const Weight& lambda) const {
  auto c = highest(lambda);
  int b = c->highest();
  const auto& word = weyl_->word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) b = c->s(*it, b);
  return b;
}

int Algebra::extremal_fundamental(WeylElement w, int i) const {
  auto c = fundamental(i);
  int b = c->highest();
  const auto& word = weyl_->word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) b = c->s(*it, b);
  return b;
}

Tuple Algebra::extremal_tuple(WeylElement w, const Weight& lambda) const {
  return highest(lambda)->tuple(extremal(w, lambda));
}

std::string Algebra::label(const std::vector<int>& kinds, const Tuple& t) const {
  if (kinds.empty()) return "()";
  return product(kinds).label(t);
}

}  // namespace hrg
