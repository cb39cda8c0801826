#include "hrg/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace hrg {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

RootVector RootVector::simple(int rank, int i) {
  RootVector r(std::vector<int>(rank, 0));
  r.coords.at(i) = 1;
  return r;
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (int c : coords) {
    if (c < 0) return false;
    nonzero = nonzero || c != 0;
  }
  return nonzero;
}

bool RootVector::is_negative() const { return (-*this).is_positive(); }

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

namespace {

std::string join_coords(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const Weight& w) { return join_coords(w.coords); }
std::string to_string(const RootVector& r) { return join_coords(r.coords); }

RootDatum::RootDatum(std::string name, std::vector<std::vector<int>> cartan,
                     std::vector<std::int64_t> symmetrizer, Family family, int root_cap)
    : name_(std::move(name)),
      family_(family),
      rank_(static_cast<int>(cartan.size())),
      cartan_(std::move(cartan)),
      symmetrizer_(std::move(symmetrizer)) {
  if (rank_ <= 0) throw Error("Cartan matrix must have positive rank");
  for (const auto& row : cartan_) {
    if (static_cast<int>(row.size()) != rank_) throw Error("Cartan matrix must be square");
  }
  for (int i = 0; i < rank_; ++i) {
    if (cartan_[i][i] != 2) throw Error("Cartan matrix diagonal entries must equal 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw Error("off-diagonal Cartan entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw Error("Cartan matrix zero pattern must be symmetric");
    }
  }
  if (static_cast<int>(symmetrizer_.size()) != rank_)
    throw Error("symmetrizer must have one entry per simple root");
  for (auto d : symmetrizer_) {
    if (d <= 0) throw Error("symmetrizer entries must be positive");
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
        throw Error("symmetrizer does not make D*A symmetric");
    }
  }
  compute_positive_roots(root_cap > 0 ? root_cap : 10 * rank_ * rank_);
}

RootDatum RootDatum::type_a(int rank) {
  if (rank < 1) throw PreconditionError("type A rank must be positive");
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return RootDatum("A" + std::to_string(rank), std::move(a),
                   std::vector<std::int64_t>(rank, 1), Family::TypeA);
}

// alpha_1 short, alpha_2 long: B(omega_1) is the 4-element crystal.
RootDatum RootDatum::type_c2() {
  return RootDatum("C2", {{2, -2}, {-1, 2}}, {1, 2}, Family::TypeC2);
}

RootDatum RootDatum::builtin(std::string_view name) {
  if (name == "C2") return type_c2();
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9')
    return type_a(name[1] - '0');
  throw PreconditionError("unsupported algebra '" + std::string(name) +
                          "' (built-ins: A1..A9, C2)");
}

namespace {

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return {v.get<std::int64_t>(), 1};
  if (v.is_string()) {
    auto s = v.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return {std::stoll(s), 1};
      Rational r{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
      if (r.den <= 0) throw Error("bad denominator");
      return r;
    } catch (const std::logic_error&) {
      throw Error("malformed rational '" + s + "'");
    }
  }
  throw Error("symmetrizer entries must be integers or \"p/q\" strings");
}

}  // namespace

RootDatum RootDatum::from_json(const nlohmann::json& j) {
  try {
    const int rank = j.at("rank").get<int>();
    auto cartan = j.at("cartan").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(cartan.size()) != rank) throw Error("rank does not match Cartan matrix");
    std::vector<Rational> sym;
    if (j.contains("symmetrizer")) {
      for (const auto& v : j.at("symmetrizer")) sym.push_back(parse_rational(v));
    }
    std::int64_t lcm = 1;
    for (const auto& r : sym) lcm = std::lcm(lcm, r.den);
    std::vector<std::int64_t> scaled;
    for (const auto& r : sym) scaled.push_back(r.num * (lcm / r.den));
    std::string name = j.value("name", std::string("custom"));
    return RootDatum(std::move(name), std::move(cartan), std::move(scaled), Family::Custom);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed Cartan data: ") + e.what());
  }
}

nlohmann::json RootDatum::to_json() const {
  return {{"name", name_}, {"rank", rank_}, {"cartan", cartan_}, {"symmetrizer", symmetrizer_}};
}

void RootDatum::check_index(int i) const {
  if (i < 0 || i >= rank_)
    throw std::out_of_range("index " + std::to_string(i + 1) + " outside 1.." +
                            std::to_string(rank_));
}

int RootDatum::cartan(int i, int j) const {
  check_index(i);
  check_index(j);
  return cartan_[i][j];
}

Weight RootDatum::fundamental(int i) const {
  check_index(i);
  Weight w = zero();
  w.coords[i] = 1;
  return w;
}

Weight RootDatum::rho() const { return Weight(std::vector<int>(rank_, 1)); }

Weight RootDatum::to_weight(const RootVector& root) const {
  if (root.rank() != rank_) throw PreconditionError("root rank mismatch");
  Weight w = zero();
  for (int j = 0; j < rank_; ++j) {
    for (int i = 0; i < rank_; ++i) w.coords[i] += root.coords[j] * cartan_[i][j];
  }
  return w;
}

int RootDatum::pairing(const Weight& lambda, int i) const {
  check_index(i);
  if (lambda.rank() != rank_) throw PreconditionError("weight rank mismatch");
  return lambda.coords[i];
}

int RootDatum::pairing(const RootVector& gamma, int i) const {
  check_index(i);
  if (gamma.rank() != rank_) throw PreconditionError("root rank mismatch");
  int s = 0;
  for (int k = 0; k < rank_; ++k) s += gamma.coords[k] * cartan_[i][k];
  return s;
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  const int k = pairing(lambda, i);
  Weight out = lambda;
  for (int j = 0; j < rank_; ++j) out.coords[j] -= k * cartan_[j][i];
  return out;
}

RootVector RootDatum::reflect(int i, const RootVector& gamma) const {
  const int k = pairing(gamma, i);
  RootVector out = gamma;
  out.coords[i] -= k;
  return out;
}

const RootDatum::RootWitness& RootDatum::witness(const RootVector& positive_root) const {
  auto it = std::find(positive_roots_.begin(), positive_roots_.end(), positive_root);
  if (it == positive_roots_.end())
    throw PreconditionError(to_string(positive_root) + " is not a positive root of " + name_);
  return witnesses_[it - positive_roots_.begin()];
}

bool RootDatum::is_root(const RootVector& gamma) const {
  const RootVector pos = gamma.is_negative() ? -gamma : gamma;
  return std::find(positive_roots_.begin(), positive_roots_.end(), pos) != positive_roots_.end();
}

namespace {

// t_gamma = w s_i w^{-1} with gamma = w(alpha_i).
template <class V>
V apply_reflection(const RootDatum& d, const RootDatum::RootWitness& wit, V v) {
  for (int j : wit.word) v = d.reflect(j, v);
  v = d.reflect(wit.simple, v);
  for (auto it = wit.word.rbegin(); it != wit.word.rend(); ++it) v = d.reflect(*it, v);
  return v;
}

}  // namespace

Weight RootDatum::reflect_by_root(const RootVector& gamma, const Weight& lambda) const {
  const RootVector pos = gamma.is_negative() ? -gamma : gamma;
  return apply_reflection(*this, witness(pos), lambda);
}

RootVector RootDatum::reflect_by_root(const RootVector& gamma, const RootVector& v) const {
  const RootVector pos = gamma.is_negative() ? -gamma : gamma;
  return apply_reflection(*this, witness(pos), v);
}

void RootDatum::compute_positive_roots(int cap) {
  std::deque<std::size_t> queue;
  for (int i = 0; i < rank_; ++i) {
    positive_roots_.push_back(RootVector::simple(rank_, i));
    witnesses_.push_back({i, {}});
    queue.push_back(positive_roots_.size() - 1);
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank_; ++j) {
      RootVector next = reflect(j, positive_roots_[idx]);
      if (!next.is_positive()) continue;
      if (std::find(positive_roots_.begin(), positive_roots_.end(), next) != positive_roots_.end())
        continue;
      if (static_cast<int>(positive_roots_.size()) >= cap)
        throw Error("root system of " + name_ + " exceeds " + std::to_string(cap) +
                    " positive roots; not of finite type");
      RootWitness w = witnesses_[idx];
      w.word.insert(w.word.begin(), j);
      positive_roots_.push_back(std::move(next));
      witnesses_.push_back(std::move(w));
      queue.push_back(positive_roots_.size() - 1);
    }
  }
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw PreconditionError("weight rank mismatch");
  return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](int c) { return c >= 0; });
}

bool RootDatum::dominant_diff(const Weight& lambda, const Weight& mu) const {
  return is_dominant(lambda - mu);
}

IndexSet supp_root(const RootVector& gamma) {
  IndexSet s;
  for (int i = 0; i < gamma.rank(); ++i)
    if (gamma.coords[i] != 0) s.insert(i);
  return s;
}

IndexSet supp_weight(const Weight& lambda) {
  IndexSet s;
  for (int i = 0; i < lambda.rank(); ++i)
    if (lambda.coords[i] != 0) s.insert(i);
  return s;
}

}  // namespace hrg
