#include "hrg/rightends.hpp"

#include <algorithm>

namespace hrg {

namespace {

void check_arity(const std::vector<int>& kinds, const Tuple& t) {
  if (kinds.size() != t.size()) throw PreconditionError("tuple does not match its kinds");
}

Weight total_weight(const Algebra& alg, const std::vector<int>& kinds) {
  return alg.weight_of(kinds);
}

}  // namespace

std::optional<std::pair<std::vector<int>, Tuple>> bubble_to_end(const Algebra& alg,
                                                                std::vector<int> kinds, Tuple t,
                                                                int k) {
  check_arity(kinds, t);
  const int n = static_cast<int>(t.size());
  if (k < 0 || k >= n) throw std::out_of_range("chain start");
  for (int j = k; j + 1 < n; ++j) {
    auto r = alg.sigma(kinds[j], kinds[j + 1], t[j], t[j + 1]);
    if (!r) return std::nullopt;
    std::swap(kinds[j], kinds[j + 1]);
    t[j] = r->first;
    t[j + 1] = r->second;
  }
  return std::make_pair(std::move(kinds), std::move(t));
}

std::optional<int> right_end_chain(const Algebra& alg, const std::vector<int>& kinds,
                                   const Tuple& t, int k) {
  auto r = bubble_to_end(alg, kinds, t, k);
  if (!r) return std::nullopt;
  return r->second.back();
}

bool is_cartan(const Algebra& alg, const std::vector<int>& kinds, const Tuple& t) {
  check_arity(kinds, t);
  for (int k = 0; k + 1 < static_cast<int>(t.size()); ++k)
    if (!bubble_to_end(alg, kinds, t, k)) return false;
  return true;
}

std::optional<int> right_end(const Algebra& alg, const Weight& mu, const std::vector<int>& kinds,
                             const Tuple& t) {
  check_arity(kinds, t);
  const Weight lambda = total_weight(alg, kinds);
  if (!alg.datum().is_dominant(mu) || !alg.datum().dominant_diff(lambda, mu))
    throw PreconditionError("right end needs lambda - mu dominant");
  if (!is_cartan(alg, kinds, t)) return std::nullopt;

  // Pick the last occurrence of each omega_i in mu and move the picked
  // factors to the end, keeping their relative order.
  std::vector<int> need(alg.rank(), 0);
  for (int i = 0; i < alg.rank(); ++i) need[i] = mu[i];
  std::vector<bool> picked(t.size(), false);
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) {
    if (need[kinds[k]] > 0) {
      --need[kinds[k]];
      picked[k] = true;
    }
  }
  std::vector<int> ks = kinds;
  Tuple cur = t;
  int end = static_cast<int>(t.size());
  for (int k = end - 1; k >= 0; --k) {
    if (!picked[k]) continue;
    for (int j = k; j + 1 < end; ++j) {
      auto r = alg.sigma(ks[j], ks[j + 1], cur[j], cur[j + 1]);
      if (!r) return std::nullopt;
      std::swap(ks[j], ks[j + 1]);
      cur[j] = r->first;
      cur[j + 1] = r->second;
    }
    --end;
  }
  const Tuple tail(cur.begin() + end, cur.end());
  auto b = alg.highest(mu)->find_tuple(tail);
  if (!b) throw Error("right end landed outside B(mu)");
  return b;
}

std::optional<int> right_end_inclusion(const Algebra& alg, const Weight& mu,
                                       const std::vector<int>& kinds, const Tuple& t) {
  check_arity(kinds, t);
  const Weight lambda = total_weight(alg, kinds);
  if (!alg.datum().is_dominant(mu) || !alg.datum().dominant_diff(lambda, mu))
    throw PreconditionError("right end needs lambda - mu dominant");
  auto src = alg.cartan(kinds);
  auto b = src->find_tuple(t);
  if (!b) return std::nullopt;
  std::vector<int> head = alg.kinds(lambda - mu);
  std::vector<int> tailk = alg.kinds(mu);
  std::vector<int> target = head;
  target.insert(target.end(), tailk.begin(), tailk.end());
  const Tuple& image = alg.cartan(target)->tuple(alg.isomorphism(kinds, target)[*b]);
  const Tuple tail(image.begin() + head.size(), image.end());
  return alg.highest(mu)->find_tuple(tail);
}

std::optional<int> right_end_fundamental(const Algebra& alg, int i, const std::vector<int>& kinds,
                                         const Tuple& t) {
  check_arity(kinds, t);
  auto last = std::find(kinds.rbegin(), kinds.rend(), i);
  if (last == kinds.rend())
    throw PreconditionError("omega_" + std::to_string(i + 1) + " does not occur in the product");
  if (!is_cartan(alg, kinds, t)) return std::nullopt;
  const int k = static_cast<int>(kinds.rend() - last) - 1;
  return right_end_chain(alg, kinds, t, k);
}

Tuple right_end_tuple(const Algebra& alg, const std::vector<int>& kinds, const Tuple& t) {
  if (!is_cartan(alg, kinds, t)) throw PreconditionError("element outside the Cartan component");
  Tuple out;
  for (int i = 0; i < alg.rank(); ++i) {
    auto last = std::find(kinds.rbegin(), kinds.rend(), i);
    if (last == kinds.rend())
      throw PreconditionError("omega_" + std::to_string(i + 1) + " does not occur in the product");
    out.push_back(*right_end_chain(alg, kinds, t, static_cast<int>(kinds.rend() - last) - 1));
  }
  return out;
}

bool source_identity_check(const Algebra& alg, const Tuple& c, const Weight& lambda,
                           const Tuple& b) {
  const int r = alg.rank();
  if (static_cast<int>(c.size()) != r) throw PreconditionError("c must be a B(rho) tuple");
  std::vector<int> kinds;
  for (int i = 0; i < r; ++i) kinds.push_back(i);
  const auto lk = alg.kinds(lambda);
  kinds.insert(kinds.end(), lk.begin(), lk.end());
  Tuple full = c;
  full.insert(full.end(), b.begin(), b.end());
  if (!is_cartan(alg, kinds, full))
    throw PreconditionError("c x b is outside the Cartan component");
  const Tuple ends = right_end_tuple(alg, std::vector<int>(kinds.begin(), kinds.begin() + r), c);
  for (int i = 0; i < r; ++i) {
    auto direct = right_end_chain(alg, kinds, full, i);
    std::vector<int> small{i};
    small.insert(small.end(), lk.begin(), lk.end());
    Tuple st{ends[i]};
    st.insert(st.end(), b.begin(), b.end());
    auto fast = right_end_chain(alg, small, st, 0);
    if (direct != fast) return false;
  }
  return true;
}

}  // namespace hrg
