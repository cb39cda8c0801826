#pragma once
// Reference implementations that share no code with the library.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

/// One-line notation of a permutation of {0..n-1}.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Product of simple transpositions s_{w[0]} s_{w[1]} ... as functions.
inline Perm perm_of_word(int n, const std::vector<int>& word) {
  Perm p = identity_perm(n);
  for (int a : word) std::swap(p[a], p[a + 1]);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline int inversions(const Perm& p) {
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) k += p[i] > p[j];
  return k;
}

/// Tableau criterion for the Bruhat order on S_n.
inline bool bruhat_leq(const Perm& u, const Perm& w) {
  const int n = static_cast<int>(u.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a(u.begin(), u.begin() + k), b(w.begin(), w.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int j = 0; j < k; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

inline long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Weyl dimension of the sl_{n+1} module with highest weight given in
/// fundamental coordinates.
inline long long dim_type_a(const std::vector<int>& lam) {
  const int n = static_cast<int>(lam.size());
  long long num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long long s = 0;
      for (int k = i; k <= j; ++k) s += lam[k] + 1;
      num *= s;
      den *= j - i + 1;
    }
  return num / den;
}

/// sp_4, a on the short simple root's fundamental weight.
inline long long dim_c2(int a, int b) {
  return static_cast<long long>(a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6;
}

/// Signature rule. `eps` and `phi` are per factor in tensor order; factors
/// are read left to right (`reversed` reads them right to left). Returns the
/// factor F acts on (or nothing), the factor E acts on, and epsilon of the
/// product.
struct Signature {
  std::optional<int> f_factor;
  std::optional<int> e_factor;
  int epsilon = 0;
  int phi = 0;
};

inline Signature signature(const std::vector<int>& eps, const std::vector<int>& phi,
                           bool reversed) {
  const int n = static_cast<int>(eps.size());
  // Each sign remembers its factor; '-' is 0, '+' is 1.
  std::vector<std::pair<int, int>> seq;
  for (int s = 0; s < n; ++s) {
    const int k = reversed ? n - 1 - s : s;
    for (int a = 0; a < eps[k]; ++a) seq.push_back({0, k});
    for (int a = 0; a < phi[k]; ++a) seq.push_back({1, k});
  }
  std::vector<std::pair<int, int>> st;
  for (const auto& x : seq) {
    if (x.first == 0 && !st.empty() && st.back().first == 1)
      st.pop_back();
    else
      st.push_back(x);
  }
  Signature out;
  for (const auto& x : st) {
    if (x.first == 0) {
      ++out.epsilon;
      out.e_factor = x.second;
    } else {
      ++out.phi;
      if (!out.f_factor) out.f_factor = x.second;
    }
  }
  return out;
}

}  // namespace oracle
