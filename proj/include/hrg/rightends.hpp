#pragma once

#include <optional>
#include <vector>

#include "hrg/algebra.hpp"

namespace hrg {

/// Applies sigma_k, sigma_{k+1}, ..., sigma_{n-1} (0-based k) to a flat tuple,
/// moving factor k to the end. Returns the new kinds and tuple, or nothing
/// when some braiding is zero.
std::optional<std::pair<std::vector<int>, Tuple>> bubble_to_end(const Algebra& alg,
                                                                std::vector<int> kinds, Tuple t,
                                                                int k);

/// Last factor after bubbling factor k to the end; an index into
/// fundamental(kinds[k]).
std::optional<int> right_end_chain(const Algebra& alg, const std::vector<int>& kinds,
                                   const Tuple& t, int k);

/// Cartan membership: every chain k = 0..n-2 is nonzero.
bool is_cartan(const Algebra& alg, const std::vector<int>& kinds, const Tuple& t);

/// R_mu of an element given by its flat tuple; an index into highest(mu), or
/// nothing outside the Cartan component.
std::optional<int> right_end(const Algebra& alg, const Weight& mu, const std::vector<int>& kinds,
                             const Tuple& t);

/// Same value through the canonical inclusion into B(lambda - mu) x B(mu).
std::optional<int> right_end_inclusion(const Algebra& alg, const Weight& mu,
                                       const std::vector<int>& kinds, const Tuple& t);

/// R_i as an index into fundamental(i).
std::optional<int> right_end_fundamental(const Algebra& alg, int i, const std::vector<int>& kinds,
                                         const Tuple& t);

/// (R_1(b), ..., R_r(b)); throws for elements outside the Cartan component or
/// when some omega_i does not occur among the kinds.
Tuple right_end_tuple(const Algebra& alg, const std::vector<int>& kinds, const Tuple& t);

/// R_i(c x b) = R_i(c_i x b) for all i, where (c_1, ..., c_r) = R(c), c in
/// B(rho) and b in B(lambda).
bool source_identity_check(const Algebra& alg, const Tuple& c, const Weight& lambda,
                           const Tuple& b);

}  // namespace hrg
