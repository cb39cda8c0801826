#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "hrg/crystal.hpp"
#include "hrg/weyl.hpp"

namespace hrg {

/// Shared context for one Lie algebra and one tensor convention: Weyl group,
/// fundamental crystals, realizations of B(lambda), and cached braidings.
///
/// B(lambda) is realized as the Cartan component of
/// B(omega_{i_1}) x ... x B(omega_{i_n}) with i_1 <= ... <= i_n, so its
/// elements are flat tuples of fundamental elements.
class Algebra {
 public:
  Algebra(RootDatum datum, Convention convention = Convention::HongKang,
          std::vector<Crystal> fundamentals = {});
  static std::shared_ptr<Algebra> builtin(const std::string& name,
                                          Convention convention = Convention::HongKang);

  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }
  const WeylGroup& weyl() const { return *weyl_; }
  Convention convention() const { return convention_; }
  int rank() const { return datum_->rank(); }

  CrystalPtr fundamental(int i) const;

  /// Multiset of fundamental indices of a dominant weight, increasing.
  std::vector<int> kinds(const Weight& lambda) const;
  Weight weight_of(const std::vector<int>& kinds) const;
  TensorProduct product(const std::vector<int>& kinds) const;
  /// Cartan component of the flat product with the given factor kinds.
  CrystalPtr cartan(const std::vector<int>& kinds) const;
  /// B(lambda); B(0) is the one-element crystal on the empty tuple.
  CrystalPtr highest(const Weight& lambda) const;

  /// Canonical isomorphism cartan(from) -> cartan(to).
  const std::vector<int>& isomorphism(const std::vector<int>& from,
                                      const std::vector<int>& to) const;

  /// Cartan braiding B(omega_i) x B(omega_j) -> B(omega_j) x B(omega_i):
  /// (x, y) -> (y', x'), or nothing off the Cartan component.
  std::optional<std::pair<int, int>> sigma(int i, int j, int x, int y) const;
  /// Cartan braiding for composite factors given as flat tuples.
  std::optional<Tuple> braid(const std::vector<int>& left, const std::vector<int>& right,
                             const Tuple& t) const;

  /// b_{w lambda} as an index into highest(lambda).
  int extremal(WeylElement w, const Weight& lambda) const;
  /// b_{w omega_i} as an index into fundamental(i).
  int extremal_fundamental(WeylElement w, int i) const;
  /// Flat tuple of b_{w lambda}.
  Tuple extremal_tuple(WeylElement w, const Weight& lambda) const;

  std::string label(const std::vector<int>& kinds, const Tuple& t) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::unique_ptr<WeylGroup> weyl_;
  Convention convention_;
  std::vector<CrystalPtr> fundamentals_;

  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, CrystalPtr> cartan_cache_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> iso_cache_;
  mutable std::map<std::pair<int, int>, std::vector<std::optional<std::pair<int, int>>>>
      sigma_cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace hrg
