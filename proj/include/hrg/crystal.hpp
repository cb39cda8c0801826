#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hrg/digraph.hpp"
#include "hrg/rootdata.hpp"

namespace hrg {

enum class Convention { HongKang, Opposite };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

using Tuple = std::vector<int>;

class Crystal;
using CrystalPtr = std::shared_ptr<const Crystal>;

/// Finite crystal with elements 0..size()-1. Operator results that are zero
/// are represented by an empty optional.
///
/// A crystal built as a component of a tensor product remembers the tuple of
/// factor elements behind each of its elements.
class Crystal {
 public:
  /// `f[i][b]` is the index of F_i b, or -1. Validates the crystal axioms.
  Crystal(std::shared_ptr<const RootDatum> datum, std::vector<std::string> labels,
          std::vector<Weight> weights, std::vector<std::vector<int>> f);

  /// `{ "weight": [..], "elements": [ids], "wt": {id: [..]}, "f": {"1": {id: id}} }`
  static Crystal from_json(std::shared_ptr<const RootDatum> datum, const nlohmann::json& j);
  nlohmann::json to_json() const;

  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int b) const { return labels_.at(b); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index(const std::string& label) const;
  std::optional<int> find(const std::string& label) const;

  const Weight& weight(int b) const { return weights_.at(b); }
  std::optional<int> f(int i, int b) const;
  std::optional<int> e(int i, int b) const;
  int epsilon(int i, int b) const;
  int phi(int i, int b) const;
  /// Simple reflection s_i acting on the crystal; never zero.
  int s(int i, int b) const;

  std::vector<int> highest_weight_elements() const;
  /// The unique highest weight element; throws unless there is exactly one.
  int highest() const;
  Weight highest_weight() const { return weight(highest()); }
  std::vector<int> connected_component(int b) const;
  bool is_connected() const;
  /// b is reachable from b2 by a sequence of F operators (b <= b2).
  bool below(int b, int b2) const;

  /// Fundamental index (0-based) for B(omega_i) crystals, else -1.
  int fundamental_index() const { return fundamental_; }
  void set_fundamental_index(int i) { fundamental_ = i; }

  bool is_product_component() const { return !tuples_.empty(); }
  const std::vector<CrystalPtr>& factors() const { return factors_; }
  const Tuple& tuple(int b) const { return tuples_.at(b); }
  std::optional<int> find_tuple(const Tuple& t) const;

  ColoredDigraph graph() const;

  /// Records the factor tuple behind each element.
  void attach_tuples(std::vector<CrystalPtr> factors, std::vector<Tuple> tuples);

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  std::vector<std::vector<int>> f_;
  std::vector<std::vector<int>> e_;
  std::map<std::string, int> by_label_;
  int fundamental_ = -1;
  std::vector<CrystalPtr> factors_;
  std::vector<Tuple> tuples_;
  std::map<Tuple, int> by_tuple_;
};

/// Tensor product of crystals, evaluated left-associatively by the
/// two-factor rule of the chosen convention.
class TensorProduct {
 public:
  TensorProduct(std::vector<CrystalPtr> factors, Convention convention);

  int arity() const { return static_cast<int>(factors_.size()); }
  const std::vector<CrystalPtr>& factors() const { return factors_; }
  Convention convention() const { return convention_; }

  Weight weight(const Tuple& t) const;
  int epsilon(int i, const Tuple& t) const;
  int phi(int i, const Tuple& t) const;
  std::optional<Tuple> f(int i, const Tuple& t) const;
  std::optional<Tuple> e(int i, const Tuple& t) const;
  Tuple s(int i, const Tuple& t) const;
  Tuple highest() const;
  std::string label(const Tuple& t) const;
  Tuple parse(const std::string& label) const;
  bool contains(const Tuple& t) const;

  /// Connected component of the tuple of highest weight elements, as a
  /// materialized crystal whose elements remember their tuples.
  CrystalPtr cartan_component() const;
  /// Connected component of an arbitrary element.
  CrystalPtr component_of(const Tuple& t) const;

 private:
  void prefix(int i, const Tuple& t, std::vector<int>& eps, std::vector<int>& ph) const;
  std::optional<Tuple> apply(int i, const Tuple& t, bool lower) const;

  std::vector<CrystalPtr> factors_;
  Convention convention_;
};

/// Unique crystal isomorphism between connected crystals with equal highest
/// weights, found by breadth-first propagation along F edges. `out[b]` is the
/// image of element b of `a` in `b`.
std::vector<int> canonical_isomorphism(const Crystal& a, const Crystal& b);

/// Fundamental crystal B(omega_i) for built-in data (type A, C2).
Crystal build_fundamental(std::shared_ptr<const RootDatum> datum, int i);

/// Type A column model: element label for a k-subset, letter 'a'+k-1 and
/// 1-based lexicographic position.
std::vector<std::vector<int>> type_a_columns(int rank, int k);

}  // namespace hrg
