#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <map>
#include <vector>

#include "hrg/digraph.hpp"
#include "hrg/rootdata.hpp"

namespace hrg {

/// Handle to an element of a particular WeylGroup instance.
struct WeylElement {
  std::uint64_t group = 0;
  int index = 0;
  auto operator<=>(const WeylElement&) const = default;
};

/// Finite Weyl group, generated by breadth-first closure on the orbit of rho.
/// Elements are indexed in BFS order, so the identity is index 0 and lengths
/// are non-decreasing along the index.
class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootDatum> datum, int size_cap = 500000);

  const RootDatum& datum() const { return *datum_; }
  int size() const { return static_cast<int>(fingerprints_.size()); }
  std::vector<WeylElement> elements() const;
  WeylElement element(int index) const;
  WeylElement identity() const { return element(0); }
  WeylElement longest() const;
  WeylElement simple(int i) const;

  const Weight& fingerprint(WeylElement w) const;
  /// Stored reduced word, 0-based letters, outermost first.
  const std::vector<int>& word(WeylElement w) const;
  int length(WeylElement w) const;
  /// "1" for the identity, otherwise "s1s2..." with 1-based letters.
  std::string name(WeylElement w) const;
  WeylElement parse(const std::string& name) const;
  std::optional<WeylElement> find(const Weight& fingerprint) const;
  WeylElement from_word(const std::vector<int>& word) const;

  WeylElement multiply(WeylElement u, WeylElement w) const;
  WeylElement inverse(WeylElement w) const;

  Weight act(WeylElement w, const Weight& lambda) const;
  RootVector act(WeylElement w, const RootVector& gamma) const;

  const std::vector<WeylElement>& reflections() const { return reflections_; }
  bool is_reflection(WeylElement w) const;
  RootVector positive_root_of(WeylElement t) const;
  WeylElement reflection_of(const RootVector& gamma) const;

  /// Edges u -> ut for every reflection t with l(ut) > l(u); colors are
  /// reflection names, in the order of `reflections()`.
  ColoredDigraph bruhat_graph() const;
  /// Same edge set built from left multiplication w = tu.
  ColoredDigraph bruhat_graph_left() const;
  /// u -> u s_i (right) or u -> s_i u (left); colors "1".."r".
  ColoredDigraph right_weak_graph() const;
  ColoredDigraph left_weak_graph() const;

  bool bruhat_leq(WeylElement u, WeylElement w) const;
  /// Lexicographically largest decreasing sequence of 1-based positions to
  /// delete from word(w) so every intermediate word is reduced and the final
  /// word evaluates to w2.
  std::vector<int> removal_sequence(WeylElement w, WeylElement w2) const;

 private:
  void check(WeylElement w) const;
  Weight apply_word(const std::vector<int>& word, Weight v) const;
  ColoredDigraph empty_graph() const;

  std::shared_ptr<const RootDatum> datum_;
  std::uint64_t id_;
  std::vector<Weight> fingerprints_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::map<Weight, int> lookup_;
  std::vector<WeylElement> reflections_;
  std::vector<RootVector> reflection_roots_;

  mutable std::mutex reach_mutex_;
  mutable std::vector<std::vector<bool>> reach_;
};

}  // namespace hrg
