#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hrg/algebra.hpp"
#include "hrg/digraph.hpp"

namespace hrg {

/// A vertex is a right-end tuple: one fundamental element per index.
using Vertex = Tuple;

/// Morphism (v, b) of degree lambda, with b an index into B(lambda).
struct KPath {
  Vertex vertex;
  Weight degree;
  int element = 0;
  auto operator<=>(const KPath&) const = default;
};

/// The higher-rank graph attached to an algebra.
class KGraph {
 public:
  explicit KGraph(AlgebraPtr algebra);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }

  /// Sorted, deduplicated right-end tuples of B(rho).
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int vertex_index(const Vertex& v) const;
  std::string vertex_label(const Vertex& v) const;
  Vertex parse_vertex(const std::string& label) const;
  /// Elements of B(rho) (flat tuples) with the given right ends.
  const std::vector<Tuple>& fiber(const Vertex& v) const;
  const Tuple& representative(const Vertex& v) const { return fiber(v).front(); }

  bool is_path(const Vertex& v, const Weight& lambda, int b) const;
  /// Membership test with an explicit B(rho) representative.
  bool is_path_with(const Tuple& c, const Weight& lambda, int b) const;
  Vertex range(const KPath& p) const { return p.vertex; }
  Vertex source(const KPath& p) const;
  /// R(c x b) computed on the full product, for an explicit representative.
  Vertex source_with(const Tuple& c, const Weight& lambda, int b) const;
  KPath identity(const Vertex& v) const;
  KPath compose(const KPath& p, const KPath& q) const;

  ColoredDigraph skeleton() const;
  std::vector<KPath> enumerate_paths(const Weight& bound) const;
  std::vector<KPath> paths_of_degree(const Weight& lambda) const;
  /// The unique (g, h) with degrees m and degree(p) - m and g h = p; throws
  /// when none or several exist.
  std::pair<KPath, KPath> factorize(const KPath& p, const Weight& m) const;

  Vertex weyl_vertex(WeylElement w) const;
  std::optional<WeylElement> weyl_label(const Vertex& v) const;
  bool vertex_leq(const Vertex& v, const Vertex& v2) const;

  std::string element_label(const Weight& lambda, int b) const;
  nlohmann::json path_json(const KPath& p) const;

  /// Largest element count the enumeration may materialize.
  static constexpr long long kMaxEnumeration = 2000000;

 private:
  void check_vertex(const Vertex& v) const;

  AlgebraPtr alg_;
  std::vector<int> rho_kinds_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::vector<Tuple>> fibers_;
  mutable std::mutex mutex_;
  mutable std::map<KPath, Vertex> source_cache_;
};

std::string degree_string(const Weight& w);
Weight parse_degree(const std::string& s, int rank);

}  // namespace hrg
