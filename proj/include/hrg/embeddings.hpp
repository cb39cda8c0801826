#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrg/kgraph.hpp"

namespace hrg {

/// Outcome of an exhaustive check.
struct Report {
  std::string theorem;
  long long instances_checked = 0;
  std::vector<std::string> failures;
  /// Values recorded without an expectation.
  nlohmann::json info = nlohmann::json::object();

  bool ok() const { return failures.empty(); }
  void fail(std::string msg);
  nlohmann::json to_json() const;
};

/// Image of a Weyl-group graph in the k-graph: vertex i of the source graph
/// goes to vertex_map[i], edge k to edge_map[k].
struct ColoredGraphMap {
  std::vector<Vertex> vertex_map;
  std::vector<KPath> edge_map;
};

ColoredGraphMap embed_right_weak(const KGraph& kg);
/// Checks sources, ranges, colors and injectivity of embed_right_weak.
Report validate_right_weak(const KGraph& kg);

/// Number of injective color-preserving graph maps from `pattern` into
/// `target`, counting parallel target edges separately. Colors are matched
/// by index. With an anchor, pattern vertex v may only go to anchor[v].
long long count_embeddings(const ColoredDigraph& pattern, const ColoredDigraph& target,
                           const std::optional<std::vector<int>>& anchor = std::nullopt);

/// Embeddings of the weak Bruhat graphs into the skeleton. Anchored searches
/// fix the vertex map to w -> R(b_{w rho}) and count the edge assignments;
/// unanchored ones range over every injective vertex map.
long long uniqueness_search_right_weak(const KGraph& kg, bool anchored = true);
long long left_weak_embedding_search(const KGraph& kg, bool anchored = true);

/// Per Bruhat edge (in bruhat_graph() order), the nonzero weights within
/// `bound` whose support contains the support of the edge's root.
std::vector<std::vector<Weight>> coloring_candidates(const KGraph& kg, const Weight& bound);

/// One weight per Bruhat edge.
struct CompatibleColoring {
  std::vector<Weight> colors;
};

bool is_compatible(const KGraph& kg, const CompatibleColoring& c);
/// All compatible colorings within bound; throws above `limit`.
std::vector<CompatibleColoring> enumerate_compatible_colorings(const KGraph& kg,
                                                               const Weight& bound,
                                                               long long limit = 1 << 22);
/// The coloring c(e) = sum of omega_i over the support of the edge's root.
CompatibleColoring minimal_coloring(const KGraph& kg);

ColoredGraphMap embed_bruhat(const KGraph& kg, const CompatibleColoring& c);
/// Validates embed_bruhat for one coloring.
Report validate_bruhat(const KGraph& kg, const CompatibleColoring& c);
/// Validates every compatible coloring within bound, reusing per-edge checks.
Report validate_all_bruhat(const KGraph& kg, const Weight& bound);

}  // namespace hrg
