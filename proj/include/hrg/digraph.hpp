#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace hrg {

/// Directed multigraph with colored edges. Vertices and colors are indices
/// into label tables; `tag` distinguishes parallel edges of the same color.
class ColoredDigraph {
 public:
  struct Edge {
    int src = 0;
    int dst = 0;
    int color = 0;
    std::string tag;
    auto operator<=>(const Edge&) const = default;
  };

  int add_vertex(std::string label);
  int add_color(std::string label);
  /// Returns false when an identical (src, dst, color, tag) edge exists.
  bool add_edge(int src, int dst, int color, std::string tag = {});

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::vector<std::string>& color_labels() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge> out_edges(int v) const;
  int multiplicity(int src, int dst, int color) const;
  bool is_loop(const Edge& e) const { return e.src == e.dst; }

  /// Edges in canonical (src, dst, color, tag) order.
  std::vector<Edge> sorted_edges() const;

  std::string to_dot(bool show_loops = true, const std::string& name = "G") const;
  nlohmann::json to_json(bool show_loops = true) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> colors_;
  std::vector<Edge> edges_;
};

}  // namespace hrg
