#include "hrg/digraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hrg {

int ColoredDigraph::add_vertex(std::string label) {
  vertices_.push_back(std::move(label));
  return vertex_count() - 1;
}

int ColoredDigraph::add_color(std::string label) {
  colors_.push_back(std::move(label));
  return static_cast<int>(colors_.size()) - 1;
}

bool ColoredDigraph::add_edge(int src, int dst, int color, std::string tag) {
  if (src < 0 || src >= vertex_count() || dst < 0 || dst >= vertex_count())
    throw std::out_of_range("edge endpoint out of range");
  if (color < 0 || color >= static_cast<int>(colors_.size()))
    throw std::out_of_range("edge color out of range");
  Edge e{src, dst, color, std::move(tag)};
  if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) return false;
  edges_.push_back(std::move(e));
  return true;
}

std::vector<ColoredDigraph::Edge> ColoredDigraph::out_edges(int v) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.src == v) out.push_back(e);
  return out;
}

int ColoredDigraph::multiplicity(int src, int dst, int color) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.src == src && e.dst == dst && e.color == color;
  }));
}

std::vector<ColoredDigraph::Edge> ColoredDigraph::sorted_edges() const {
  auto out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ColoredDigraph::to_dot(bool show_loops, const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (const auto& v : vertices_) os << "  " << quoted(v) << ";\n";
  for (const auto& e : sorted_edges()) {
    if (!show_loops && is_loop(e)) continue;
    os << "  " << quoted(vertices_[e.src]) << " -> " << quoted(vertices_[e.dst])
       << " [color=" << quoted(colors_[e.color]);
    if (!e.tag.empty()) os << ", label=" << quoted(e.tag);
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json ColoredDigraph::to_json(bool show_loops) const {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : sorted_edges()) {
    if (!show_loops && is_loop(e)) continue;
    nlohmann::json j = {{"src", vertices_[e.src]}, {"dst", vertices_[e.dst]},
                        {"color", colors_[e.color]}};
    if (!e.tag.empty()) j["element"] = e.tag;
    edges.push_back(std::move(j));
  }
  return {{"vertices", vertices_}, {"edges", std::move(edges)}};
}

}  // namespace hrg
