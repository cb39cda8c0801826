#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrg/algebra.hpp"

namespace hrg {

using Column = std::vector<int>;

/// Straight-shape type A tableau stored by columns, left to right.
struct Tableau {
  std::vector<Column> columns;

  static Tableau from_rows(const std::vector<std::vector<int>>& rows);
  static Tableau from_json(const nlohmann::json& j);
  std::vector<std::vector<int>> rows() const;
  std::vector<int> shape() const;
  bool is_semistandard() const;
  std::string to_string() const;
  nlohmann::json to_json() const { return rows(); }
  auto operator<=>(const Tableau&) const = default;
};

/// Skew tableau: rows top first; a 0 marks a cell of the inner shape.
class SkewTableau {
 public:
  explicit SkewTableau(std::vector<std::vector<int>> rows);
  static SkewTableau straight(const Tableau& t);
  /// Rows with null for inner cells.
  static SkewTableau from_json(const nlohmann::json& j);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> outer() const;
  std::vector<int> inner() const;
  bool is_straight() const;
  bool is_semistandard() const;
  /// Entries of each column, top to bottom, inner cells skipped.
  std::vector<Column> columns() const;
  std::vector<std::pair<int, int>> inner_corners() const;
  std::vector<std::pair<int, int>> outer_addable() const;
  Tableau to_tableau() const;
  nlohmann::json to_json() const;
  std::string to_string() const;
  bool operator==(const SkewTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Forward slide into the inner corner (row, col).
SkewTableau jdt_slide(const SkewTableau& s, int row, int col);
/// Reverse slide from the addable outer cell (row, col).
SkewTableau reverse_slide(const SkewTableau& s, int row, int col);
/// Slides into the lowest inner corner until the shape is straight.
Tableau rectify(const SkewTableau& s);

/// Two adjacent columns (left, right) of a frank configuration, exchanged by
/// slides: returns (left', right') with the lengths swapped, or nothing when
/// the pair is not a Cartan element.
std::optional<std::pair<Column, Column>> two_column_braiding(const Column& left,
                                                             const Column& right);

/// Rows (top first, null for empty) of a column sequence: a column is
/// top-aligned with its right neighbour when at least as long, otherwise
/// bottom-aligned.
nlohmann::json column_layout(const std::vector<Column>& cols);

struct KeyComputation {
  Tableau key;
  /// Every column configuration produced by the slides, in order.
  std::vector<std::vector<Column>> trace;
};

KeyComputation left_key_trace(const Tableau& t);
KeyComputation right_key_trace(const Tableau& t);
Tableau left_key(const Tableau& t);
Tableau right_key(const Tableau& t);
bool is_key(const Tableau& t);

/// Right ends through slides, one column per tensor factor (shortest column
/// first, matching the order of the right-end tuple).
std::vector<Column> right_ends_via_slides(const Tableau& t);

/// b^1 x ... x b^n (kinds nondecreasing) maps to the tableau with columns
/// b^n, ..., b^1. Type A with the HongKang convention only.
Tableau from_crystal(const Algebra& alg, const std::vector<int>& kinds, const Tuple& t);
std::pair<std::vector<int>, Tuple> to_crystal(const Algebra& alg, const Tableau& t);
Column column_of(const Algebra& alg, int i, int b);
int element_of(const Algebra& alg, const Column& c);

/// Letters of CR(C_n) x ... x CR(C_1), each column read top to bottom.
std::vector<int> column_reading(const SkewTableau& s);
/// Kashiwara operator on a skew tableau through its column reading.
std::optional<SkewTableau> skew_f(const Algebra& alg, const SkewTableau& s, int i);
std::optional<SkewTableau> skew_e(const Algebra& alg, const SkewTableau& s, int i);

}  // namespace hrg
