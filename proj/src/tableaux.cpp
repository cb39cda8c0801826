#include "hrg/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hrg/rightends.hpp"

namespace hrg {

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  Tableau t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      throw PreconditionError("row lengths must weakly decrease");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (t.columns.size() <= c) t.columns.emplace_back();
      t.columns[c].push_back(rows[r][c]);
    }
  }
  return t;
}

Tableau Tableau::from_json(const nlohmann::json& j) {
  try {
    return from_rows(j.get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed tableau: ") + e.what());
  }
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out;
  for (const auto& col : columns)
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (out.size() <= r) out.emplace_back();
      out[r].push_back(col[r]);
    }
  return out;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows()) s.push_back(static_cast<int>(r.size()));
  return s;
}

bool Tableau::is_semistandard() const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].empty()) return false;
    if (c > 0 && columns[c].size() > columns[c - 1].size()) return false;
    for (std::size_t r = 0; r < columns[c].size(); ++r) {
      if (columns[c][r] < 1) return false;
      if (r > 0 && columns[c][r] <= columns[c][r - 1]) return false;
      if (c > 0 && columns[c][r] < columns[c - 1][r]) return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string s;
  auto rs = rows();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (r) s += " / ";
    for (std::size_t c = 0; c < rs[r].size(); ++c) s += (c ? " " : "") + std::to_string(rs[r][c]);
  }
  return s;
}

SkewTableau::SkewTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  int prev_outer = -1, prev_inner = -1;
  for (const auto& row : rows_) {
    int inner = 0;
    while (inner < static_cast<int>(row.size()) && row[inner] == 0) ++inner;
    for (int c = inner; c < static_cast<int>(row.size()); ++c)
      if (row[c] <= 0) throw PreconditionError("skew tableau: empty cell after an entry");
    const int outer = static_cast<int>(row.size());
    if (prev_outer >= 0 && (outer > prev_outer || inner > prev_inner))
      throw PreconditionError("skew tableau: shapes must be partitions");
    prev_outer = outer;
    prev_inner = inner;
  }
}

SkewTableau SkewTableau::straight(const Tableau& t) { return SkewTableau(t.rows()); }

SkewTableau SkewTableau::from_json(const nlohmann::json& j) {
  std::vector<std::vector<int>> rows;
  try {
    for (const auto& row : j) {
      rows.emplace_back();
      for (const auto& v : row) rows.back().push_back(v.is_null() ? 0 : v.get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed skew tableau: ") + e.what());
  }
  return SkewTableau(std::move(rows));
}

std::vector<int> SkewTableau::outer() const {
  std::vector<int> s;
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::vector<int> SkewTableau::inner() const {
  std::vector<int> s;
  for (const auto& r : rows_) {
    int k = 0;
    while (k < static_cast<int>(r.size()) && r[k] == 0) ++k;
    s.push_back(k);
  }
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

bool SkewTableau::is_straight() const { return inner().empty(); }

bool SkewTableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v == 0) continue;
      if (c + 1 < rows_[r].size() && rows_[r][c + 1] < v) return false;
      if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r + 1][c] != 0 &&
          rows_[r + 1][c] <= v)
        return false;
    }
  }
  return true;
}

std::vector<Column> SkewTableau::columns() const {
  std::vector<Column> cols;
  for (const auto& row : rows_)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      if (row[c] != 0) cols[c].push_back(row[c]);
    }
  return cols;
}

std::vector<std::pair<int, int>> SkewTableau::inner_corners() const {
  auto in = inner();
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < in.size(); ++r) {
    if (in[r] == 0) continue;
    if (r + 1 < in.size() && in[r + 1] == in[r]) continue;
    out.emplace_back(static_cast<int>(r), in[r] - 1);
  }
  return out;
}

std::vector<std::pair<int, int>> SkewTableau::outer_addable() const {
  auto out_shape = outer();
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r <= out_shape.size(); ++r) {
    const int len = r < out_shape.size() ? out_shape[r] : 0;
    if (r == 0 || out_shape[r - 1] > len) out.emplace_back(static_cast<int>(r), len);
  }
  return out;
}

Tableau SkewTableau::to_tableau() const {
  if (!is_straight()) throw PreconditionError("skew tableau is not straight");
  return Tableau::from_rows(rows_);
}

nlohmann::json SkewTableau::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) r.push_back(v == 0 ? nlohmann::json(nullptr) : nlohmann::json(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::string SkewTableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += " / ";
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      s += (c ? " " : "") + (rows_[r][c] == 0 ? std::string(".") : std::to_string(rows_[r][c]));
  }
  return s;
}

namespace {

int cell(const std::vector<std::vector<int>>& g, int r, int c) {
  if (r < 0 || c < 0 || r >= static_cast<int>(g.size()) || c >= static_cast<int>(g[r].size()))
    return -1;
  return g[r][c];
}

}  // namespace

SkewTableau jdt_slide(const SkewTableau& s, int row, int col) {
  auto corners = s.inner_corners();
  if (std::find(corners.begin(), corners.end(), std::make_pair(row, col)) == corners.end())
    throw PreconditionError("(" + std::to_string(row) + "," + std::to_string(col) +
                            ") is not an inner corner");
  auto g = s.rows();
  int r = row, c = col;
  while (true) {
    const int right = cell(g, r, c + 1);
    const int below = cell(g, r + 1, c);
    const bool has_r = right > 0, has_b = below > 0;
    if (!has_r && !has_b) break;
    if (has_b && (!has_r || below <= right)) {
      g[r][c] = below;
      ++r;
    } else {
      g[r][c] = right;
      ++c;
    }
  }
  if (c != static_cast<int>(g[r].size()) - 1) throw Error("slide ended inside a row");
  g[r].pop_back();
  return SkewTableau(std::move(g));
}

SkewTableau reverse_slide(const SkewTableau& s, int row, int col) {
  auto addable = s.outer_addable();
  if (std::find(addable.begin(), addable.end(), std::make_pair(row, col)) == addable.end())
    throw PreconditionError("(" + std::to_string(row) + "," + std::to_string(col) +
                            ") is not an addable outer cell");
  auto g = s.rows();
  if (row == static_cast<int>(g.size())) g.emplace_back();
  g[row].push_back(0);
  int r = row, c = col;
  while (true) {
    const int left = cell(g, r, c - 1);
    const int above = cell(g, r - 1, c);
    const bool has_l = left > 0, has_a = above > 0;
    if (!has_l && !has_a) break;
    if (has_l && (!has_a || left > above)) {
      g[r][c] = left;
      --c;
    } else {
      g[r][c] = above;
      --r;
    }
  }
  g[r][c] = 0;
  return SkewTableau(std::move(g));
}

Tableau rectify(const SkewTableau& s) {
  SkewTableau cur = s;
  while (!cur.is_straight()) {
    auto corners = cur.inner_corners();
    cur = jdt_slide(cur, corners.back().first, corners.back().second);
  }
  return cur.to_tableau();
}

namespace {

bool strictly_increasing(const Column& c) {
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] <= c[k - 1]) return false;
  return !c.empty();
}

}  // namespace

std::optional<std::pair<Column, Column>> two_column_braiding(const Column& left,
                                                             const Column& right) {
  if (!strictly_increasing(left) || !strictly_increasing(right))
    throw PreconditionError("columns must be nonempty and strictly increasing");
  const int p = static_cast<int>(left.size());
  const int q = static_cast<int>(right.size());
  if (p == q) {
    for (int r = 0; r < p; ++r)
      if (left[r] > right[r]) return std::nullopt;
    return std::make_pair(left, right);
  }
  if (p > q) {
    std::vector<std::vector<int>> rows(p);
    for (int r = 0; r < p; ++r) {
      rows[r].push_back(left[r]);
      if (r < q) rows[r].push_back(right[r]);
    }
    SkewTableau s(std::move(rows));
    if (!s.is_semistandard()) return std::nullopt;
    for (int k = q; k < p; ++k) s = reverse_slide(s, k, 1);
    auto cols = s.columns();
    if (cols.size() != 2 || static_cast<int>(cols[0].size()) != q ||
        static_cast<int>(cols[1].size()) != p)
      throw Error("reverse slides produced an unexpected shape");
    return std::make_pair(cols[0], cols[1]);
  }
  std::vector<std::vector<int>> rows(q);
  for (int r = 0; r < q; ++r) {
    rows[r].push_back(r < q - p ? 0 : left[r - (q - p)]);
    rows[r].push_back(right[r]);
  }
  SkewTableau s(std::move(rows));
  if (!s.is_semistandard()) return std::nullopt;
  for (int k = q - p - 1; k >= 0; --k) s = jdt_slide(s, k, 0);
  auto cols = s.columns();
  if (cols.size() != 2 || static_cast<int>(cols[0].size()) != q ||
      static_cast<int>(cols[1].size()) != p)
    throw Error("slides produced an unexpected shape");
  return std::make_pair(cols[0], cols[1]);
}

nlohmann::json column_layout(const std::vector<Column>& cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<int> top(n, 0);
  for (int j = n - 2; j >= 0; --j) {
    const int lj = static_cast<int>(cols[j].size());
    const int lr = static_cast<int>(cols[j + 1].size());
    top[j] = lj >= lr ? top[j + 1] : top[j + 1] + lr - lj;
  }
  int lo = 0, hi = 0;
  if (n > 0) lo = *std::min_element(top.begin(), top.end());
  for (int j = 0; j < n; ++j) hi = std::max(hi, top[j] - lo + static_cast<int>(cols[j].size()));
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < hi; ++r) {
    nlohmann::json row = nlohmann::json::array();
    int last = -1;
    for (int j = 0; j < n; ++j) {
      const int k = r - (top[j] - lo);
      if (k >= 0 && k < static_cast<int>(cols[j].size())) last = j;
    }
    for (int j = 0; j <= last; ++j) {
      const int k = r - (top[j] - lo);
      if (k >= 0 && k < static_cast<int>(cols[j].size()))
        row.push_back(cols[j][k]);
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void swap_at(std::vector<Column>& cols, int j) {
  auto r = two_column_braiding(cols[j], cols[j + 1]);
  if (!r) throw PreconditionError("tableau is not semistandard");
  cols[j] = std::move(r->first);
  cols[j + 1] = std::move(r->second);
}

void check_tableau(const Tableau& t) {
  if (!t.is_semistandard()) throw PreconditionError("tableau is not semistandard");
}

}  // namespace

KeyComputation left_key_trace(const Tableau& t) {
  check_tableau(t);
  KeyComputation out;
  const int n = static_cast<int>(t.columns.size());
  auto cols = t.columns;
  out.key.columns.push_back(cols.empty() ? Column{} : cols[0]);
  if (n == 0) out.key.columns.clear();
  for (int k = 1; k < n; ++k) {
    for (int j = k - 1; j >= 0; --j) {
      swap_at(cols, j);
      out.trace.push_back(cols);
    }
    out.key.columns.push_back(cols[0]);
  }
  return out;
}

KeyComputation right_key_trace(const Tableau& t) {
  check_tableau(t);
  KeyComputation out;
  const int n = static_cast<int>(t.columns.size());
  if (n == 0) return out;
  auto cols = t.columns;
  std::vector<Column> key(n);
  key[n - 1] = cols[n - 1];
  for (int k = n - 2; k >= 0; --k) {
    for (int j = k; j + 1 < n; ++j) {
      swap_at(cols, j);
      out.trace.push_back(cols);
    }
    key[k] = cols[n - 1];
  }
  out.key.columns = std::move(key);
  return out;
}

Tableau left_key(const Tableau& t) { return left_key_trace(t).key; }
Tableau right_key(const Tableau& t) { return right_key_trace(t).key; }

bool is_key(const Tableau& t) {
  if (!t.is_semistandard()) return false;
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    std::set<int> prev(t.columns[c - 1].begin(), t.columns[c - 1].end());
    for (int v : t.columns[c])
      if (!prev.count(v)) return false;
  }
  return true;
}

std::vector<Column> right_ends_via_slides(const Tableau& t) {
  auto cols = left_key(t).columns;
  std::reverse(cols.begin(), cols.end());
  return cols;
}

namespace {

void require_type_a(const Algebra& alg) {
  if (alg.datum().family() != RootDatum::Family::TypeA)
    throw PreconditionError("tableaux need a type A algebra");
  if (alg.convention() != Convention::HongKang)
    throw PreconditionError("the tableau identification uses the HongKang convention");
}

}  // namespace

Column column_of(const Algebra& alg, int i, int b) {
  require_type_a(alg);
  return type_a_columns(alg.rank(), i + 1).at(b);
}

int element_of(const Algebra& alg, const Column& c) {
  require_type_a(alg);
  const int k = static_cast<int>(c.size());
  if (k < 1 || k > alg.rank()) throw PreconditionError("column length out of range");
  auto cols = type_a_columns(alg.rank(), k);
  auto it = std::find(cols.begin(), cols.end(), c);
  if (it == cols.end()) throw PreconditionError("column entries out of range");
  return static_cast<int>(it - cols.begin());
}

Tableau from_crystal(const Algebra& alg, const std::vector<int>& kinds, const Tuple& t) {
  require_type_a(alg);
  if (kinds.size() != t.size()) throw PreconditionError("tuple does not match its kinds");
  if (!std::is_sorted(kinds.begin(), kinds.end()))
    throw PreconditionError("factor kinds must be nondecreasing");
  if (!is_cartan(alg, kinds, t)) throw PreconditionError("element outside the Cartan component");
  Tableau out;
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k)
    out.columns.push_back(column_of(alg, kinds[k], t[k]));
  return out;
}

std::pair<std::vector<int>, Tuple> to_crystal(const Algebra& alg, const Tableau& t) {
  require_type_a(alg);
  if (!t.is_semistandard()) throw PreconditionError("tableau is not semistandard");
  std::vector<int> kinds;
  Tuple tup;
  for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it) {
    kinds.push_back(static_cast<int>(it->size()) - 1);
    tup.push_back(element_of(alg, *it));
  }
  return {kinds, tup};
}

namespace {

// Cell positions in reading order: rightmost column first, top to bottom.
std::vector<std::pair<int, int>> reading_positions(const SkewTableau& s) {
  std::vector<std::pair<int, int>> pos;
  const auto& g = s.rows();
  int width = 0;
  for (const auto& r : g) width = std::max(width, static_cast<int>(r.size()));
  for (int c = width - 1; c >= 0; --c)
    for (int r = 0; r < static_cast<int>(g.size()); ++r)
      if (c < static_cast<int>(g[r].size()) && g[r][c] != 0) pos.emplace_back(r, c);
  return pos;
}

std::optional<SkewTableau> skew_op(const Algebra& alg, const SkewTableau& s, int i, bool lower) {
  require_type_a(alg);
  auto pos = reading_positions(s);
  std::vector<CrystalPtr> factors(pos.size(), alg.fundamental(0));
  TensorProduct tp(std::move(factors), Convention::HongKang);
  Tuple word;
  for (const auto& [r, c] : pos) word.push_back(s.rows()[r][c] - 1);
  auto res = lower ? tp.f(i, word) : tp.e(i, word);
  if (!res) return std::nullopt;
  auto g = s.rows();
  for (std::size_t k = 0; k < pos.size(); ++k) g[pos[k].first][pos[k].second] = (*res)[k] + 1;
  return SkewTableau(std::move(g));
}

}  // namespace

std::vector<int> column_reading(const SkewTableau& s) {
  std::vector<int> out;
  for (const auto& [r, c] : reading_positions(s)) out.push_back(s.rows()[r][c]);
  return out;
}

std::optional<SkewTableau> skew_f(const Algebra& alg, const SkewTableau& s, int i) {
  return skew_op(alg, s, i, true);
}

std::optional<SkewTableau> skew_e(const Algebra& alg, const SkewTableau& s, int i) {
  return skew_op(alg, s, i, false);
}

}  // namespace hrg
