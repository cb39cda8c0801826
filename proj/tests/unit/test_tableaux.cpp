#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "hrg/tableaux.hpp"

using namespace hrg;

namespace {

/// Row insertion of the reading word (rows bottom to top, left to right).
std::vector<std::vector<int>> rsk_rectify(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> p;
  for (auto r = rows.rbegin(); r != rows.rend(); ++r)
    for (int x : *r) {
      if (x == 0) continue;
      int cur = x;
      for (std::size_t k = 0;; ++k) {
        if (k == p.size()) {
          p.push_back({cur});
          break;
        }
        auto it = std::upper_bound(p[k].begin(), p[k].end(), cur);
        if (it == p[k].end()) {
          p[k].push_back(cur);
          break;
        }
        std::swap(cur, *it);
      }
    }
  return p;
}

std::map<int, int> content(const std::vector<std::vector<int>>& rows) {
  std::map<int, int> c;
  for (const auto& r : rows)
    for (int x : r)
      if (x) ++c[x];
  return c;
}

/// Random semistandard skew tableau: inner shape (inner), outer shape (outer).
std::vector<std::vector<int>> random_skew(std::mt19937& rng, const std::vector<int>& outer,
                                          const std::vector<int>& inner, int max_letter) {
  for (;;) {
    std::vector<std::vector<int>> rows;
    bool ok = true;
    for (std::size_t r = 0; r < outer.size() && ok; ++r) {
      std::vector<int> row(outer[r], 0);
      const int in = r < inner.size() ? inner[r] : 0;
      for (int c = in; c < outer[r]; ++c) {
        int lo = 1;
        if (c > in) lo = std::max(lo, row[c - 1]);
        if (r > 0 && c < static_cast<int>(rows[r - 1].size()) && rows[r - 1][c])
          lo = std::max(lo, rows[r - 1][c] + 1);
        if (lo > max_letter) {
          ok = false;
          break;
        }
        row[c] = std::uniform_int_distribution<int>(lo, std::min(max_letter, lo + 1))(rng);
      }
      rows.push_back(row);
    }
    if (ok) return rows;
  }
}

}  // namespace

TEST_CASE("tableau round trips") {
  const auto t = Tableau::from_rows({{1, 2, 3}, {2, 5}, {4}});
  CHECK(t.columns == std::vector<Column>{{1, 2, 4}, {2, 5}, {3}});
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 3}, {2, 5}, {4}});
  CHECK(t.shape() == std::vector<int>{3, 2, 1});
  CHECK(t.is_semistandard());
  CHECK_FALSE(Tableau::from_rows({{2, 1}}).is_semistandard());
  CHECK(Tableau::from_json(t.to_json()) == t);
  CHECK(rectify(SkewTableau::straight(t)) == t);
}

TEST_CASE("rectification matches row insertion") {
  std::mt19937 rng(7);
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes{
      {{3, 2, 1}, {1}}, {{3, 3, 1}, {2, 1}}, {{4, 2, 2}, {2, 1}}, {{2, 2, 2}, {1, 1}},
      {{4, 3, 1}, {3}}, {{3, 2}, {1, 1}}};
  for (const auto& [outer, inner] : shapes)
    for (int trial = 0; trial < 40; ++trial) {
      const auto rows = random_skew(rng, outer, inner, 5);
      const SkewTableau s(rows);
      REQUIRE(s.is_semistandard());
      const Tableau r = rectify(s);
      CHECK(r.is_semistandard());
      CHECK(r.rows() == rsk_rectify(rows));
      // any single slide keeps content and semistandardness
      for (const auto& [row, col] : s.inner_corners()) {
        const auto t = jdt_slide(s, row, col);
        CHECK(t.is_semistandard());
        CHECK(content(t.rows()) == content(rows));
        CHECK(rectify(t) == r);
      }
      for (const auto& [row, col] : s.outer_addable()) {
        const auto t = reverse_slide(s, row, col);
        CHECK(t.is_semistandard());
        CHECK(rectify(t) == r);
      }
    }
}

TEST_CASE("keys of the example tableau") {
  const auto t = Tableau::from_rows({{1, 2, 3}, {2, 5}, {4}});
  CHECK(left_key(t).rows() == std::vector<std::vector<int>>{{1, 2, 2}, {2, 4}, {4}});
  CHECK(right_key(t).rows() == std::vector<std::vector<int>>{{1, 3, 3}, {3, 5}, {5}});
}

TEST_CASE("key properties over all shape (2,1) tableaux in four letters") {
  std::vector<Tableau> all;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = a + 1; c <= 4; ++c) all.push_back(Tableau::from_rows({{a, b}, {c}}));
  CHECK(all.size() == 20);
  for (const auto& t : all) {
    const auto lk = left_key(t), rk = right_key(t);
    CHECK(is_key(lk));
    CHECK(is_key(rk));
    CHECK(lk.shape() == t.shape());
    CHECK(left_key(lk) == lk);
    CHECK(right_key(rk) == rk);
    for (std::size_t j = 0; j < t.columns.size(); ++j)
      for (std::size_t i = 0; i < t.columns[j].size(); ++i) {
        CHECK(lk.columns[j][i] <= t.columns[j][i]);
        CHECK(t.columns[j][i] <= rk.columns[j][i]);
      }
  }
  // a key is its own left and right key
  const auto k = Tableau::from_rows({{1, 1, 3}, {3, 3}, {4}});
  REQUIRE(is_key(k));
  CHECK(left_key(k) == k);
  CHECK(right_key(k) == k);
  CHECK_FALSE(is_key(Tableau::from_rows({{1, 2}, {3}})));
}

TEST_CASE("two-column braiding") {
  const std::vector<Column> ones{{1}, {2}, {3}}, twos{{1, 2}, {1, 3}, {2, 3}};
  for (const auto& [ls, rs] : {std::make_pair(ones, twos), std::make_pair(twos, ones)}) {
    int nonzero = 0;
    for (const auto& l : ls)
      for (const auto& r : rs) {
        const auto out = two_column_braiding(l, r);
        if (!out) continue;
        ++nonzero;
        CHECK(out->first.size() == r.size());
        CHECK(out->second.size() == l.size());
        CHECK(two_column_braiding(out->first, out->second) == std::make_pair(l, r));
      }
    CHECK(nonzero == 8);
  }
}

TEST_CASE("crystal identification in A3") {
  auto alg = Algebra::builtin("A3");
  const std::vector<int> kinds{0, 1, 2};
  auto c = alg->cartan(kinds);
  for (int b = 0; b < c->size(); ++b) {
    const Tableau t = from_crystal(*alg, kinds, c->tuple(b));
    CHECK(t.is_semistandard());
    CHECK(t.shape() == std::vector<int>{3, 2, 1});
    const auto [k2, back] = to_crystal(*alg, t);
    CHECK(k2 == kinds);
    CHECK(back == c->tuple(b));
    for (int i = 0; i < 3; ++i) {
      auto f = c->f(i, b);
      auto g = skew_f(*alg, SkewTableau::straight(t), i);
      REQUIRE(f.has_value() == g.has_value());
      if (f) CHECK(g->to_tableau() == from_crystal(*alg, kinds, c->tuple(*f)));
    }
  }
  CHECK(c->size() == 64);
  CHECK_THROWS_AS(from_crystal(*Algebra::builtin("A2", Convention::Opposite), {0, 1}, {0, 0}),
                  PreconditionError);
  CHECK_THROWS_AS(from_crystal(*Algebra::builtin("C2"), {0, 1}, {0, 0}), PreconditionError);
}

TEST_CASE("highest weight tableau is its own key") {
  const auto t = Tableau::from_rows({{1, 1, 1}, {2, 2}, {3}});
  CHECK(left_key(t) == t);
  CHECK(right_key(t) == t);
}

TEST_CASE("skew tableau parsing") {
  const auto j = nlohmann::json::parse("[[null, 2], [1, 3]]");
  const auto s = SkewTableau::from_json(j);
  CHECK(s.inner() == std::vector<int>{1});
  CHECK(s.outer() == std::vector<int>{2, 2});
  CHECK(rectify(s).rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK_THROWS(SkewTableau::from_json(nlohmann::json::parse("[[1, null]]")));
}
