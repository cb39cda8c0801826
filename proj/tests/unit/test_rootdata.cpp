#include <doctest.h>

#include "hrg/rootdata.hpp"
#include "hrg/weyl.hpp"
#include "oracles.hpp"

using namespace hrg;

namespace {

RootVector rv(std::vector<int> c) { return RootVector(std::move(c)); }
Weight wt(std::vector<int> c) { return Weight(std::move(c)); }

}  // namespace

TEST_CASE("pairings in A2") {
  const auto d = RootDatum::type_a(2);
  CHECK(d.pairing(d.fundamental(0), 0) == 1);
  CHECK(d.pairing(d.fundamental(0), 1) == 0);
  CHECK(d.pairing(rv({1, 0}), 1) == -1);
  CHECK(d.to_weight(rv({1, 0})) == wt({2, -1}));
}

TEST_CASE("simple reflections") {
  const auto d = RootDatum::type_a(2);
  CHECK(d.reflect(0, d.fundamental(1)) == d.fundamental(1));
  CHECK(d.reflect(0, d.fundamental(0)) == wt({-1, 1}));
  for (int i = 0; i < 2; ++i)
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const Weight l = wt({a, b});
        CHECK(d.reflect(i, d.reflect(i, l)) == l);
        if (d.pairing(l, i) == 0) CHECK(d.reflect(i, l) == l);
      }
}

TEST_CASE("reflection in a non-simple root") {
  const auto d = RootDatum::type_a(2);
  const RootVector g = rv({1, 1});
  CHECK(d.reflect_by_root(g, d.fundamental(0)) == wt({0, -1}));
  // t_{a1+a2} = s1 s2 s1
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      const Weight l = wt({a, b});
      CHECK(d.reflect_by_root(g, l) == d.reflect(0, d.reflect(1, d.reflect(0, l))));
    }
  CHECK(d.reflect_by_root(g, wt({1, -1})) == wt({1, -1}));
}

TEST_CASE("supports and dominance") {
  const auto d = RootDatum::type_a(2);
  CHECK(supp_root(rv({1, 1})) == IndexSet{0, 1});
  CHECK(supp_weight(d.fundamental(1)) == IndexSet{1});
  CHECK(supp_weight(d.zero()).empty());
  CHECK(d.dominant_diff(d.rho(), d.fundamental(0)));
  CHECK_FALSE(d.dominant_diff(d.fundamental(0), d.fundamental(1)));
}

TEST_CASE("positive root counts") {
  CHECK(RootDatum::type_a(1).positive_roots() == std::vector<RootVector>{rv({1})});
  CHECK(RootDatum::type_a(2).positive_roots().size() == 3);
  CHECK(RootDatum::type_c2().positive_roots().size() == 4);
  for (int n = 1; n <= 5; ++n)
    CHECK(RootDatum::type_a(n).positive_roots().size() == static_cast<std::size_t>(n * (n + 1) / 2));
  const auto c2 = RootDatum::type_c2();
  for (const auto& g : c2.positive_roots()) {
    CHECK(g.is_positive());
    CHECK(c2.is_root(-g));
    // the witness really conjugates a simple root onto g
    const auto& wit = c2.witness(g);
    RootVector v = RootVector::simple(2, wit.simple);
    for (auto it = wit.word.rbegin(); it != wit.word.rend(); ++it) v = c2.reflect(*it, v);
    CHECK(v == g);
  }
}

TEST_CASE("malformed Cartan data is rejected") {
  CHECK_THROWS_AS(RootDatum("bad", {{2, -1}, {0, 2}}, {1, 1}), Error);
  CHECK_THROWS_AS(RootDatum("affine", {{2, -2}, {-2, 2}}, {1, 1}), Error);
  CHECK_THROWS_AS(RootDatum::builtin("G7"), Error);
  const auto j = nlohmann::json::parse(R"({"rank":2,"cartan":[[2,-2],[-1,2]],"symmetrizer":["1/2",1]})");
  CHECK(RootDatum::from_json(j).positive_roots().size() == 4);
}

TEST_CASE("Weyl group sizes and longest elements") {
  auto a1 = std::make_shared<RootDatum>(RootDatum::type_a(1));
  auto a2 = std::make_shared<RootDatum>(RootDatum::type_a(2));
  auto c2 = std::make_shared<RootDatum>(RootDatum::type_c2());
  CHECK(WeylGroup(a1).size() == 2);
  const WeylGroup W2(a2);
  CHECK(W2.size() == 6);
  CHECK(W2.length(W2.longest()) == 3);
  const WeylGroup WC(c2);
  CHECK(WC.size() == 8);
  CHECK(WC.length(WC.longest()) == 4);
  CHECK(WC.longest() == WC.parse("s1s2s1s2"));
  CHECK(WC.parse("s1s2s1s2") == WC.parse("s2s1s2s1"));
  CHECK(W2.parse("s1s2s1") == W2.parse("s2s1s2"));
  CHECK(W2.name(W2.identity()) == "1");
}

TEST_CASE("Weyl group against permutations") {
  for (int n = 1; n <= 3; ++n) {
    auto d = std::make_shared<RootDatum>(RootDatum::type_a(n));
    const WeylGroup W(d);
    const auto els = W.elements();
    long long fact = 1;
    for (int k = 2; k <= n + 1; ++k) fact *= k;
    REQUIRE(W.size() == fact);
    std::vector<oracle::Perm> perm;
    for (const auto& w : els) perm.push_back(oracle::perm_of_word(n + 1, W.word(w)));
    for (std::size_t a = 0; a < els.size(); ++a) {
      CHECK(W.length(els[a]) == oracle::inversions(perm[a]));
      CHECK(W.multiply(els[a], W.inverse(els[a])) == W.identity());
      for (std::size_t b = 0; b < els.size(); ++b) {
        const auto m = W.multiply(els[a], els[b]);
        CHECK(perm[m.index] == oracle::compose(perm[a], perm[b]));
        CHECK(W.bruhat_leq(els[a], els[b]) == oracle::bruhat_leq(perm[a], perm[b]));
      }
    }
    // strong Bruhat edges: u -> ut, t a transposition, length up
    std::set<std::pair<int, int>> expect;
    for (std::size_t a = 0; a < els.size(); ++a)
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          oracle::Perm t = oracle::identity_perm(n + 1);
          std::swap(t[i], t[j]);
          const auto ut = oracle::compose(perm[a], t);
          if (oracle::inversions(ut) <= oracle::inversions(perm[a])) continue;
          const auto it = std::find(perm.begin(), perm.end(), ut);
          expect.insert({static_cast<int>(a), static_cast<int>(it - perm.begin())});
        }
    std::set<std::pair<int, int>> got;
    const auto g = W.bruhat_graph();
    for (const auto& e : g.edges()) got.insert({e.src, e.dst});
    CHECK(got == expect);
    CHECK(g.edges().size() == expect.size());
    const auto gl = W.bruhat_graph_left();
    std::set<std::pair<int, int>> got_left;
    for (const auto& e : gl.edges()) got_left.insert({e.src, e.dst});
    CHECK(got_left == expect);
    CHECK(W.reflections().size() == d->positive_roots().size());
  }
}

TEST_CASE("Bruhat and weak graphs of S3") {
  auto d = std::make_shared<RootDatum>(RootDatum::type_a(2));
  const WeylGroup W(d);
  auto has = [&](const ColoredDigraph& g, const char* u, const char* w, const char* color) {
    for (const auto& e : g.edges())
      if (e.src == W.parse(u).index && e.dst == W.parse(w).index &&
          (!color || g.color_labels()[e.color] == color))
        return true;
    return false;
  };
  const auto b = W.bruhat_graph();
  CHECK(b.edges().size() == 9);
  CHECK(has(b, "1", "s1s2s1", nullptr));
  CHECK_FALSE(has(b, "s1", "s1s2s1", nullptr));
  CHECK(has(W.right_weak_graph(), "s2", "s2s1", "1"));
  CHECK(has(W.left_weak_graph(), "s1s2", "s2s1s2", "2"));
  CHECK(W.right_weak_graph().edges().size() == 6);
  CHECK(W.left_weak_graph().edges().size() == 6);
}

TEST_CASE("removal sequences") {
  auto d = std::make_shared<RootDatum>(RootDatum::type_a(2));
  const WeylGroup W(d);
  const auto w0 = W.parse("s1s2s1");
  CHECK(W.removal_sequence(w0, w0).empty());
  CHECK(W.removal_sequence(w0, W.parse("s1s2")) == std::vector<int>{3});
  const auto seq = W.removal_sequence(w0, W.identity());
  REQUIRE(seq.size() == 3);
  CHECK(std::is_sorted(seq.rbegin(), seq.rend()));
  CHECK_THROWS_AS(W.removal_sequence(W.parse("s1"), W.parse("s2")), PreconditionError);

  // every deletion sequence ends at the requested element
  auto c2 = std::make_shared<RootDatum>(RootDatum::type_c2());
  const WeylGroup WC(c2);
  for (const auto& w : WC.elements())
    for (const auto& v : WC.elements()) {
      if (!WC.bruhat_leq(v, w)) continue;
      auto word = WC.word(w);
      for (int pos : WC.removal_sequence(w, v)) {
        word.erase(word.begin() + (pos - 1));
        CHECK(WC.length(WC.from_word(word)) == static_cast<int>(word.size()));
      }
      CHECK(WC.from_word(word) == v);
    }
}
