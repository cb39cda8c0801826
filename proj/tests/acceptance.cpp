// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hrg/verify.hpp"

using namespace hrg;
namespace v = hrg::verify;

namespace {

// Runtime ceiling for the A3 scaling check, in seconds.
constexpr double kA3Seconds = 60.0;
// Degree bounds.
const Weight kAxiomBound({1, 1});
const Weight kOrderBound({2, 2});
const Weight kColorBound({1, 1});

struct Outcome {
  bool ok = true;
  long long instances = 0;
  std::string detail;

  void take(const Report& r) {
    instances += r.instances_checked;
    if (!r.ok()) {
      ok = false;
      detail += " [" + r.theorem + ": " + r.failures.front() + "]";
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += " [" + what + "]";
    }
  }
};

std::shared_ptr<KGraph> graph(const char* name, Convention c = Convention::HongKang) {
  return std::make_shared<KGraph>(Algebra::builtin(name, c));
}

}  // namespace

int main() {
  const auto a2 = graph("A2");
  const auto c2 = graph("C2");
  const auto c2op = graph("C2", Convention::Opposite);
  const auto& A2 = a2->algebra();
  const auto& C2 = c2->algebra();

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A2 vertex count",
       [&] {
         Outcome o;
         o.take(v::a2_vertices(*a2));
         o.require(a2->vertices().size() == 6, "6 vertices");
         return o;
       }},
      {"A2 skeleton",
       [&] {
         Outcome o;
         o.take(v::a2_skeleton(*a2));
         return o;
       }},
      {"A2 Cartan braiding",
       [&] {
         Outcome o;
         o.take(v::a2_braiding(A2));
         o.take(v::a2_jdt_braiding(A2));
         return o;
       }},
      {"A2 right ends",
       [&] {
         Outcome o;
         o.take(v::a2_right_ends(A2));
         o.take(v::keys_ends(*a2));
         return o;
       }},
      {"A2 red edges",
       [&] {
         Outcome o;
         o.take(v::a2_red_edges(*a2));
         return o;
       }},
      {"weak Bruhat embeddings",
       [&] {
         Outcome o;
         o.take(v::right_weak(*a2));
         o.take(v::right_weak(*c2));
         o.take(v::left_weak(*a2));
         o.require(uniqueness_search_right_weak(*a2) == 1, "A2 right weak count 1");
         o.require(uniqueness_search_right_weak(*c2) == 1, "C2 right weak count 1");
         o.require(left_weak_embedding_search(*a2) == 0, "A2 left weak count 0");
         return o;
       }},
      {"Bruhat embeddings",
       [&] {
         Outcome o;
         o.take(v::bruhat_embeddings(*a2, kColorBound));
         o.take(v::bruhat_embeddings(*c2, kColorBound));
         return o;
       }},
      {"k-graph axioms",
       [&] {
         Outcome o;
         for (const auto& g : {a2, c2}) {
           o.take(v::factorization(*g, kAxiomBound));
           o.take(v::associativity(*g, kAxiomBound));
         }
         return o;
       }},
      {"order compatibility",
       [&] {
         Outcome o;
         o.take(v::order_compatibility(*a2, kOrderBound));
         o.take(v::order_compatibility(*c2, kOrderBound));
         return o;
       }},
      {"C2 fixtures",
       [&] {
         Outcome o;
         const auto& alg = c2op->algebra();
         o.take(v::c2_crystal_graph(alg));
         o.take(v::c2_braiding(alg));
         o.take(v::c2_right_ends(*c2op));
         return o;
       }},
      {"keys example",
       [&] {
         Outcome o;
         o.take(v::keys_example());
         o.take(v::key_idempotence(*Algebra::builtin("A3")));
         return o;
       }},
      {"lemma suite",
       [&] {
         Outcome o;
         for (const Algebra* alg : {&A2, &C2}) {
           o.take(v::lemma_epsilon_w(*alg));
           o.take(v::lemma_action_f(*alg));
           o.take(v::cartan_bruhat(*alg));
           o.take(v::source_end(*alg));
           o.take(v::braid_equation(*alg));
           o.take(v::extremal_flip(*alg));
         }
         o.take(v::source_edge(*a2));
         o.take(v::source_edge(*c2));
         return o;
       }},
      {"A3 scaling",
       [&] {
         Outcome o;
         const auto start = std::chrono::steady_clock::now();
         const auto a3 = graph("A3");
         o.take(v::keys_ends(*a3));
         o.require(a3->vertices().size() == 24, "24 vertices");
         o.require(static_cast<int>(a3->vertices().size()) == a3->algebra().weyl().size(),
                   "vertices = |W|");
         const double secs =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         o.require(secs < kA3Seconds, "runtime " + std::to_string(secs) + " s");
         return o;
       }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string(" [exception: ") + e.what() + "]";
    }
    failed += !o.ok;
    std::printf("%s %2zu %s (%lld instances)%s\n", o.ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.instances, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
