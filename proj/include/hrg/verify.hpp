#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrg/embeddings.hpp"

namespace hrg::verify {

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Fixture directory: $HRGRAPH_FIXTURES if set, else the directory baked in
/// at build time.
std::string fixture_dir();
nlohmann::json load_fixture(const std::string& relative);

struct Options {
  /// Algebras to sweep; empty means the suite's default list.
  std::vector<std::string> algebras;
  std::optional<Convention> convention;
  /// "1,1"-style bound; empty means the suite's default.
  std::string degree_bound;
};

/// Throws PreconditionError for an unknown suite name.
std::vector<Report> run_suite(const std::string& name, const Options& opt = {});
nlohmann::json suite_json(const std::string& name, const std::vector<Report>& reports);

// Individual checks, shared by the suites and the acceptance binary.

Report a2_vertices(const KGraph& kg);
Report a2_skeleton(const KGraph& kg);
Report a2_braiding(const Algebra& alg);
Report a2_jdt_braiding(const Algebra& alg);
Report a2_right_ends(const Algebra& alg);
Report a2_red_edges(const KGraph& kg);
Report a2_weyl_graphs(const Algebra& alg);

Report c2_crystal_graph(const Algebra& alg);
Report c2_braiding(const Algebra& alg);
Report c2_right_ends(const KGraph& kg);

Report factorization(const KGraph& kg, const Weight& bound);
Report associativity(const KGraph& kg, const Weight& bound);
Report order_compatibility(const KGraph& kg, const Weight& bound);
Report representative_independence(const KGraph& kg, const Weight& bound);
Report source_identity(const KGraph& kg);
Report paths_bruhat(const KGraph& kg);

Report right_weak(const KGraph& kg);
Report left_weak(const KGraph& kg);
Report bruhat_embeddings(const KGraph& kg, const Weight& bound);
Report skeleton_vs_extremal(const KGraph& kg);

Report keys_example();
Report key_idempotence(const Algebra& alg);
Report keys_ends(const KGraph& kg);
Report frankness(const Algebra& alg);
Report slide_order(const Algebra& alg);
Report coplactic(const Algebra& alg);
Report braiding_via_slides(const Algebra& alg);

Report lemma_epsilon_w(const Algebra& alg);
Report lemma_action_f(const Algebra& alg);
Report cartan_bruhat(const Algebra& alg);
Report source_end(const Algebra& alg);
Report source_edge(const KGraph& kg);
Report braid_equation(const Algebra& alg);
Report extremal_flip(const Algebra& alg);

}  // namespace hrg::verify
