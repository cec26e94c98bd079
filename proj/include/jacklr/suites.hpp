// Verification suites: graph-layer and property checks, and the orchestrator
// behind `jacklr verify`.
#pragma once

#include "jacklr/report.hpp"
#include "jacklr/symfunc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace jacklr::suites {

struct Options {
  int degree_cap = 12;
  int max_weight = 7;
  int samples = 200;
  std::uint64_t seed = 42;
  int jobs = 1;
};

// ---------------------------------------------------------------------------
// Graph layer.

Check verify_graph_counts();    // sizes, regularity, girth
Check verify_spectra();         // exact eigenspace dimensions
Check verify_pentads();
Check verify_rho_cycles();      // the five 4-cycles, rho^2 = complement, order 4
Check verify_rho_distances();   // d(T,U)=2 <=> d(rho T, rho U)=1
Check verify_embeddings();      // 12 distinct, adjacency preserving, gamma and gamma^c partition
Check verify_intertwiners();    // s_ij gamma = gamma sigma_ij
Check verify_sigma56_action();  // signed map, involution, claw span
Check verify_appendix_labels();

// ---------------------------------------------------------------------------
// Jack and Stanley-sum properties.

Check verify_lr_fixtures(JackTable& table = default_jack_table());
Check verify_jack_orthogonality(int max_degree, JackTable& table = default_jack_table());
Check verify_unit_coefficient(int max_degree, JackTable& table = default_jack_table());
// alpha = 1 against Kostka numbers (semistandard tableau counts)
Check verify_schur_oracle(int max_degree, JackTable& table = default_jack_table());
Check verify_gstar_terms();
Check verify_moebius(int count, std::uint64_t seed);
Check verify_kernel_identity(int count, std::uint64_t seed);

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names();  // pivots stanley hookspace symmetry graphs fixtures all
using Task = std::function<Check()>;
// throws std::invalid_argument for an unknown suite
std::vector<Task> suite_tasks(const std::string& suite, const Options& opt, JackTable& table);
// runs tasks on opt.jobs workers; checks come back in task order
std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs);
Report run_suite(const std::string& suite, const Options& opt, JackTable& table);

}  // namespace jacklr::suites
