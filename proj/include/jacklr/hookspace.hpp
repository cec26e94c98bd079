// Hook space of the (21,21;321) window family: hook table, claw relations,
// the five-variable quotient and the theorems checked on it.
#pragma once

#include "jacklr/exact.hpp"
#include "jacklr/report.hpp"
#include "jacklr/stanley.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace jacklr::hookspace {

using root::Mask;
using root::MaskSum;

struct WindowParams {
  int m1 = 0, m2 = 0, m3 = 0, n1 = 0, n2 = 0, n4 = 0, r1 = 0, r2 = 0;
  std::string to_string() const;
};

/* Hooks of the window triple.  `physical` covers the twelve boxes of
 * (21,21;321) (usable by evaluate()); `free` is indexed by root::FreeBox,
 * with b~3 the virtual box alpha^{-1} h_b3^U h_c1^L h_c6^U. */
struct HookTable {
  HookContext physical;
  std::array<Hook, root::kBoxes> free;
};

// throws std::invalid_argument("r2*n4 must be 0")
HookTable hook_table(const WindowParams& p);
/* Upper hook of free box b with the parameters left symbolic ("m1".."r2")
 * and alpha "a".  The table rows are affine in the parameters. */
MultiPoly symbolic_upper(int b);

// f_b = -x_b h_b^{X'_b} + sum_{a~b} x_a h_a^{X'_a} - beta, on a table
MultiPoly claw_value(const HookTable& t, int b);
// samples from {0..4}^8 with r2*n4 = 0 forced by zeroing n4 or r2 (coin)
std::vector<WindowParams> sample_params(int count, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Quotient: polynomials in the five free hooks and beta.

const std::vector<std::string>& free_vars();  // h_a1 h_a3 h_b1 h_b3t h_c3 b
// h_b^U in the free hooks, via the claw resolution formulas
MultiPoly resolved_upper(int b);
// ell_b = x_b (2 h_b^U - beta) in the free hooks
MultiPoly pulled_ell(int b);
// l_b -> pulled_ell(b); beta unchanged
MultiPoly pullback(const MultiPoly& ell_poly);
// u_b (formal primed hook variables of root::formal_primed) -> resolved_upper
MultiPoly pullback_hooks(const MultiPoly& u_poly);
// value of a quotient polynomial on a table (beta = alpha - 1)
MultiPoly evaluate_on(const MultiPoly& q, const HookTable& t);

// cl_b = sum_{a~b} l_a - l_b  (twice the claw f_b)
MultiPoly claw_ell(int b);

// G = ell_expansion(g*); primed g*' = -2^{-10} G
const MultiPoly& gstar_ell();
/* T_k = sum_{|S|=k} w(H\S) l_S, w(I) = 2e_I - |I| + 1, so that
 * G = 2 sum_k beta^{10-k} T_k. */
MultiPoly orbit_sum(int k);

// ---------------------------------------------------------------------------
/* Boundary data.  The choice c is labelled as in X (unprimed): c = X_b is
 * the hyperplane l_b = -beta with datum X^{cl(b)}, the other choice is
 * l_b = +beta with the conjugate datum. */

Mask boundary_mask(int b, HookChoice c);
StanleyDiagram boundary_datum(int b, HookChoice c);

/* Restriction of a quotient polynomial to the hyperplane h_b^c = 0: the
 * lexicographically last free hook in the linear condition is eliminated.
 * `pivot` receives the eliminated variable. */
MultiPoly restrict_to_hyperplane(const MultiPoly& q, int b, HookChoice c, std::string* pivot = nullptr);

// ---------------------------------------------------------------------------
// Untwisting to x_1..x_6 with sum x = 0.

const std::vector<std::string>& x_vars();  // x1..x6
// l_b -> sign * (x_i+x_j+x_k) from the signed triple table
MultiPoly untwist_to_x(const MultiPoly& ell_poly);
// same map with the {0..5} box labels over x0..x5 (unsigned)
MultiPoly untwist_appendix(const MultiPoly& ell_poly);
// G untwisted and written in e2..e6 and beta
MultiPoly e_expansion();
MultiPoly expected_e_expansion();
// a_lambda (polynomial in beta) of G = sum a_lambda m_lambda beta^{10-|lambda|}
std::map<Partition, MultiPoly> monomial_coefficients(const MultiPoly& e_poly);

// l at the five red vertices = 2(1+x_i)+beta, the rest by the claw formulas
std::array<MultiPoly, root::kBoxes> phi_ell();
// same with y_i + beta
std::array<MultiPoly, root::kBoxes> y_ell();
// -G under phi with beta -> alpha-1 (variables x1..x5, a)
MultiPoly phi_polynomial();
// -G under the y map (variables y1..y5, b)
MultiPoly y_polynomial();

// ---------------------------------------------------------------------------
// Checks.

Check verify_claws(const std::vector<WindowParams>& samples);
Check verify_rank();
Check verify_k_values();
Check verify_root_evaluation();
Check verify_orbit_sums();
Check verify_odd_vanishing();
Check verify_z2_invariance();
Check verify_sigma56_invariance();
Check verify_hyperplane(int b, HookChoice c);
std::vector<Check> verify_hyperplanes();
Check verify_boundary_equivariance();
Check verify_e_expansion();
Check verify_nonnegativity();

}  // namespace jacklr::hookspace
