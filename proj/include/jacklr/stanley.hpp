// Stanley diagrams and sums, the 26-term rule for (21,21;321), K-values,
// kernel sums and the ell-basis expansion.
#pragma once

#include "jacklr/exact.hpp"
#include "jacklr/partitions.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace jacklr {

enum class HookChoice : std::uint8_t { U, L };
inline HookChoice complement(HookChoice c) { return c == HookChoice::U ? HookChoice::L : HookChoice::U; }
char choice_char(HookChoice c);

enum class Slot : std::uint8_t { Mu = 0, Nu = 1, Lam = 2 };
const char* slot_name(Slot s);

/* A hook choice for every box of a triple, row-major per slot.  `bound`
 * marks boxes printed as '?' (c1,c6 of the root triple, slaved to b3). */
struct StanleyDiagram {
  std::array<Partition, 3> shape;
  std::array<std::vector<HookChoice>, 3> choice;
  std::array<std::vector<bool>, 3> bound;

  StanleyDiagram() = default;
  // all-U diagram on the triple
  StanleyDiagram(Partition mu, Partition nu, Partition lam);

  HookChoice at(Slot s, Box b) const;
  void set(Slot s, Box b, HookChoice c);
  std::string to_string() const;  // mu:UU;nu:UL;lam:U?L...
  // every box flipped
  StanleyDiagram conjugate() const;

  auto operator<=>(const StanleyDiagram&) const = default;
};

using StanleySum = std::map<StanleyDiagram, long long>;
void add_term(StanleySum& s, const StanleyDiagram& d, long long c);

/* Per-box hook values for evaluation.  Entries are keyed by (slot, box);
 * both choices are stored. */
struct Hook {
  MultiPoly upper, lower;
  const MultiPoly& get(HookChoice c) const { return c == HookChoice::U ? upper : lower; }
};
struct HookContext {
  std::map<std::pair<Slot, Box>, Hook> hooks;
  const Hook& at(Slot s, Box b) const;
};
// actual alpha-hooks of the triple's shapes
HookContext triple_context(const Partition& mu, const Partition& nu, const Partition& lam);

// sum c_D prod_{mu,nu} h / prod_{lam} h
RatFunc evaluate(const StanleySum& s, const HookContext& ctx);
// primed form: sum c_D prod_{mu,nu} h^{D} prod_{lam} h^{bar D}
MultiPoly evaluate_poly(const StanleySum& s, const HookContext& ctx);

// ---------------------------------------------------------------------------
// The root triple (21,21;321) on ten free boxes.

namespace root {

constexpr int kBoxes = 10;
constexpr int kFull = (1 << kBoxes) - 1;
enum FreeBox { A1 = 0, A2, A3, B1, B2, B3T, C2, C3, C4, C5 };

// subsets of the ten free boxes are masks; a diagram is X flipped on a mask
using Mask = int;
using MaskSum = std::map<Mask, long long>;

const std::array<const char*, kBoxes>& box_names();  // "a1" .. "c5", b~3 is "b3t"
int box_index(const std::string& name);              // -1 if unknown
// physical position of a free box (b~3 reports b3)
std::pair<Slot, Box> position(int b);

// Kneser label {i,j} of [5] (1-based, i<j)
std::pair<int, int> petersen_label(int b);
int box_of_label(int i, int j);
bool adjacent(int a, int b);
Mask neighbors(int b);
Mask closed_neighborhood(int b);
std::vector<std::pair<int, int>> petersen_edges();  // 15, a<b

/* sign x_b of the primed reference choice: +1 where X'_b = U.  X' is X with
 * the lambda boxes complemented; x = -1 on c2,c4,c5 and prod x = -1. */
int x_sign(int b);
// hook choice of X (physical, unprimed) at a free box
HookChoice reference_choice(int b);

StanleyDiagram reference_X();
StanleyDiagram diagram(Mask flips);
// inverse of diagram(); throws if d is not a root diagram in virtual form
Mask mask_of(const StanleyDiagram& d);
StanleyDiagram flip(const StanleyDiagram& d, Mask flips);

MaskSum gstar_masks();  // 7X - 2 sum X^{b} + sum_{a~b} X^{a,b}
StanleySum build_gstar();
MaskSum to_masks(const StanleySum& s);
StanleySum from_masks(const MaskSum& s);
MaskSum conjugate(const MaskSum& s);

// K^B_I = sum of c_D over D agreeing with B on I; B given by its flip mask
std::vector<long long> k_transform(const MaskSum& s, Mask ref);
MaskSum k_inverse(const std::vector<long long>& K, Mask ref);
// K^A from K^B by the single-flip recursion formula
std::vector<long long> change_reference(const std::vector<long long>& KB, Mask refB, Mask refA);

/* Kernel sum for f = sum_{b in Y} a_b h_b^{B'_b} + d beta in the primed
 * frame.  sigma_b = -1 where B'_b = U.  Returns sum_{L subset Y} c_L B^L. */
MaskSum kernel_sum(Mask ref, Mask Y, const std::array<long long, kBoxes>& a, long long d);
// claw at b: a_b = -x_b, a_{leaf} = x_leaf, d = -1, Y = cl(b), B = X
MaskSum claw_kernel(int b);

// formal primed variable of box b under choice flipped/not: names "u_a1"...
std::string hook_var(int b);
/* Formal primed value of a diagram: prod_b h_b, h_b = u_b if the primed
 * choice is U and u_b - beta otherwise. */
MultiPoly formal_primed(const MaskSum& s);

// ell variables "l_a1" ... and G = sum_J c_J prod (l+beta)^{notin J} (l-beta)^{in J}
std::string ell_var(int b);
std::vector<std::string> ell_vars();
MultiPoly ell_expansion(const MaskSum& s, Mask ref = 0);
/* closed-form weight of beta^{|I|} l_{H\I} in G for g*: 2(2e_I-|I|+1), with
 * e_I the number of Petersen edges inside I */
long long gstar_weight(Mask I);
int edges_within(Mask I);

// S5 generators R1, R2, T, R3 as permutations of the free boxes
struct S5Generator {
  std::string name;
  std::array<int, kBoxes> perm;
};
std::vector<S5Generator> s5_generators();
Mask permute(const std::array<int, kBoxes>& perm, Mask m);
MaskSum permute(const std::array<int, kBoxes>& perm, const MaskSum& s);

}  // namespace root

}  // namespace jacklr
