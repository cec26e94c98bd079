// Petersen graph K(5,2), Johnson graph J(6,3), mystic pentagons and the
// order-4 map rho used to embed one in the other.
#pragma once

#include "jacklr/exact.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace jacklr::petjohn {

/* Ground set of J(6,3) is {0..5}.  Labels written 1..6 (pentagon and
 * reference notation) map to element k-1; box-table labels 0..5 are taken as
 * elements directly. */
using Subset = unsigned;  // bitmask over {0..5}
constexpr Subset kAll6 = 0x3f;
inline Subset complement(Subset t) { return ~t & kAll6; }
inline int label_element(int k) { return k - 1; }
// "126" in 1..6 notation -> mask; throws on bad text
Subset from_digits(const std::string& digits);
std::string to_digits(Subset t);  // increasing digits, 1..6
Subset from_appendix(const std::string& digits);
std::string to_appendix(Subset t);

struct Graph {
  std::vector<std::string> names;
  std::vector<std::vector<int>> adj;  // 0/1 matrix

  int size() const { return static_cast<int>(names.size()); }
  int edge_count() const;
  bool regular(int k) const;
};

// vertices in root free-box order, adjacency = disjoint Kneser labels
Graph petersen();
int girth(const Graph& g);
// vertices: the 20 3-subsets in increasing mask order
Graph johnson();
std::vector<Subset> triples();

// multiplicity of eigenvalue k: n - rank(A - k I), exact over Q
int eigen_multiplicity(const Graph& g, long long k);

/* Mystic pentagon: 2-colouring of K5 on [6]\{q}; the white edges form a
 * 5-cycle.  Stored by its white edges. */
struct Pentagon {
  int q = 5;
  std::array<std::pair<int, int>, 5> white;
};
// white 5-cycle given as a vertex cyclic order, 1..6 labels
Pentagon pentagon_from_cycle(const std::array<int, 5>& cycle, int q_label = 6);
bool is_white(const Pentagon& p, int i, int j);
// all 12 coloured pentagons for the given q: each Hamiltonian cycle of K5
// taken as the white edges (its colour swap is the complementary cycle)
std::vector<Pentagon> all_pentagons(int q = 5);
std::string pentagon_text(const Pentagon& p);  // white edges, 1..6 labels

// syntheme: three disjoint duads covering [6]
using Duad = std::pair<int, int>;
using Syntheme = std::array<Duad, 3>;
// {A/B/{e,q}} for each white edge A; throws if p is not a valid pentagon
std::vector<Syntheme> pentad_from_pentagon(const Pentagon& p);

// rho_P as a permutation of the 20 triples
Subset rho(const Pentagon& p, Subset t);
// gamma(b) = rho(ij q) for the Kneser label ij of free box b
std::array<Subset, 10> gamma_embedding(const Pentagon& p);
// pentagon whose rho has the five reference 4-cycles
Pentagon figure_pentagon();

/* Signed permutation of [6]: perm (0-based) and a global sign; negative
 * sign composes with complementation on triples. */
struct SignedPerm {
  std::string name;
  std::array<int, 6> perm;
  int sign;
  Subset apply(Subset t) const;
};
// s12, s23, s34, s45, s56 for the reference pentagon
std::vector<SignedPerm> intertwiner_generators();

// sigma56 on ell: image box and sign for each free box
std::array<std::pair<int, int>, 10> sigma56_on_ell();

// the {0..5} box-label table (representatives T of {T, T^c})
std::array<Subset, 10> appendix_labels();

// signed ell -> x table: ell_b maps to sign * x_T
struct SignedTriple {
  int sign;
  Subset t;
};
std::array<SignedTriple, 10> psi_table();

}  // namespace jacklr::petjohn
