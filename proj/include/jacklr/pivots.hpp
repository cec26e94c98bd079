// Pivot congruences between adjacent triples, the box correspondences psi_d,
// and the fixed shifted-Jack and Macdonald examples.
#pragma once

#include "jacklr/exact.hpp"
#include "jacklr/partitions.hpp"
#include "jacklr/report.hpp"
#include "jacklr/stanley.hpp"
#include "jacklr/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace jacklr::pivots {

struct Triple {
  Partition mu, nu, lam;
  std::string to_string() const;  // "2,1|2,1|3,2,1"
  auto operator<=>(const Triple&) const = default;
};

/* Two triples differing by one box move in `slot`.  `first` carries the
 * lower-left corner a (pivot.lambda1), `second` the corner b. */
struct AdjacentTriplePair {
  Triple first, second;
  PivotPair pivot;
  Slot slot = Slot::Lam;
  std::string key() const;
};

/* Every pair with |mu|+|nu| <= max_weight, mu and nu nonempty: lambda-slot
 * pairs from bases of weight |mu|+|nu|-1, and mu-slot pairs from bases of
 * weight |mu|-1 with nu, lambda fixed.  The nu-slot pairs coincide with
 * mu-slot pairs under (mu,nu) <-> (nu,mu) and are not listed; lambda-slot
 * pairs are listed once per unordered {mu,nu}.  Sorted by key. */
std::vector<AdjacentTriplePair> enumerate_adjacent(int max_weight);

struct CongruenceResult {
  AlphaPoly difference;  // g(second) - g(first)
  AlphaPoly shared_hook;
  AlphaPoly quotient;    // valid when divisible
  bool divisible = false;
  bool root_vanishes = false;  // difference at the root of the shared hook
  Rational root;
  bool skipped = false;
  std::string reason;
};

CongruenceResult check_congruence(const AdjacentTriplePair& p, JackTable& table = default_jack_table());

// corpus run; jobs <= 1 is sequential
Check verify_corpus(int max_weight, int jobs, JackTable& table = default_jack_table());
// the (21,21;321)/(21,21;2211) pair: quotient and common value at -3/2
Check verify_root_pair(JackTable& table = default_jack_table());
// pairs moving a box of lambda over base kappa, resp. of mu over base kappa
std::vector<AdjacentTriplePair> lambda_pairs(const Partition& mu, const Partition& nu, const Partition& kappa);
std::vector<AdjacentTriplePair> mu_pairs(const Partition& kappa, const Partition& nu, const Partition& lam);

// ---------------------------------------------------------------------------
// psi_d

struct BoxImage {
  Box target;
  bool flipped = false;
  int sign = 1;
};

/* Box map from kappa+from to kappa+to.  h^A_{from}(p) = sign h^{B}_{to}(q)
 * modulo x = h^U_{kappa+a}(d), B = A or its flip, d = (row b, col a) with
 * a the lower-left corner.  Throws std::invalid_argument if the corners are
 * not distinct addable corners of kappa. */
struct Correspondence {
  Partition kappa, from, to;
  Box d;
  AlphaPoly x;
  std::map<Box, BoxImage> map;
};
Correspondence hook_correspondence(const Partition& kappa, Box from_corner, Box to_corner);
// bijection, d -> d flipped with x = h^L_{to}(d), and every image agrees modulo x
Check verify_correspondence(const Correspondence& c);
// diagram on `from` in slot s mapped box by box
StanleyDiagram apply_correspondence(const Correspondence& c, const StanleyDiagram& d, Slot s);

// value of h^c_shape(p) with alpha at the root of x
Rational hook_at(const Partition& shape, Box p, HookChoice c, const Rational& alpha0);

/* The six identities for a<b in O(kappa) (content order), x = h^U_{kappa+a}(a v b):
 * third corner c in O(kappa) or I(kappa), c<a, a<c<b, b<c.  Returns the
 * number of instances checked; failures are appended. */
int check_lemma_identities(const Partition& kappa, std::vector<std::string>& failures);
Check verify_lemma_identities(int max_size);
// every kappa with |kappa| <= max_size, every corner pair, both directions
Check verify_all_correspondences(int max_size);
// the four reference correspondences for (21,21;321)
Check verify_displayed_correspondences();

// ---------------------------------------------------------------------------
// Fixtures.

struct Fixture {
  std::string name;
  std::string text;           // literal text, negative powers split off
  int shift = 0;              // stated value = shift_var^shift * value()
  std::string shift_var = "a";
  MultiPoly value() const;    // parse(text)
  std::uint32_t checksum() const;  // CRC-32 of text
};
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

Check verify_shifted_fixtures();
Check verify_macdonald_fixture();
// the c=3 pivot example (degree 11) as polynomial identities
Check verify_pivot_example_fixture();
// the same three coefficients computed from Jack polynomials (needs degree 11)
Check verify_pivot_example_computed(JackTable& table = default_jack_table());
std::vector<Check> verify_fixture_congruences();

}  // namespace jacklr::pivots
