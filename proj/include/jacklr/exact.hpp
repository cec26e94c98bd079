// Exact rationals and sparse multivariate polynomials over Q.
#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jacklr {

using Integer = mpz_class;
using Rational = mpq_class;

// reduced, den > 0; throws on den == 0
Rational make_rational(const Integer& num, const Integer& den);
std::string rational_text(const Rational& q);

using Exponent = boost::container::small_vector<std::uint16_t, 12>;

/* Sparse polynomial in named variables.
 * terms are kept sorted by descending graded-lex order of exponent, no zero
 * coefficients, exponents sized to the variable list.  Binary ops on
 * polynomials with different variable lists merge the lists (left first). */
class MultiPoly {
 public:
  using Term = std::pair<Exponent, Rational>;
  using VarList = std::shared_ptr<const std::vector<std::string>>;

  MultiPoly();
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(VarList vars, std::vector<Term> terms);  // canonicalizes

  static MultiPoly constant(const Rational& c);
  static MultiPoly var(const std::string& name);
  static MultiPoly from_int(long v) { return constant(Rational(v)); }

  const std::vector<std::string>& variables() const { return *vars_; }
  const VarList& var_list() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int var_index(const std::string& name) const;  // -1 if absent
  int total_degree() const;                      // -1 for zero
  int degree_in(const std::string& name) const;
  Rational coeff(const Exponent& e) const;
  // coefficient of a monomial given as {name: exp}
  Rational coeff(const std::map<std::string, int>& mono) const;
  std::vector<std::string> used_variables() const;

  // re-express over `vars`, which must contain every used variable
  MultiPoly over(const VarList& vars) const;
  MultiPoly over(const std::vector<std::string>& vars) const;
  MultiPoly drop_unused() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly pow(unsigned k) const;

  // structural equality after aligning variables
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // canonical text: descending grlex over the used variables (sorted by name
  // of the stored order), `num/den*x^e*y`; zero is "0"
  std::string to_string() const;

  // derivative-free helpers
  MultiPoly homogeneous_part(int deg) const;
  // coefficient of name^k as a polynomial in the remaining variables
  MultiPoly coeff_of(const std::string& name, int k) const;
  // integer content check
  bool has_integer_coeffs() const;

 private:
  void canonicalize();
  static VarList merge(const VarList& a, const VarList& b);

  VarList vars_;
  std::vector<Term> terms_;
};

using AlphaPoly = MultiPoly;

inline const char* kAlpha = "a";
inline const char* kBeta = "b";

inline MultiPoly alpha() { return MultiPoly::var(kAlpha); }
inline MultiPoly beta() { return MultiPoly::var(kBeta); }

// grlex comparison of two exponent vectors of equal length: <0, 0, >0
int grlex_compare(const Exponent& a, const Exponent& b);

// q*b + r == a, deg r < deg b.  both univariate in the same variable (or const)
std::pair<MultiPoly, MultiPoly> divrem(const MultiPoly& a, const MultiPoly& b);
// monic univariate gcd (zero if both zero)
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);
// full numeric evaluation; every used variable must be bound
Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& values);

/* Parser for the canonical text and for factored fixture literals:
 * integers, identifiers, + - * / ^ and parentheses.  `/` is only allowed by a
 * nonzero constant; `^` takes a nonnegative integer. */
MultiPoly parse_poly(const std::string& text);

class RatFunc {
 public:
  RatFunc();
  RatFunc(const MultiPoly& num);  // NOLINT: implicit lift
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& numer() const { return num_; }
  const MultiPoly& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // numerator/denominator when is_polynomial(), throws otherwise
  MultiPoly as_poly() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  // cross multiplication, valid for any number of variables
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  Rational evaluate(const std::map<std::string, Rational>& values) const;
  std::string to_string() const;

 private:
  void canonicalize();
  MultiPoly num_, den_;
};

/* Symmetric reduction modulo e1.  p lives in x1..x6 (names given) plus other
 * variables treated as coefficients; x6 is eliminated as -(x1+..+x5).
 * Returns the unique polynomial in e2..e6 (names "e2".."e6").  Throws
 * "not symmetric" if no representation exists. */
MultiPoly expand_in_elementary(const MultiPoly& p, const std::vector<std::string>& xs);
// e_k(x1..x6) with x6 = -(x1+..+x5), over x1..x5
MultiPoly elementary_on_hyperplane(int k, const std::vector<std::string>& xs);

// rank of a dense rational matrix (Gaussian elimination)
int rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace jacklr
