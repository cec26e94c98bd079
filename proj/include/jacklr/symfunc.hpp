// Symmetric functions of fixed degree, integral Jack polynomials, LR coefficients.
#pragma once

#include "jacklr/exact.hpp"
#include "jacklr/partitions.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace jacklr {

struct SymFunc {
  int degree = 0;
  std::map<Partition, RatFunc> coeffs;  // monomial basis, no zeros

  static SymFunc monomial(const Partition& lam);
  void add(const Partition& lam, const RatFunc& c);
  friend bool operator==(const SymFunc& a, const SymFunc& b);
};

// power-sum coefficients, polynomial in alpha
using PowerExpansion = std::map<Partition, AlphaPoly>;

// z_rho = prod_i i^{m_i} m_i!
Integer z_factor(const Partition& rho);
// coefficient of m_lam in m_mu*m_nu (rearrangement count)
Integer monomial_product_coeff(const Partition& mu, const Partition& nu, const Partition& lam);

/* Memo of Jack expansions.  Jack polynomials are obtained by Gram-Schmidt at
 * rational alpha points in the power-sum pairing and interpolated; each entry
 * is checked at an extra point.  Thread-safe; first writer wins. */
class JackTable {
 public:
  explicit JackTable(int degree_cap = 12, std::string cache_dir = "");
  ~JackTable();

  int degree_cap() const { return cap_; }
  const std::string& cache_dir() const { return dir_; }

  // monomial expansion of J_lam, coefficients polynomial in alpha
  const SymFunc& jack(const Partition& lam);
  // power-sum expansion of J_lam
  const PowerExpansion& jack_power(const Partition& lam);
  // m_mu in power sums (rational, alpha-free)
  const std::map<Partition, Rational>& monomial_to_power(const Partition& mu);

  // number of cache records loaded / written, for diagnostics
  int loaded() const { return loaded_; }
  int stored() const { return stored_; }
  std::vector<std::string> warnings() const;

 private:
  struct Degree;
  Degree& degree_data(int n);  // lock held
  void compute_degree(int n);  // lock held
  bool load_degree(int n);     // lock held
  void store_degree(int n);    // lock held

  int cap_;
  std::string dir_;
  std::recursive_mutex mu_;
  std::map<int, std::unique_ptr<Degree>> data_;
  int loaded_ = 0, stored_ = 0;
  std::vector<std::string> warnings_;
};

// process-wide default table (cap 12, cache dir from JACKLR_CACHE_DIR if set)
JackTable& default_jack_table();

SymFunc jack(const Partition& lam);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
std::map<Partition, RatFunc> expand_in_jack(const SymFunc& f, JackTable& table = default_jack_table());
RatFunc lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam,
                       JackTable& table = default_jack_table());
// <J_mu J_nu, J_lam> in the alpha pairing, i.e. g * j_lam
AlphaPoly stanley_coefficient(const Partition& mu, const Partition& nu, const Partition& lam,
                              JackTable& table = default_jack_table());
AlphaPoly jnorm(const Partition& lam);
// product of ordinary hook lengths
Integer hook_product(const Partition& lam);

}  // namespace jacklr
