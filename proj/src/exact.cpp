#include "jacklr/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace jacklr {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int grlex_compare(const Exponent& a, const Exponent& b) {
  int da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

struct ExpHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

const MultiPoly::VarList& empty_vars() {
  static const MultiPoly::VarList v = std::make_shared<const std::vector<std::string>>();
  return v;
}

bool desc_grlex(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grlex_compare(a.first, b.first) > 0;
}

}  // namespace

MultiPoly::MultiPoly() : vars_(empty_vars()) {}

MultiPoly::MultiPoly(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}

MultiPoly::MultiPoly(VarList vars, std::vector<Term> terms)
    : vars_(vars ? std::move(vars) : empty_vars()), terms_(std::move(terms)) {
  canonicalize();
}

void MultiPoly::canonicalize() {
  for (auto& t : terms_) {
    if (t.first.size() != vars_->size()) throw std::logic_error("exponent length mismatch");
    t.second.canonicalize();
  }
  std::sort(terms_.begin(), terms_.end(), desc_grlex);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({Exponent{}, c});
  return p;
}

MultiPoly MultiPoly::var(const std::string& name) {
  MultiPoly p(std::vector<std::string>{name});
  p.terms_.push_back({Exponent{1}, Rational(1)});
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto v : terms_[0].first)
    if (v) return false;
  return true;
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& last = terms_.back();
  for (auto v : last.first)
    if (v) return 0;
  return last.second;
}

int MultiPoly::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return static_cast<int>(i);
  return -1;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (auto v : terms_[0].first) d += v;
  return d;
}

int MultiPoly::degree_in(const std::string& name) const {
  int i = var_index(name);
  if (terms_.empty()) return -1;
  if (i < 0) return 0;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first[i]);
  return d;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponent& x) {
    return grlex_compare(t.first, x) > 0;
  });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Rational MultiPoly::coeff(const std::map<std::string, int>& mono) const {
  Exponent e(vars_->size(), 0);
  for (const auto& [name, k] : mono) {
    if (k == 0) continue;
    int i = var_index(name);
    if (i < 0) return 0;
    e[i] = static_cast<std::uint16_t>(k);
  }
  return coeff(e);
}

std::vector<std::string> MultiPoly::used_variables() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.first.size(); ++i)
      if (t.first[i]) used[i] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back((*vars_)[i]);
  return out;
}

MultiPoly MultiPoly::over(const VarList& vars) const {
  if (vars == vars_ || *vars == *vars_) {
    MultiPoly p = *this;
    p.vars_ = vars;
    return p;
  }
  std::vector<int> map(vars_->size(), -1);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    for (std::size_t j = 0; j < vars->size(); ++j)
      if ((*vars)[j] == (*vars_)[i]) map[i] = static_cast<int>(j);
  }
  MultiPoly p;
  p.vars_ = vars;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(vars->size(), 0);
    for (std::size_t i = 0; i < t.first.size(); ++i) {
      if (!t.first[i]) continue;
      if (map[i] < 0) throw std::invalid_argument("variable dropped: " + (*vars_)[i]);
      e[map[i]] = t.first[i];
    }
    p.terms_.push_back({std::move(e), t.second});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), desc_grlex);
  return p;
}

MultiPoly MultiPoly::over(const std::vector<std::string>& vars) const {
  return over(std::make_shared<const std::vector<std::string>>(vars));
}

MultiPoly MultiPoly::drop_unused() const { return over(used_variables()); }

MultiPoly::VarList MultiPoly::merge(const VarList& a, const VarList& b) {
  if (a == b || *a == *b) return a;
  if (a->empty()) return b;
  if (b->empty()) return a;
  std::vector<std::string> v = *a;
  bool added = false;
  for (const auto& n : *b)
    if (std::find(v.begin(), v.end(), n) == v.end()) {
      v.push_back(n);
      added = true;
    }
  if (!added) return a;
  return std::make_shared<const std::vector<std::string>>(std::move(v));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  VarList vs = merge(vars_, o.vars_);
  MultiPoly a = (vs == vars_) ? std::move(*this) : over(vs);
  const MultiPoly b = (vs == o.vars_ || *vs == *o.vars_) ? o : o.over(vs);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size())
      c = -1;
    else if (j == b.terms_.size())
      c = 1;
    else
      c = grlex_compare(a.terms_[i].first, b.terms_[j].first);
    if (c > 0) {
      out.push_back(std::move(a.terms_[i++]));
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].second + b.terms_[j].second;
      if (s != 0) out.push_back({std::move(a.terms_[i].first), s});
      ++i;
      ++j;
    }
  }
  vars_ = vs;
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.terms_.empty() || y.terms_.empty()) return MultiPoly();
  MultiPoly::VarList vs = MultiPoly::merge(x.vars_, y.vars_);
  const MultiPoly a = (vs == x.vars_) ? x : x.over(vs);
  const MultiPoly b = (vs == y.vars_ || *vs == *y.vars_) ? y : y.over(vs);
  const std::size_t n = vs->size();
  std::unordered_map<Exponent, Rational, ExpHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() * 2);
  Exponent e(n, 0);
  Rational prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) e[k] = s.first[k] + t.first[k];
      mpq_mul(prod.get_mpq_t(), s.second.get_mpq_t(), t.second.get_mpq_t());
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, prod);
      else
        it->second += prod;
    }
  }
  MultiPoly out;
  out.vars_ = vs;
  out.terms_.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (v != 0) out.terms_.push_back({k, v});
  std::sort(out.terms_.begin(), out.terms_.end(), desc_grlex);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names = used_variables();
  std::sort(names.begin(), names.end());
  MultiPoly p = over(names);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (auto v : e) has_var |= (v != 0);
    bool wrote = false;
    if (mag != 1 || !has_var) {
      os << rational_text(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::homogeneous_part(int deg) const {
  MultiPoly p;
  p.vars_ = vars_;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto v : t.first) d += v;
    if (d == deg) p.terms_.push_back(t);
  }
  return p;
}

MultiPoly MultiPoly::coeff_of(const std::string& name, int k) const {
  int i = var_index(name);
  MultiPoly p;
  p.vars_ = vars_;
  for (const auto& t : terms_) {
    int d = i < 0 ? 0 : t.first[i];
    if (d != k) continue;
    Term s = t;
    if (i >= 0) s.first[i] = 0;
    p.terms_.push_back(std::move(s));
  }
  p.canonicalize();
  return p;
}

bool MultiPoly::has_integer_coeffs() const {
  for (const auto& t : terms_)
    if (t.second.get_den() != 1) return false;
  return true;
}

// ---- univariate helpers ----

namespace {

// dense coefficients, index = degree; var name reported via out param
std::vector<Rational> to_dense(const MultiPoly& p, std::string& var) {
  auto used = p.used_variables();
  if (used.size() > 1) throw std::invalid_argument("not univariate: " + p.to_string());
  if (used.size() == 1) {
    if (!var.empty() && var != used[0]) throw std::invalid_argument("variables differ");
    var = used[0];
  }
  std::vector<Rational> d;
  int idx = used.empty() ? -1 : p.var_index(used[0]);
  for (const auto& t : p.terms()) {
    std::size_t k = idx < 0 ? 0 : t.first[idx];
    if (d.size() <= k) d.resize(k + 1);
    d[k] = t.second;
  }
  return d;
}

MultiPoly from_dense(const std::vector<Rational>& d, const std::string& var) {
  if (var.empty()) return MultiPoly::constant(d.empty() ? Rational(0) : d[0]);
  std::vector<MultiPoly::Term> ts;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) ts.push_back({Exponent{static_cast<std::uint16_t>(k)}, d[k]});
  return MultiPoly(std::make_shared<const std::vector<std::string>>(std::vector<std::string>{var}),
                   std::move(ts));
}

void trim(std::vector<Rational>& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

}  // namespace

std::pair<MultiPoly, MultiPoly> divrem(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  std::string var;
  auto B = to_dense(b, var);
  auto A = to_dense(a, var);
  trim(A);
  trim(B);
  std::vector<Rational> Q;
  if (A.size() >= B.size()) Q.assign(A.size() - B.size() + 1, 0);
  while (A.size() >= B.size() && !A.empty()) {
    std::size_t sh = A.size() - B.size();
    Rational c = A.back() / B.back();
    Q[sh] = c;
    for (std::size_t i = 0; i < B.size(); ++i) A[sh + i] -= c * B[i];
    A.pop_back();
    trim(A);
  }
  return {from_dense(Q, var), from_dense(A, var)};
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Rational(1 / x.terms().front().second);
}

// ---- substitution ----

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
  const auto& vs = p.variables();
  std::vector<const MultiPoly*> bound(vs.size(), nullptr);
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto it = bindings.find(vs[i]);
    if (it != bindings.end())
      bound[i] = &it->second;
    else
      keep.push_back(vs[i]);
  }
  auto keep_vars = std::make_shared<const std::vector<std::string>>(keep);
  // powers cache per bound variable
  std::vector<std::vector<MultiPoly>> powers(vs.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * *bound[i]);
    return pw[k];
  };
  // group terms by their bound part to share products
  std::map<std::vector<int>, std::vector<MultiPoly::Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<int> key(vs.size(), 0);
    Exponent rest(keep.size(), 0);
    std::size_t r = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (bound[i])
        key[i] = t.first[i];
      else
        rest[r++] = t.first[i];
    }
    groups[key].push_back({rest, t.second});
  }
  MultiPoly out;
  for (auto& [key, rest] : groups) {
    MultiPoly factor = MultiPoly::constant(1);
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (bound[i] && key[i]) factor *= power(i, key[i]);
    out += MultiPoly(keep_vars, std::move(rest)) * factor;
  }
  return out;
}

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& values) {
  const auto& vs = p.variables();
  std::vector<const Rational*> val(vs.size(), nullptr);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto it = values.find(vs[i]);
    if (it != values.end()) val[i] = &it->second;
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term = t.second;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!t.first[i]) continue;
      if (!val[i]) throw std::invalid_argument("unbound variable: " + vs[i]);
      Rational x;
      mpz_pow_ui(x.get_num_mpz_t(), val[i]->get_num_mpz_t(), t.first[i]);
      mpz_pow_ui(x.get_den_mpz_t(), val[i]->get_den_mpz_t(), t.first[i]);
      term *= x;
    }
    sum += term;
  }
  return sum;
}

// ---- parser ----

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }
  MultiPoly term() {
    MultiPoly p = unary();
    for (;;) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p *= Rational(1 / d.constant_term());
      } else {
        return p;
      }
    }
  }
  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  MultiPoly power() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(st, pos_ - st))));
    }
    return base;
  }
  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(Rational(Integer(s_.substr(st, pos_ - st))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return MultiPoly::var(s_.substr(st, pos_ - st));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

// ---- RatFunc ----

RatFunc::RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
RatFunc::RatFunc(const MultiPoly& num) : num_(num), den_(MultiPoly::constant(1)) {}
RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  auto un = num_.used_variables(), ud = den_.used_variables();
  std::vector<std::string> all = un;
  for (auto& v : ud)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  if (all.size() <= 1 && !den_.is_constant()) {
    MultiPoly g = univariate_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
  }
  // scale: integer primitive denominator, positive leading coefficient
  Integer l = 1;
  for (const auto& t : den_.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  Integer g = 0;
  for (const auto& t : den_.terms()) {
    Integer v = t.second.get_num() * (l / t.second.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (den_.terms().front().second < 0) s = -s;
  num_ *= s;
  den_ *= s;
}

MultiPoly RatFunc::as_poly() const {
  if (!den_.is_constant()) throw std::domain_error("not a polynomial: " + to_string());
  return num_ * Rational(1 / den_.constant_term());
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Rational RatFunc::evaluate(const std::map<std::string, Rational>& values) const {
  Rational d = jacklr::evaluate(den_, values);
  if (d == 0) throw std::domain_error("pole");
  return jacklr::evaluate(num_, values) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---- elementary symmetric reduction ----

MultiPoly elementary_on_hyperplane(int k, const std::vector<std::string>& xs) {
  if (xs.size() != 6) throw std::invalid_argument("need six variables");
  std::vector<MultiPoly> x;
  MultiPoly s;
  for (int i = 0; i < 5; ++i) {
    x.push_back(MultiPoly::var(xs[i]));
    s += x.back();
  }
  x.push_back(-s);
  // e_k via the generating product prod(1 + x_i t), tracked by degree
  std::vector<MultiPoly> e(7);
  e[0] = MultiPoly::constant(1);
  for (int i = 0; i < 6; ++i)
    for (int d = std::min(i + 1, 6); d >= 1; --d) e[d] += e[d - 1] * x[i];
  return e[k].over(std::vector<std::string>(xs.begin(), xs.begin() + 5));
}

namespace {

// weighted partitions of n into parts 2..6, as exponent vectors (a2..a6)
void e_monomials(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    std::vector<int> a(5, 0);
    for (int p : cur) a[p - 2]++;
    out.push_back(a);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 2; --p) {
    cur.push_back(p);
    e_monomials(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MultiPoly expand_in_elementary(const MultiPoly& p, const std::vector<std::string>& xs) {
  if (xs.size() != 6) throw std::invalid_argument("need six variables");
  std::vector<std::string> x5(xs.begin(), xs.begin() + 5);
  MultiPoly s;
  for (int i = 0; i < 5; ++i) s += MultiPoly::var(xs[i]);
  MultiPoly q = substitute(p, {{xs[5], -s}});
  std::vector<std::string> others;
  for (const auto& v : q.used_variables())
    if (std::find(x5.begin(), x5.end(), v) == x5.end()) others.push_back(v);
  std::vector<std::string> all = x5;
  all.insert(all.end(), others.begin(), others.end());
  q = q.over(all);

  // split: (other exponent, x degree) -> polynomial in x1..x5
  auto x5vars = std::make_shared<const std::vector<std::string>>(x5);
  std::map<std::pair<std::vector<int>, int>, std::vector<MultiPoly::Term>> parts;
  for (const auto& t : q.terms()) {
    std::vector<int> o;
    for (std::size_t i = 5; i < all.size(); ++i) o.push_back(t.first[i]);
    Exponent ex(t.first.begin(), t.first.begin() + 5);
    int d = 0;
    for (auto v : ex) d += v;
    parts[{o, d}].push_back({ex, t.second});
  }

  std::vector<MultiPoly> E(7);
  for (int k = 2; k <= 6; ++k) E[k] = elementary_on_hyperplane(k, xs).over(x5vars);
  std::vector<std::string> evars = {"e2", "e3", "e4", "e5", "e6"};
  std::vector<std::string> outvars = evars;
  outvars.insert(outvars.end(), others.begin(), others.end());
  auto outlist = std::make_shared<const std::vector<std::string>>(outvars);

  std::map<int, std::pair<std::vector<std::vector<int>>, std::vector<MultiPoly>>> basis;
  std::vector<MultiPoly::Term> result;
  for (auto& [key, terms] : parts) {
    int d = key.second;
    MultiPoly target(x5vars, std::move(terms));
    auto& B = basis[d];
    if (B.first.empty() && d >= 0) {
      std::vector<int> cur;
      e_monomials(d, 6, cur, B.first);
      for (const auto& a : B.first) {
        MultiPoly m = MultiPoly::constant(1);
        for (int k = 0; k < 5; ++k)
          if (a[k]) m *= E[k + 2].pow(a[k]);
        B.second.push_back(m.over(x5vars));
      }
    }
    // gaussian elimination: rows = monomials, columns = basis + target
    std::map<Exponent, int> rowidx;
    auto row_of = [&](const Exponent& e) {
      auto it = rowidx.find(e);
      if (it != rowidx.end()) return it->second;
      int r = static_cast<int>(rowidx.size());
      rowidx.emplace(e, r);
      return r;
    };
    std::size_t nb = B.second.size();
    std::vector<std::vector<std::pair<int, Rational>>> cols(nb + 1);
    for (std::size_t c = 0; c < nb; ++c)
      for (const auto& t : B.second[c].terms()) cols[c].push_back({row_of(t.first), t.second});
    for (const auto& t : target.terms()) cols[nb].push_back({row_of(t.first), t.second});
    std::size_t nr = rowidx.size();
    std::vector<std::vector<Rational>> M(nr, std::vector<Rational>(nb + 1, 0));
    for (std::size_t c = 0; c <= nb; ++c)
      for (auto& [r, v] : cols[c]) M[r][c] = v;
    std::vector<int> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nb && r < nr; ++c) {
      std::size_t piv = r;
      while (piv < nr && M[piv][c] == 0) ++piv;
      if (piv == nr) throw std::logic_error("elementary basis degenerate");
      std::swap(M[piv], M[r]);
      Rational inv = 1 / M[r][c];
      for (auto& v : M[r]) v *= inv;
      for (std::size_t i = 0; i < nr; ++i) {
        if (i == r || M[i][c] == 0) continue;
        Rational f = M[i][c];
        for (std::size_t j = c; j <= nb; ++j) M[i][j] -= f * M[r][j];
      }
      pivcol.push_back(static_cast<int>(c));
      ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
      if (M[i][nb] != 0) throw std::domain_error("not symmetric");
    for (std::size_t i = 0; i < r; ++i) {
      if (M[i][nb] == 0) continue;
      const auto& a = B.first[pivcol[i]];
      Exponent ex(outvars.size(), 0);
      for (int k = 0; k < 5; ++k) ex[k] = static_cast<std::uint16_t>(a[k]);
      for (std::size_t k = 0; k < key.first.size(); ++k)
        ex[5 + k] = static_cast<std::uint16_t>(key.first[k]);
      result.push_back({ex, M[i][nb]});
    }
  }
  return MultiPoly(outlist, std::move(result));
}

int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  std::size_t nr = m.size(), nc = m[0].size(), r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && m[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace jacklr
