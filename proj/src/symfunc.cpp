#include "jacklr/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace jacklr {

namespace {
const char* kCacheHeader = "jacklr-jack-cache v1 hookU=a(arm+1)+leg";
}

SymFunc SymFunc::monomial(const Partition& lam) {
  SymFunc f;
  f.degree = lam.weight();
  f.coeffs[lam] = RatFunc(MultiPoly::constant(1));
  return f;
}

void SymFunc::add(const Partition& lam, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(lam);
  if (it == coeffs.end()) {
    coeffs.emplace(lam, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (const auto& [k, v] : a.coeffs) {
    auto it = b.coeffs.find(k);
    if (it == b.coeffs.end() || !(it->second == v)) return false;
  }
  return true;
}

Integer z_factor(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) mult[p]++;
  for (auto [i, m] : mult) {
    for (int k = 0; k < m; ++k) z *= i;
    for (int k = 2; k <= m; ++k) z *= k;
  }
  return z;
}

Integer monomial_product_coeff(const Partition& mu, const Partition& nu, const Partition& lam) {
  if (mu.weight() + nu.weight() != lam.weight()) return 0;
  int L = lam.length();
  if (mu.length() > L || nu.length() > L) return 0;
  std::vector<int> u(L, 0), target(L, 0);
  for (int i = 0; i < mu.length(); ++i) u[i] = mu.part(i);
  for (int i = 0; i < nu.length(); ++i) target[i] = nu.part(i);
  std::sort(u.begin(), u.end());
  Integer count = 0;
  std::vector<int> v(L);
  do {
    bool ok = true;
    for (int i = 0; i < L && ok; ++i) {
      v[i] = lam.part(i) - u[i];
      ok = v[i] >= 0;
    }
    if (!ok) continue;
    std::sort(v.begin(), v.end(), std::greater<int>());
    if (v == target) ++count;
  } while (std::next_permutation(u.begin(), u.end()));
  return count;
}

// ---- per-degree data ----

struct JackTable::Degree {
  int n = 0;
  std::vector<Partition> parts;  // reverse-lex, largest first
  std::map<Partition, int> index;
  std::vector<std::vector<Rational>> A;  // m_mu = sum_rho A[mu][rho] p_rho
  std::vector<std::vector<Rational>> T;  // f_m = T f_p, T[mu][rho] = [m_mu] p_rho
  std::map<Partition, SymFunc> jm;
  std::map<Partition, PowerExpansion> jp;
  std::map<Partition, std::map<Partition, Rational>> mp;
};

namespace {

// coefficient of x^mu in p_rho: ways to distribute parts of rho onto rows
Integer power_to_monomial(const Partition& rho, const Partition& mu) {
  std::map<std::vector<int>, Integer> states;
  states[mu.parts()] = 1;
  for (int r : rho.parts()) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [rem, c] : states)
      for (std::size_t i = 0; i < rem.size(); ++i) {
        if (rem[i] < r) continue;
        auto nr = rem;
        nr[i] -= r;
        next[nr] += c;
      }
    states = std::move(next);
  }
  Integer total = 0;
  for (const auto& [rem, c] : states) {
    bool zero = true;
    for (int v : rem) zero &= (v == 0);
    if (zero) total += c;
  }
  return total;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rational f = 1 / m[c][c];
    for (auto& v : m[c]) v *= f;
    for (auto& v : inv[c]) v *= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational g = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (m[c][j] != 0) m[r][j] -= g * m[c][j];
        if (inv[c][j] != 0) inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

// Newton interpolation through (i, ys[i-1]), i = 1..K
AlphaPoly interpolate(const std::vector<Rational>& ys) {
  std::size_t K = ys.size();
  std::vector<Rational> d = ys;
  for (std::size_t j = 1; j < K; ++j)
    for (std::size_t i = K - 1; i >= j; --i) d[i] = (d[i] - d[i - 1]) / Rational(static_cast<long>(j));
  AlphaPoly a = alpha();
  AlphaPoly r = MultiPoly::constant(d[K - 1]);
  for (std::size_t i = K - 1; i-- > 0;) {
    r = r * (a - MultiPoly::from_int(static_cast<long>(i + 1))) + MultiPoly::constant(d[i]);
  }
  return r;
}

AlphaPoly lower_hook_product(const Partition& lam) {
  AlphaPoly p = MultiPoly::constant(1);
  for (auto b : lam.boxes()) p *= lower_hook(lam, b);
  return p;
}

}  // namespace

JackTable::JackTable(int degree_cap, std::string cache_dir) : cap_(degree_cap), dir_(std::move(cache_dir)) {}
JackTable::~JackTable() = default;

std::vector<std::string> JackTable::warnings() const {
  auto* self = const_cast<JackTable*>(this);
  std::lock_guard<std::recursive_mutex> g(self->mu_);
  return warnings_;
}

JackTable::Degree& JackTable::degree_data(int n) {
  if (n > cap_) throw std::out_of_range("degree cap: " + std::to_string(n) + " > " + std::to_string(cap_));
  auto it = data_.find(n);
  if (it != data_.end()) return *it->second;
  auto d = std::make_unique<Degree>();
  d->n = n;
  d->parts = enumerate_partitions(n);
  for (std::size_t i = 0; i < d->parts.size(); ++i) d->index[d->parts[i]] = static_cast<int>(i);
  std::size_t N = d->parts.size();
  d->T.assign(N, std::vector<Rational>(N, 0));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t m = 0; m < N; ++m)
      if (dominated_by(d->parts[r], d->parts[m]))
        d->T[m][r] = Rational(power_to_monomial(d->parts[r], d->parts[m]));
  // p-coordinates of m_mu are column mu of T^{-1}
  auto Tinv = invert(d->T);
  d->A.assign(N, std::vector<Rational>(N, 0));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t r = 0; r < N; ++r) d->A[m][r] = Tinv[r][m];
  auto& ref = *d;
  data_[n] = std::move(d);
  if (!dir_.empty() && load_degree(n)) return ref;
  compute_degree(n);
  if (!dir_.empty()) store_degree(n);
  return ref;
}

void JackTable::compute_degree(int n) {
  Degree& d = *data_[n];
  std::size_t N = d.parts.size();
  std::vector<int> len(N);
  std::vector<Integer> z(N);
  for (std::size_t r = 0; r < N; ++r) {
    len[r] = d.parts[r].length();
    z[r] = z_factor(d.parts[r]);
  }
  std::size_t K = static_cast<std::size_t>(n) + 2;
  // vals[lam][mu][k]: m_mu coefficient of J_lam at alpha = k+1
  std::vector<std::vector<std::vector<Rational>>> vals(
      N, std::vector<std::vector<Rational>>(N, std::vector<Rational>(K)));
  for (std::size_t k = 0; k < K; ++k) {
    Rational t(static_cast<long>(k + 1));
    std::vector<Rational> w(N);
    for (std::size_t r = 0; r < N; ++r) {
      Rational tp = 1;
      for (int i = 0; i < len[r]; ++i) tp *= t;
      w[r] = Rational(z[r]) * tp;
    }
    std::vector<std::vector<Rational>> P(N);  // p-coords of P_lam
    std::vector<Rational> norm(N);
    for (std::size_t li = N; li-- > 0;) {
      std::vector<Rational> v = d.A[li];
      for (std::size_t mi = N - 1; mi > li; --mi) {
        Rational ip = 0;
        for (std::size_t r = 0; r < N; ++r)
          if (v[r] != 0 && P[mi][r] != 0) ip += v[r] * P[mi][r] * w[r];
        if (ip == 0) continue;
        Rational c = ip / norm[mi];
        for (std::size_t r = 0; r < N; ++r)
          if (P[mi][r] != 0) v[r] -= c * P[mi][r];
      }
      Rational nn = 0;
      for (std::size_t r = 0; r < N; ++r)
        if (v[r] != 0) nn += v[r] * v[r] * w[r];
      norm[li] = nn;
      P[li] = std::move(v);
    }
    for (std::size_t li = 0; li < N; ++li) {
      Rational scale = evaluate(lower_hook_product(d.parts[li]), {{kAlpha, t}});
      for (std::size_t mi = li; mi < N; ++mi) {
        Rational s = 0;
        for (std::size_t r = 0; r < N; ++r)
          if (P[li][r] != 0 && d.T[mi][r] != 0) s += d.T[mi][r] * P[li][r];
        vals[li][mi][k] = s * scale;
      }
    }
  }
  for (std::size_t li = 0; li < N; ++li) {
    SymFunc f;
    f.degree = n;
    for (std::size_t mi = li; mi < N; ++mi) {
      AlphaPoly c = interpolate(vals[li][mi]);
      if (c.total_degree() > n) throw std::logic_error("jack interpolation degree check failed");
      if (!c.has_integer_coeffs()) throw std::logic_error("jack coefficient not integral");
      if (!c.is_zero()) f.coeffs[d.parts[mi]] = RatFunc(c);
    }
    d.jm[d.parts[li]] = std::move(f);
  }
}

bool JackTable::load_degree(int n) {
  namespace fs = std::filesystem;
  fs::path p = fs::path(dir_) / ("jack_deg" + std::to_string(n) + ".txt");
  std::ifstream in(p);
  if (!in) return false;
  Degree& d = *data_[n];
  std::string line;
  auto warn = [&](const std::string& w) {
    warnings_.push_back(p.string() + ": " + w);
    d.jm.clear();
    return false;
  };
  if (!std::getline(in, line) || line != std::string(kCacheHeader) + " degree=" + std::to_string(n))
    return warn("version/convention mismatch, cache ignored");
  std::map<Partition, SymFunc> jm;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto sep = line.find(" := [");
      if (sep == std::string::npos || line.back() != ']') return warn("corrupted line, recomputing");
      Partition lam = Partition::parse(line.substr(0, sep));
      SymFunc f;
      f.degree = n;
      std::string body = line.substr(sep + 5, line.size() - sep - 6);
      std::size_t pos = 0;
      while (true) {
        auto open = body.find('(', pos);
        if (open == std::string::npos) break;
        // the polynomial itself may contain parentheses only in ")(" free form;
        // canonical text never does, so the next ')' closes the record
        auto close = body.find(')', open);
        if (close == std::string::npos) return warn("corrupted line, recomputing");
        std::string rec = body.substr(open + 1, close - open - 1);
        auto comma = rec.rfind(',');
        if (comma == std::string::npos) return warn("corrupted line, recomputing");
        Partition mu = Partition::parse(rec.substr(0, comma));
        AlphaPoly c = parse_poly(rec.substr(comma + 1));
        if (mu.weight() != n) return warn("corrupted line, recomputing");
        f.coeffs[mu] = RatFunc(c);
        pos = close + 1;
      }
      jm[lam] = std::move(f);
    }
  } catch (const std::exception& e) {
    return warn(std::string("corrupted cache: ") + e.what());
  }
  // sanity: every partition present, m_{1^n} coefficient n!
  Integer fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Partition ones(std::vector<int>(n, 1));
  for (const auto& lam : d.parts) {
    auto it = jm.find(lam);
    if (it == jm.end()) return warn("missing record, recomputing");
    auto c = it->second.coeffs.find(ones);
    if (c == it->second.coeffs.end() || !(c->second == RatFunc(MultiPoly::constant(Rational(fact)))))
      return warn("failed n! check, recomputing");
  }
  if (jm.size() != d.parts.size()) return warn("extra records, recomputing");
  d.jm = std::move(jm);
  ++loaded_;
  return true;
}

void JackTable::store_degree(int n) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  fs::path p = fs::path(dir_) / ("jack_deg" + std::to_string(n) + ".txt");
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      warnings_.push_back("cannot write cache " + p.string());
      return;
    }
    out << kCacheHeader << " degree=" << n << "\n";
    Degree& d = *data_[n];
    for (const auto& [lam, f] : d.jm) {
      out << lam.to_string() << " := [";
      for (const auto& [mu, c] : f.coeffs) out << " (" << mu.to_string() << ", " << c.to_string() << ")";
      out << " ]\n";
    }
  }
  fs::rename(tmp, p, ec);
  if (ec)
    warnings_.push_back("cannot write cache " + p.string());
  else
    ++stored_;
}

const SymFunc& JackTable::jack(const Partition& lam) {
  std::lock_guard<std::recursive_mutex> g(mu_);
  return degree_data(lam.weight()).jm.at(lam);
}

const std::map<Partition, Rational>& JackTable::monomial_to_power(const Partition& mu) {
  std::lock_guard<std::recursive_mutex> g(mu_);
  Degree& d = degree_data(mu.weight());
  auto it = d.mp.find(mu);
  if (it != d.mp.end()) return it->second;
  std::map<Partition, Rational> out;
  const auto& row = d.A[d.index.at(mu)];
  for (std::size_t r = 0; r < row.size(); ++r)
    if (row[r] != 0) out[d.parts[r]] = row[r];
  return d.mp[mu] = std::move(out);
}

const PowerExpansion& JackTable::jack_power(const Partition& lam) {
  std::lock_guard<std::recursive_mutex> g(mu_);
  Degree& d = degree_data(lam.weight());
  auto it = d.jp.find(lam);
  if (it != d.jp.end()) return it->second;
  std::map<Partition, AlphaPoly> acc;
  for (const auto& [mu, c] : d.jm.at(lam).coeffs) {
    AlphaPoly cp = c.as_poly();
    for (const auto& [rho, a] : monomial_to_power(mu)) acc[rho] += cp * a;
  }
  PowerExpansion out;
  for (auto& [rho, c] : acc)
    if (!c.is_zero()) out[rho] = std::move(c);
  return d.jp[lam] = std::move(out);
}

JackTable& default_jack_table() {
  static JackTable table(12, [] {
    const char* env = std::getenv("JACKLR_CACHE_DIR");
    return env ? std::string(env) : std::string();
  }());
  return table;
}

SymFunc jack(const Partition& lam) { return default_jack_table().jack(lam); }

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  out.degree = f.degree + g.degree;
  if (f.coeffs.empty() || g.coeffs.empty()) return out;
  auto targets = enumerate_partitions(out.degree);
  static std::mutex cache_mu;
  static std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, Integer>>> cache;
  for (const auto& [mu, a] : f.coeffs)
    for (const auto& [nu, b] : g.coeffs) {
      std::vector<std::pair<Partition, Integer>> prod;
      {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto key = std::make_pair(mu, nu);
        auto it = cache.find(key);
        if (it == cache.end()) {
          std::vector<std::pair<Partition, Integer>> v;
          for (const auto& lam : targets) {
            Integer c = monomial_product_coeff(mu, nu, lam);
            if (c != 0) v.push_back({lam, c});
          }
          it = cache.emplace(key, std::move(v)).first;
        }
        prod = it->second;
      }
      RatFunc ab = a * b;
      for (const auto& [lam, c] : prod) out.add(lam, ab * RatFunc(MultiPoly::constant(Rational(c))));
    }
  return out;
}

std::map<Partition, RatFunc> expand_in_jack(const SymFunc& f, JackTable& table) {
  std::map<Partition, RatFunc> out;
  if (f.coeffs.empty()) return out;
  SymFunc rest = f;
  auto order = enumerate_partitions(f.degree);  // largest first
  for (const auto& lam : order) {
    auto it = rest.coeffs.find(lam);
    if (it == rest.coeffs.end()) continue;
    const SymFunc& J = table.jack(lam);
    RatFunc c = it->second / J.coeffs.at(lam);
    out[lam] = c;
    for (const auto& [mu, v] : J.coeffs) rest.add(mu, -(c * v));
    if (rest.coeffs.count(lam)) throw std::logic_error("not in span");
  }
  if (!rest.coeffs.empty()) throw std::logic_error("not in span");
  return out;
}

RatFunc lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam, JackTable& table) {
  if (mu.weight() + nu.weight() != lam.weight()) throw std::invalid_argument("weight mismatch");
  if (!lam.contains(mu) || !lam.contains(nu)) return RatFunc();
  SymFunc prod = multiply(table.jack(mu), table.jack(nu));
  auto e = expand_in_jack(prod, table);
  auto it = e.find(lam);
  return it == e.end() ? RatFunc() : it->second;
}

AlphaPoly stanley_coefficient(const Partition& mu, const Partition& nu, const Partition& lam, JackTable& table) {
  if (mu.weight() + nu.weight() != lam.weight()) throw std::invalid_argument("weight mismatch");
  if (!lam.contains(mu) || !lam.contains(nu)) return AlphaPoly();
  const auto& pl = table.jack_power(lam);
  const auto& pm = table.jack_power(mu);
  const auto& pn = table.jack_power(nu);
  AlphaPoly a = alpha();
  AlphaPoly sum;
  for (const auto& [r1, c1] : pm)
    for (const auto& [r2, c2] : pn) {
      std::vector<int> u = r1.parts();
      u.insert(u.end(), r2.parts().begin(), r2.parts().end());
      std::sort(u.begin(), u.end(), std::greater<int>());
      Partition rho(u);
      auto it = pl.find(rho);
      if (it == pl.end()) continue;
      sum += c1 * c2 * it->second * a.pow(rho.length()) * Rational(z_factor(rho));
    }
  if (!sum.has_integer_coeffs()) throw std::logic_error("non-polynomial Stanley coefficient");
  return sum;
}

AlphaPoly jnorm(const Partition& lam) {
  AlphaPoly p = MultiPoly::constant(1);
  for (auto b : lam.boxes()) p *= upper_hook(lam, b) * lower_hook(lam, b);
  return p;
}

Integer hook_product(const Partition& lam) {
  Integer h = 1;
  for (auto b : lam.boxes()) h *= arm(lam, b) + leg(lam, b) + 1;
  return h;
}

}  // namespace jacklr
