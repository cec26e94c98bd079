#include "jacklr/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace jacklr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> v;
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return Partition();
  std::stringstream ss(s);
  std::string tok;
  std::size_t pos = 0;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                  ": bad partition part '" + tok + "'");
    v.push_back(std::stoi(tok));
    pos += tok.size() + 1;
  }
  return Partition(v);
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 0; j < part(0); ++j) {
    int n = 0;
    while (n < length() && parts_[n] > j) ++n;
    c.push_back(n);
  }
  return Partition(c);
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back({i, j});
  return out;
}

Partition Partition::add(Box b) const {
  std::vector<int> v = parts_;
  if (b.row == length() && b.col == 0)
    v.push_back(1);
  else if (b.row < length() && b.col == parts_[b.row])
    v[b.row]++;
  else
    throw std::invalid_argument("box not addable");
  return Partition(v);
}

Partition Partition::remove(Box b) const {
  if (!contains(b) || b.col != parts_[b.row] - 1) throw std::invalid_argument("box not removable");
  std::vector<int> v = parts_;
  if (--v[b.row] == 0) v.pop_back();
  return Partition(v);
}

int arm(const Partition& lam, Box b) {
  if (!lam.contains(b)) throw std::out_of_range("box not in diagram");
  return lam.part(b.row) - b.col - 1;
}

int leg(const Partition& lam, Box b) {
  if (!lam.contains(b)) throw std::out_of_range("box not in diagram");
  int n = b.row;
  while (n + 1 < lam.length() && lam.part(n + 1) > b.col) ++n;
  return n - b.row;
}

AlphaPoly upper_hook(const Partition& lam, Box b) {
  int a = arm(lam, b), l = leg(lam, b);
  return alpha() * Rational(a + 1) + MultiPoly::from_int(l);
}

AlphaPoly lower_hook(const Partition& lam, Box b) {
  int a = arm(lam, b), l = leg(lam, b);
  return alpha() * Rational(a) + MultiPoly::from_int(l + 1);
}

std::vector<Box> addable_corners(const Partition& lam) {
  std::vector<Box> out;
  for (int i = 0; i <= lam.length(); ++i)
    if (i == 0 || lam.part(i) < lam.part(i - 1)) out.push_back({i, lam.part(i)});
  return out;
}

std::vector<Box> removable_corners(const Partition& lam) {
  std::vector<Box> out;
  for (int i = 0; i < lam.length(); ++i)
    if (lam.part(i) > lam.part(i + 1)) out.push_back({i, lam.part(i) - 1});
  return out;
}

namespace {
void gen(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

bool dominated_by(const Partition& mu, const Partition& lam) {
  int a = 0, b = 0;
  int len = std::max(mu.length(), lam.length());
  for (int i = 0; i < len; ++i) {
    a += mu.part(i);
    b += lam.part(i);
    if (a > b) return false;
  }
  return true;
}

PivotPair make_pivot(const Partition& kappa, Box a, Box b) {
  if (a.row < b.row) std::swap(a, b);
  if (a.row == b.row) throw std::invalid_argument("corners must differ");
  PivotPair p;
  p.base = kappa;
  p.corner_a = a;
  p.corner_b = b;
  p.lambda1 = kappa.add(a);
  p.lambda2 = kappa.add(b);
  p.pivot_box = {b.row, a.col};
  p.shared_hook = upper_hook(p.lambda1, p.pivot_box);
  if (p.shared_hook != lower_hook(p.lambda2, p.pivot_box))
    throw std::logic_error("pivot hook mismatch");
  return p;
}

std::vector<PivotPair> pivot_pairs(const Partition& kappa) {
  auto c = addable_corners(kappa);
  std::vector<PivotPair> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) out.push_back(make_pivot(kappa, c[j], c[i]));
  return out;
}

}  // namespace jacklr
