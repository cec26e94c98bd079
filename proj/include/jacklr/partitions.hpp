// Integer partitions (English convention, 0-indexed boxes) and alpha-hooks.
#pragma once

#include "jacklr/exact.hpp"

#include <compare>
#include <string>
#include <vector>

namespace jacklr {

struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class Partition {
 public:
  Partition() = default;
  // throws on non-decreasing or non-positive parts
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition parse(const std::string& text);  // "3,2,1"; "" is empty
  std::string to_string() const;                    // same format

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  bool contains(Box b) const { return b.row >= 0 && b.col >= 0 && b.col < part(b.row); }
  bool contains(const Partition& mu) const;  // diagram inclusion
  Partition conjugate() const;
  std::vector<Box> boxes() const;  // row-major
  // adding/removing a box; throws if the result is not a partition
  Partition add(Box b) const;
  Partition remove(Box b) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

int arm(const Partition& lam, Box b);
int leg(const Partition& lam, Box b);
AlphaPoly upper_hook(const Partition& lam, Box b);  // a(arm+1)+leg
AlphaPoly lower_hook(const Partition& lam, Box b);  // a*arm+leg+1

std::vector<Box> addable_corners(const Partition& lam);   // increasing row
std::vector<Box> removable_corners(const Partition& lam); // increasing row

// all partitions of n, reverse-lex (largest first)
std::vector<Partition> enumerate_partitions(int n);
// dominance order mu <= lam (same weight)
bool dominated_by(const Partition& mu, const Partition& lam);

struct PivotPair {
  Partition base;
  Box corner_a;   // lower-left corner: row(a) > row(b)
  Box corner_b;
  Partition lambda1;  // base + a
  Partition lambda2;  // base + b
  Box pivot_box;      // (row b, col a)
  AlphaPoly shared_hook;
};

std::vector<PivotPair> pivot_pairs(const Partition& kappa);
PivotPair make_pivot(const Partition& kappa, Box a, Box b);

}  // namespace jacklr
