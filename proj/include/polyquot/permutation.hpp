#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polyquot {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}. Permutations act on the right:
/// x^(pq) = (x^p)^q, so `p * q` applies p first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);
  /// Product of transpositions/cycles given as point lists.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  /// q^-1 * this * q
  Permutation conjugated_by(const Permutation& q) const;
  std::uint64_t order() const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& rhs) const {
    return images_ <=> rhs.images_;
  }

  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace polyquot
