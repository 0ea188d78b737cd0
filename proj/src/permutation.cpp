#include "polyquot/permutation.hpp"

#include <numeric>
#include <sstream>

#include "polyquot/presentation.hpp"

namespace polyquot {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || hit[y]) throw Error("images do not form a bijection");
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  Permutation p;
  p.images_ = std::move(id);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (cyc[k] >= degree) throw Error("cycle point outside domain");
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& q) const {
  return q.inverse() * *this * q;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out << ',';
      out << x;
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace polyquot
