#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polyquot/presentation.hpp"

namespace polyquot {

using ElementId = std::uint32_t;

/// Subset of a finite group, as a bitset over element ids.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(ElementId e) const {
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }
  void insert(ElementId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(ElementId e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  std::size_t count() const;
  bool empty() const;

  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator|=(const ElementSet& o);
  bool is_subset_of(const ElementSet& o) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }
  std::vector<ElementId> to_vector() const;

  /// Lexicographic comparison of the sorted element lists.
  bool lex_less(const ElementSet& o) const;

  bool operator==(const ElementSet&) const = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Full multiplication table of a finite group with marked involutive
/// generators, for groups of order at most 65536. Element 0 is the identity; ids follow the lexicographic order
/// of the elements' permutation image arrays.
class ElementTable {
 public:
  /// `right_gen[i][e]` must be the id of e * s_i; `parent`/`parent_gen`
  /// describe a spanning tree rooted at the identity.
  ElementTable(std::size_t size, std::vector<std::vector<ElementId>> right_gen);

  std::size_t size() const { return size_; }
  int rank() const { return static_cast<int>(right_gen_.size()); }
  static constexpr ElementId identity() { return 0; }

  ElementId mul(ElementId a, ElementId b) const {
    return mult_[static_cast<std::size_t>(a) * size_ + b];
  }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// g^-1 a g
  ElementId conj(ElementId a, ElementId g) const { return mul(mul(inverse_[g], a), g); }
  ElementId times_generator(ElementId a, int i) const {
    return right_gen_[static_cast<std::size_t>(i)][a];
  }
  ElementId generator(int i) const { return right_gen_[static_cast<std::size_t>(i)][0]; }
  std::uint32_t order_of(ElementId a) const { return orders_[a]; }
  /// A shortest word over the marked generators representing `a`.
  Word word(ElementId a) const;
  ElementId evaluate(const Word& w) const;

  ElementSet empty_set() const { return ElementSet(size_); }
  ElementSet all() const;

 private:
  std::size_t size_;
  std::vector<std::vector<ElementId>> right_gen_;
  std::vector<std::uint16_t> mult_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<ElementId> parent_;
  std::vector<int> parent_gen_;
};

}  // namespace polyquot
