#include "polyquot/element_table.hpp"

#include <algorithm>
#include <queue>

namespace polyquot {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<ElementId> ElementSet::to_vector() const {
  std::vector<ElementId> out;
  for_each([&](ElementId e) { out.push_back(e); });
  return out;
}

bool ElementSet::lex_less(const ElementSet& o) const {
  // The first element where the sorted lists differ is the smallest element
  // of the symmetric difference; the list holding it is smaller, unless one
  // list is a prefix of the other.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ o.words_[i];
    if (!diff) continue;
    std::uint64_t low = diff & (~diff + 1);
    bool mine = (words_[i] & low) != 0;
    // If the other set has nothing beyond this element it is a prefix.
    const ElementSet& other = mine ? o : *this;
    bool other_has_more = (other.words_[i] & ~((low << 1) - 1)) != 0;
    for (std::size_t j = i + 1; !other_has_more && j < words_.size(); ++j)
      other_has_more = other.words_[j] != 0;
    return other_has_more ? mine : !mine;
  }
  return false;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

ElementTable::ElementTable(std::size_t size,
                           std::vector<std::vector<ElementId>> right_gen)
    : size_(size), right_gen_(std::move(right_gen)) {
  if (size_ == 0) throw Error("empty element table");
  if (size_ > 65536) throw Error("element table too large");
  // Spanning tree by BFS from the identity.
  parent_.assign(size_, 0);
  parent_gen_.assign(size_, -1);
  std::vector<ElementId> bfs;
  bfs.reserve(size_);
  std::vector<bool> seen(size_, false);
  seen[0] = true;
  bfs.push_back(0);
  for (std::size_t k = 0; k < bfs.size(); ++k) {
    ElementId e = bfs[k];
    for (std::size_t i = 0; i < right_gen_.size(); ++i) {
      ElementId f = right_gen_[i][e];
      if (!seen[f]) {
        seen[f] = true;
        parent_[f] = e;
        parent_gen_[f] = static_cast<int>(i);
        bfs.push_back(f);
      }
    }
  }
  if (bfs.size() != size_) throw Error("generators do not reach every element");

  mult_.assign(size_ * size_, 0);
  for (std::size_t a = 0; a < size_; ++a) mult_[a * size_] = static_cast<std::uint16_t>(a);
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    ElementId b = bfs[k];
    const auto& col = right_gen_[static_cast<std::size_t>(parent_gen_[b])];
    ElementId pb = parent_[b];
    for (std::size_t a = 0; a < size_; ++a) {
      mult_[a * size_ + b] = col[mult_[a * size_ + pb]];
    }
  }
  inverse_.assign(size_, 0);
  for (std::size_t a = 0; a < size_; ++a) {
    const std::uint16_t* row = &mult_[a * size_];
    for (std::size_t b = 0; b < size_; ++b) {
      if (row[b] == 0) {
        inverse_[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }
  orders_.assign(size_, 0);
  for (std::size_t a = 0; a < size_; ++a) {
    std::uint32_t n = 1;
    for (ElementId x = static_cast<ElementId>(a); x != 0; x = mul(x, static_cast<ElementId>(a)))
      ++n;
    orders_[a] = n;
  }
}

Word ElementTable::word(ElementId a) const {
  Word w;
  while (a != 0) {
    w.push_back(parent_gen_[a]);
    a = parent_[a];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

ElementId ElementTable::evaluate(const Word& w) const {
  ElementId e = 0;
  for (Generator g : w) e = times_generator(e, g);
  return e;
}

ElementSet ElementTable::all() const {
  ElementSet s(size_);
  for (std::size_t i = 0; i < size_; ++i) s.insert(static_cast<ElementId>(i));
  return s;
}

}  // namespace polyquot
