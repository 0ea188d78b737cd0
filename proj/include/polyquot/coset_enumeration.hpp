#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyquot/presentation.hpp"

namespace polyquot {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class EnumerationStatus { closed, exceeded_limit };

/// Coset table over involutive generators. Cosets are stored 0-based (coset 0
/// is the subgroup itself); the printed form numbers them from 1. Cosets are
/// numbered in order of first definition.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(Presentation pres, EnumerationStatus status, std::size_t cosets,
             std::vector<std::int32_t> entries, std::size_t peak);

  const Presentation& presentation() const { return pres_; }
  int rank() const { return pres_.rank; }
  EnumerationStatus status() const { return status_; }
  bool closed() const { return status_ == EnumerationStatus::closed; }
  std::size_t coset_count() const { return cosets_; }
  /// Largest number of simultaneously live cosets during enumeration.
  std::size_t peak_cosets() const { return peak_; }

  /// -1 when undefined (only possible in a non-closed table).
  std::int32_t image(std::size_t coset, Generator g) const {
    return entries_[coset * static_cast<std::size_t>(pres_.rank) +
                    static_cast<std::size_t>(g)];
  }
  std::int32_t trace(std::size_t coset, const Word& w) const;

 private:
  Presentation pres_;
  EnumerationStatus status_ = EnumerationStatus::exceeded_limit;
  std::size_t cosets_ = 0;
  std::vector<std::int32_t> entries_;
  std::size_t peak_ = 0;
};

CosetTable coset_enumeration(const Presentation& pres,
                             std::span<const Word> subgroup_words,
                             std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace polyquot
