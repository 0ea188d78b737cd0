#include "polyquot/coset_enumeration.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace polyquot {

CosetTable::CosetTable(Presentation pres, EnumerationStatus status,
                       std::size_t cosets, std::vector<std::int32_t> entries,
                       std::size_t peak)
    : pres_(std::move(pres)),
      status_(status),
      cosets_(cosets),
      entries_(std::move(entries)),
      peak_(peak) {}

std::int32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  auto c = static_cast<std::int32_t>(coset);
  for (Generator g : w) {
    if (c < 0) return -1;
    c = image(static_cast<std::size_t>(c), g);
  }
  return c;
}

namespace {

using Coset = std::int32_t;
constexpr Coset kUndefined = -1;

// Felsch enumeration over involutive generators, so every column is its own
// inverse column and an entry c.g = d always comes with d.g = c.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::size_t max_cosets)
      : rank_(pres.rank), max_cosets_(max_cosets) {
    std::set<Word> seen;
    by_first_.resize(static_cast<std::size_t>(rank_));
    for (const Word& rel : pres.relators) {
      if (rel.empty()) continue;
      for (const Word& base : {rel, inverse(rel)}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          Word rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
          rot.insert(rot.end(), base.begin(),
                     base.begin() + static_cast<std::ptrdiff_t>(k));
          if (seen.insert(rot).second) {
            by_first_[static_cast<std::size_t>(rot.front())].push_back(rot);
          }
        }
      }
      relators_.push_back(rel);
    }
    new_coset();
  }

  bool run(std::span<const Word> subgroup_words) {
    if (rank_ == 0) return true;
    for (const Word& w : subgroup_words) {
      if (!scan_and_define(0, w)) return false;
      process_deductions();
    }
    std::size_t scan_pos = 0;
    while (true) {
      if (alive_.size() >= 2 * max_cosets_ && live_ < alive_.size()) {
        compact();
        scan_pos = 0;
      }
      // First live coset with an undefined entry.
      bool defined = false;
      for (; scan_pos < alive_.size() && !defined; ++scan_pos) {
        if (!is_live(static_cast<Coset>(scan_pos))) continue;
        for (int g = 0; g < rank_; ++g) {
          if (at(static_cast<Coset>(scan_pos), g) == kUndefined) {
            if (!define(static_cast<Coset>(scan_pos), g)) return false;
            process_deductions();
            defined = true;
            break;
          }
        }
        if (defined) break;
      }
      if (defined) continue;
      // Table complete; a full relator pass catches anything the deduction
      // stack missed across coincidences.
      auto pass = verify_pass(subgroup_words);
      if (pass == Pass::over_budget) return false;
      scan_pos = first_incomplete();
      if (pass == Pass::clean && scan_pos == alive_.size()) return true;
    }
  }

  CosetTable finish(const Presentation& pres, bool closed) {
    std::vector<Coset> renumber(alive_.size(), kUndefined);
    Coset next = 0;
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      if (is_live(static_cast<Coset>(c))) renumber[c] = next++;
    }
    std::vector<std::int32_t> out(static_cast<std::size_t>(next) *
                                  static_cast<std::size_t>(rank_));
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      if (renumber[c] == kUndefined) continue;
      for (int g = 0; g < rank_; ++g) {
        Coset d = at(static_cast<Coset>(c), g);
        out[static_cast<std::size_t>(renumber[c]) * static_cast<std::size_t>(rank_) +
            static_cast<std::size_t>(g)] =
            d == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(rep(d))];
      }
    }
    return CosetTable(pres,
                      closed ? EnumerationStatus::closed
                             : EnumerationStatus::exceeded_limit,
                      static_cast<std::size_t>(next), std::move(out), peak_);
  }

 private:
  Coset& at(Coset c, int g) {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(rank_) +
                  static_cast<std::size_t>(g)];
  }
  bool is_live(Coset c) const { return alive_[static_cast<std::size_t>(c)]; }

  Coset rep(Coset c) {
    Coset root = c;
    while (forward_[static_cast<std::size_t>(root)] != root)
      root = forward_[static_cast<std::size_t>(root)];
    while (forward_[static_cast<std::size_t>(c)] != root) {
      Coset up = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = root;
      c = up;
    }
    return root;
  }

  Coset new_coset() {
    auto c = static_cast<Coset>(alive_.size());
    alive_.push_back(true);
    forward_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(rank_), kUndefined);
    ++live_;
    peak_ = std::max(peak_, live_);
    return c;
  }

  // Returns kUndefined when the live budget is spent.
  Coset allocate() {
    if (live_ >= max_cosets_) return kUndefined;
    return new_coset();
  }

  void compact() {
    std::vector<Coset> renumber(alive_.size(), kUndefined);
    Coset next = 0;
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      if (alive_[c]) renumber[c] = next++;
    }
    std::vector<Coset> fresh(static_cast<std::size_t>(next) *
                             static_cast<std::size_t>(rank_));
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      if (!alive_[c]) continue;
      for (int g = 0; g < rank_; ++g) {
        Coset d = at(static_cast<Coset>(c), g);
        fresh[static_cast<std::size_t>(renumber[c]) * static_cast<std::size_t>(rank_) +
              static_cast<std::size_t>(g)] =
            d == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(fresh);
    alive_.assign(static_cast<std::size_t>(next), true);
    forward_.resize(static_cast<std::size_t>(next));
    for (Coset c = 0; c < next; ++c) forward_[static_cast<std::size_t>(c)] = c;
    deductions_.clear();
  }

  bool define(Coset c, int g) {
    Coset d = allocate();
    if (d == kUndefined) return false;
    at(c, g) = d;
    at(d, g) = c;
    deductions_.emplace_back(c, g);
    deductions_.emplace_back(d, g);
    return true;
  }

  void deduce(Coset a, int g, Coset b) {
    at(a, g) = b;
    at(b, g) = a;
    deductions_.emplace_back(a, g);
    if (a != b) deductions_.emplace_back(b, g);
  }

  // Scans `w` cyclically from c back to c, filling a single gap or
  // recording a coincidence.
  void scan(Coset c, const Word& w) {
    const std::size_t len = w.size();
    Coset f = c;
    std::size_t i = 0;
    while (i < len) {
      Coset n = at(f, w[i]);
      if (n == kUndefined) break;
      f = n;
      ++i;
    }
    if (i == len) {
      if (f != c) coincidence(f, c);
      return;
    }
    Coset b = c;
    std::size_t j = len;  // one past the next letter to read backwards
    while (j > i) {
      Coset n = at(b, w[j - 1]);
      if (n == kUndefined) break;
      b = n;
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      deduce(f, w[i], b);
    }
  }

  // HLT-style scan that defines new cosets until the word closes.
  bool scan_and_define(Coset c, const Word& w) {
    const std::size_t len = w.size();
    if (len == 0) return true;
    while (true) {
      c = rep(c);
      Coset f = c;
      std::size_t i = 0;
      while (i < len && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == len) {
        if (f != c) coincidence(f, c);
        return true;
      }
      Coset b = c;
      std::size_t j = len;
      while (j > i && at(b, w[j - 1]) != kUndefined) b = at(b, w[--j]);
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        deduce(f, w[i], b);
        return true;
      }
      if (!define(f, w[i])) return false;
      process_deductions();
      if (!is_live(c)) c = rep(c);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, g] = deductions_.back();
      deductions_.pop_back();
      if (!is_live(c)) continue;
      for (const Word& w : by_first_[static_cast<std::size_t>(g)]) {
        if (!is_live(c)) break;
        scan(c, w);
      }
    }
  }

  void merge(Coset k, Coset l, std::vector<Coset>& queue) {
    Coset a = rep(k);
    Coset b = rep(l);
    if (a == b) return;
    Coset keep = std::min(a, b);
    Coset drop = std::max(a, b);
    forward_[static_cast<std::size_t>(drop)] = keep;
    alive_[static_cast<std::size_t>(drop)] = false;
    --live_;
    queue.push_back(drop);
  }

  void coincidence(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Coset dead = queue[qi];
      for (int g = 0; g < rank_; ++g) {
        Coset d = at(dead, g);
        if (d == kUndefined) continue;
        at(dead, g) = kUndefined;
        if (at(d, g) == dead) at(d, g) = kUndefined;
        Coset mu = rep(dead);
        Coset nu = rep(d);
        if (at(mu, g) != kUndefined) {
          merge(nu, at(mu, g), queue);
        } else if (at(nu, g) != kUndefined) {
          merge(mu, at(nu, g), queue);
        } else {
          at(mu, g) = nu;
          at(nu, g) = mu;
          deductions_.emplace_back(mu, g);
          if (mu != nu) deductions_.emplace_back(nu, g);
        }
      }
    }
  }

  std::size_t first_incomplete() {
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      if (!alive_[c]) continue;
      for (int g = 0; g < rank_; ++g)
        if (at(static_cast<Coset>(c), g) == kUndefined) return c;
    }
    return alive_.size();
  }

  enum class Pass { clean, changed, over_budget };

  Pass verify_pass(std::span<const Word> subgroup_words) {
    const std::size_t before_live = live_;
    const std::size_t before_alloc = alive_.size();
    bool changed = false;
    for (const Word& w : subgroup_words) {
      if (!scan_and_define(0, w)) return Pass::over_budget;
    }
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      for (const Word& rel : relators_) {
        if (!alive_[c]) break;
        std::size_t before = deductions_.size();
        scan(static_cast<Coset>(c), rel);
        if (deductions_.size() != before) changed = true;
      }
    }
    process_deductions();
    if (changed || live_ != before_live || alive_.size() != before_alloc)
      return Pass::changed;
    return Pass::clean;
  }

  int rank_;
  std::size_t max_cosets_;
  std::vector<Coset> table_;
  std::vector<Coset> forward_;
  std::vector<bool> alive_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::vector<std::pair<Coset, int>> deductions_;
  std::vector<std::vector<Word>> by_first_;
  std::vector<Word> relators_;
};

}  // namespace

CosetTable coset_enumeration(const Presentation& pres,
                             std::span<const Word> subgroup_words,
                             std::size_t max_cosets) {
  pres.validate();
  if (max_cosets < 1) throw Error("max_cosets must be at least 1");
  for (const Word& w : subgroup_words) {
    for (Generator g : w) {
      if (g < 0 || g >= pres.rank) throw Error("subgroup word out of range");
    }
  }
  Enumerator e(pres, max_cosets);
  bool closed = e.run(subgroup_words);
  return e.finish(pres, closed);
}

}  // namespace polyquot
