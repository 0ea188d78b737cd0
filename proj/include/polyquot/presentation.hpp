#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyquot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Generator = int;
using Word = std::vector<Generator>;

/// A group generated by `rank` involutions s_0..s_{rank-1}. The relators
/// s_i s_i are implicit and never stored.
struct Presentation {
  int rank = 0;
  std::vector<Word> relators;

  /// Throws Error if a relator mentions a generator outside [0, rank).
  void validate() const;

  bool operator==(const Presentation&) const = default;
};

Word power(const Word& w, int exponent);
Word concat(const Word& a, const Word& b);
/// Inverse of a word over involutions is its reversal.
Word inverse(const Word& w);
/// Shifts every generator index by `offset`.
Word shifted(const Word& w, int offset);

/// Text format: `rank n` then one `rel i j k ...` per relator; `#` starts a
/// comment.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(std::string_view text);
std::string format_presentation(const Presentation& pres,
                                std::string_view comment = {});

std::string format_word(const Word& w);

}  // namespace polyquot
