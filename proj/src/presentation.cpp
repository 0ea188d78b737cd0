#include "polyquot/presentation.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace polyquot {

void Presentation::validate() const {
  if (rank < 0) throw Error("presentation rank must be non-negative");
  for (const Word& r : relators) {
    for (Generator g : r) {
      if (g < 0 || g >= rank) {
        throw Error("relator " + format_word(r) + " uses generator " +
                    std::to_string(g) + " outside rank " +
                    std::to_string(rank));
      }
    }
  }
}

Word power(const Word& w, int exponent) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(std::max(exponent, 0)));
  for (int k = 0; k < exponent; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word shifted(const Word& w, int offset) {
  Word out = w;
  for (Generator& g : out) g += offset;
  return out;
}

Presentation parse_presentation(std::istream& in) {
  Presentation pres;
  bool have_rank = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    auto fail = [&](const std::string& what) {
      throw Error("presentation line " + std::to_string(line_no) + ": " + what);
    };
    if (keyword == "rank") {
      if (have_rank) fail("duplicate rank");
      if (!(fields >> pres.rank) || pres.rank < 0) fail("bad rank");
      have_rank = true;
    } else if (keyword == "rel") {
      if (!have_rank) fail("rel before rank");
      Word w;
      std::string tok;
      while (fields >> tok) {
        try {
          std::size_t used = 0;
          int g = std::stoi(tok, &used);
          if (used != tok.size()) fail("bad generator '" + tok + "'");
          w.push_back(g);
        } catch (const std::logic_error&) {
          fail("bad generator '" + tok + "'");
        }
      }
      if (w.empty()) fail("empty relator");
      pres.relators.push_back(std::move(w));
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (keyword == "rank" && (fields >> extra)) fail("trailing tokens");
  }
  if (!have_rank) throw Error("presentation has no rank line");
  pres.validate();
  return pres;
}

Presentation parse_presentation_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_presentation(in);
}

std::string format_presentation(const Presentation& pres,
                                std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "rank " << pres.rank << '\n';
  for (const Word& r : pres.relators) {
    out << "rel";
    for (Generator g : r) out << ' ' << g;
    out << '\n';
  }
  return out.str();
}

std::string format_word(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out + ")";
}

}  // namespace polyquot
