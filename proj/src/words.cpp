#include "schreier/words.hpp"

#include <cctype>
#include <stdexcept>

namespace schreier {

namespace {
// x,y,z first to match the usual convention for small ranks
constexpr char kLetters[] = "xyzabcdefghijklmnopqrstuvw";
constexpr int kMaxRank = sizeof(kLetters) - 1;
}  // namespace

int max_rank_supported() { return kMaxRank; }

GroupWord reduce_word(const std::vector<Sym>& syms) {
  GroupWord out;
  out.syms.reserve(syms.size());
  for (Sym s : syms) {
    if (!out.syms.empty() && out.syms.back() == sym_inverse(s))
      out.syms.pop_back();
    else
      out.syms.push_back(s);
  }
  return out;
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  out.syms.reserve(w.syms.size());
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it)
    out.syms.push_back(sym_inverse(*it));
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  std::vector<Sym> all = a.syms;
  all.insert(all.end(), b.syms.begin(), b.syms.end());
  return reduce_word(all);
}

char generator_letter(int i) {
  if (i < 0 || i >= kMaxRank) throw std::out_of_range("generator index out of range");
  return kLetters[i];
}

GroupWord parse_word(const std::string& text, int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("rank must be between 1 and " + std::to_string(kMaxRank));
  std::vector<Sym> syms;
  for (size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int idx = -1;
    for (int i = 0; i < rank; ++i)
      if (kLetters[i] == lower) { idx = i; break; }
    if (idx < 0)
      throw std::invalid_argument("unknown letter '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " for rank " + std::to_string(rank));
    syms.push_back(2 * idx + (inverse ? 1 : 0));
  }
  return reduce_word(syms);
}

std::string format_word(const GroupWord& w) {
  std::string out;
  for (Sym s : w.syms) {
    char c = generator_letter(sym_generator(s));
    out += sym_is_inverse(s) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
  }
  return out;
}

}  // namespace schreier
