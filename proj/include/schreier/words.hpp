#ifndef SCHREIER_WORDS_HPP
#define SCHREIER_WORDS_HPP

#include <string>
#include <vector>

namespace schreier {

/// Symmetric alphabet symbol: 2i is generator i, 2i+1 its inverse.
using Sym = int;

inline Sym sym_inverse(Sym s) { return s ^ 1; }
inline int sym_generator(Sym s) { return s >> 1; }
inline bool sym_is_inverse(Sym s) { return s & 1; }

/// Freely reduced word in a free group.
struct GroupWord {
  std::vector<Sym> syms;

  bool operator==(const GroupWord& o) const = default;
  size_t length() const { return syms.size(); }
  bool empty() const { return syms.empty(); }
};

/// Free reduction of an arbitrary symbol sequence.
GroupWord reduce_word(const std::vector<Sym>& syms);
GroupWord inverse_word(const GroupWord& w);
/// Concatenate and reduce.
GroupWord concat(const GroupWord& a, const GroupWord& b);

/// Printable letter for generator index i: x, y, z, then a, b, c, ...
char generator_letter(int i);
/// Parse "xyX" style words (uppercase = inverse). Throws on unknown
/// letters or generator index >= rank; the result is freely reduced.
GroupWord parse_word(const std::string& text, int rank);
std::string format_word(const GroupWord& w);

int max_rank_supported();

}  // namespace schreier

#endif
