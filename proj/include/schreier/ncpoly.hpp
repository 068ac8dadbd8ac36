#ifndef SCHREIER_NCPOLY_HPP
#define SCHREIER_NCPOLY_HPP

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schreier/rational.hpp"
#include "schreier/series.hpp"

namespace schreier {

/// Word in the free algebra generators x_1..x_r, stored as 0-based indices.
using Word = std::vector<int>;

/// Monomial of a free module: coordinate index into the free basis u_1..u_s
/// followed by a word.
struct NCMonomial {
  int coord = 0;
  Word word;

  bool operator==(const NCMonomial& o) const = default;
};

/// Ambient free module: s coordinates over the rank-r free algebra.
/// coord_deg carries optional degree shifts per coordinate (all zero by
/// default, where the degree of a monomial is just its word length).
struct ModuleShape {
  int coords = 1;
  int rank = 1;
  std::vector<int> coord_deg;

  int coord_degree(int c) const {
    return coord_deg.empty() ? 0 : coord_deg.at(static_cast<size_t>(c));
  }
  int max_coord_degree() const {
    int m = 0;
    for (int d : coord_deg) m = std::max(m, d);
    return m;
  }
};

inline int monomial_degree(const ModuleShape& shape, const NCMonomial& m) {
  return shape.coord_degree(m.coord) + static_cast<int>(m.word.size());
}

/// Degree first, then coordinate, then position-wise on words where the
/// letter with the smaller index counts as the larger word. The leading
/// monomial of an element is the maximum in this order.
inline bool monomial_less(const ModuleShape& shape, const NCMonomial& a, const NCMonomial& b) {
  int da = monomial_degree(shape, a), db = monomial_degree(shape, b);
  if (da != db) return da < db;
  if (a.coord != b.coord) return a.coord < b.coord;
  for (size_t i = 0; i < a.word.size() && i < b.word.size(); ++i)
    if (a.word[i] != b.word[i]) return a.word[i] > b.word[i];
  return a.word.size() < b.word.size();
}

/// p is a coordinate-matching prefix of m.
inline bool monomial_prefix(const NCMonomial& p, const NCMonomial& m) {
  if (p.coord != m.coord || p.word.size() > m.word.size()) return false;
  return std::equal(p.word.begin(), p.word.end(), m.word.begin());
}

/// Element of the free module with coefficients in F. Terms are kept
/// sorted descending in the monomial order, so terms.front() is the
/// leading term; zero coefficients are never stored.
template <class F>
struct NCPoly {
  using Elem = typename F::Elem;
  std::vector<std::pair<NCMonomial, Elem>> terms;

  bool is_zero() const { return terms.empty(); }
  const NCMonomial& leading_monomial() const {
    if (terms.empty()) throw std::logic_error("zero element has no leading monomial");
    return terms.front().first;
  }
  const Elem& leading_coeff() const {
    if (terms.empty()) throw std::logic_error("zero element has no leading coefficient");
    return terms.front().second;
  }
  bool operator==(const NCPoly& o) const { return terms == o.terms; }
};

template <class F>
NCPoly<F> make_poly(const F& K, const ModuleShape& shape,
                    std::vector<std::pair<NCMonomial, typename F::Elem>> terms) {
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return monomial_less(shape, b.first, a.first);  // descending
  });
  NCPoly<F> out;
  for (auto& [m, c] : terms) {
    if (m.coord < 0 || m.coord >= shape.coords)
      throw std::invalid_argument("monomial coordinate out of range");
    for (int letter : m.word)
      if (letter < 0 || letter >= shape.rank)
        throw std::invalid_argument("monomial letter out of range");
    if (!out.terms.empty() && out.terms.back().first == m)
      out.terms.back().second = K.add(out.terms.back().second, c);
    else
      out.terms.emplace_back(std::move(m), c);
  }
  std::erase_if(out.terms, [&](const auto& t) { return K.is_zero(t.second); });
  return out;
}

/// f + c*g, merging the two sorted term lists.
template <class F>
NCPoly<F> axpy(const F& K, const ModuleShape& shape, const NCPoly<F>& f,
               const typename F::Elem& c, const NCPoly<F>& g) {
  NCPoly<F> out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() || j < g.terms.size()) {
    bool take_f;
    if (i == f.terms.size())
      take_f = false;
    else if (j == g.terms.size())
      take_f = true;
    else if (f.terms[i].first == g.terms[j].first) {
      auto coeff = K.add(f.terms[i].second, K.mul(c, g.terms[j].second));
      if (!K.is_zero(coeff)) out.terms.emplace_back(f.terms[i].first, coeff);
      ++i, ++j;
      continue;
    } else {
      take_f = monomial_less(shape, g.terms[j].first, f.terms[i].first);
    }
    if (take_f)
      out.terms.push_back(f.terms[i++]);
    else {
      auto coeff = K.mul(c, g.terms[j].second);
      if (!K.is_zero(coeff)) out.terms.emplace_back(g.terms[j].first, coeff);
      ++j;
    }
  }
  return out;
}

template <class F>
NCPoly<F> poly_add(const F& K, const ModuleShape& shape, const NCPoly<F>& f, const NCPoly<F>& g) {
  return axpy(K, shape, f, K.one(), g);
}

template <class F>
NCPoly<F> poly_scale(const F& K, const NCPoly<F>& f, const typename F::Elem& c) {
  NCPoly<F> out;
  if (K.is_zero(c)) return out;
  out.terms.reserve(f.terms.size());
  for (const auto& [m, coeff] : f.terms) out.terms.emplace_back(m, K.mul(coeff, c));
  return out;
}

/// Right multiplication by a word: append w to every monomial. The order
/// is multiplicative, so sortedness is preserved.
template <class F>
NCPoly<F> shift_right(const NCPoly<F>& f, const Word& w) {
  NCPoly<F> out = f;
  for (auto& [m, c] : out.terms) m.word.insert(m.word.end(), w.begin(), w.end());
  return out;
}

/// f * p for an algebra element p (an NCPoly over a rank-1 coordinate
/// space whose coord is ignored); used to recombine tracked reductions.
template <class F>
NCPoly<F> poly_mul_algebra(const F& K, const ModuleShape& shape, const NCPoly<F>& f,
                           const NCPoly<F>& p) {
  NCPoly<F> acc;
  for (const auto& [m, c] : p.terms) acc = axpy(K, shape, acc, c, shift_right(f, m.word));
  return acc;
}

/// Free basis of a submodule: monic elements with pairwise
/// prefix-incomparable leading monomials, each fully reduced against the
/// others, sorted ascending by leading monomial.
template <class F>
struct PrefixBasis {
  std::vector<NCPoly<F>> elems;

  bool empty() const { return elems.empty(); }
  size_t size() const { return elems.size(); }
};

namespace ncdetail {

/// Trie over the leading monomials of a basis, one root per coordinate;
/// matching a monomial returns the unique basis element whose leading
/// monomial is a prefix, if any.
struct LmIndex {
  int rank = 1;
  std::vector<std::vector<int>> child;  // flattened per coord: node*rank+letter
  std::vector<std::vector<int>> hit;    // basis index ending at node, or -1

  template <class F>
  LmIndex(const ModuleShape& shape, const std::vector<NCPoly<F>>& elems) : rank(shape.rank) {
    child.resize(shape.coords);
    hit.resize(shape.coords);
    for (int c = 0; c < shape.coords; ++c) add_node(c);
    for (size_t i = 0; i < elems.size(); ++i) {
      const NCMonomial& lm = elems[i].leading_monomial();
      int node = 0;
      for (int letter : lm.word) {
        size_t idx = static_cast<size_t>(node) * rank + letter;
        if (child[lm.coord][idx] < 0) {
          int fresh = add_node(lm.coord);  // may reallocate child[coord]
          child[lm.coord][idx] = fresh;
        }
        node = child[lm.coord][idx];
      }
      hit[lm.coord][node] = static_cast<int>(i);
    }
  }

  int add_node(int coord) {
    child[coord].insert(child[coord].end(), rank, -1);
    hit[coord].push_back(-1);
    return static_cast<int>(hit[coord].size()) - 1;
  }

  /// First basis element whose LM is a prefix of m; returns (index, split).
  std::pair<int, int> match(const NCMonomial& m) const {
    int node = 0;
    if (hit[m.coord][0] >= 0) return {hit[m.coord][0], 0};
    for (size_t k = 0; k < m.word.size(); ++k) {
      node = child[m.coord][static_cast<size_t>(node) * rank + m.word[k]];
      if (node < 0) return {-1, 0};
      if (hit[m.coord][node] >= 0) return {hit[m.coord][node], static_cast<int>(k) + 1};
    }
    return {-1, 0};
  }
};

}  // namespace ncdetail

/// Normal form of f against a prefix basis: no monomial of the result has
/// any basis leading monomial as a coordinate-matching prefix, and
/// f - result lies in the submodule generated by the basis.
template <class F>
NCPoly<F> reduce(const F& K, const ModuleShape& shape, NCPoly<F> f, const PrefixBasis<F>& basis) {
  if (basis.empty()) return f;
  ncdetail::LmIndex index(shape, basis.elems);
  while (true) {
    int term_idx = -1, basis_idx = -1, split = 0;
    for (size_t i = 0; i < f.terms.size(); ++i) {
      auto [bi, sp] = index.match(f.terms[i].first);
      if (bi >= 0) {
        term_idx = static_cast<int>(i);
        basis_idx = bi;
        split = sp;
        break;  // terms are sorted, so this is the largest reducible one
      }
    }
    if (term_idx < 0) return f;
    const NCMonomial& m = f.terms[term_idx].first;
    Word suffix(m.word.begin() + split, m.word.end());
    auto coeff = K.neg(f.terms[term_idx].second);
    f = axpy(K, shape, f, coeff, shift_right(basis.elems[basis_idx], suffix));
  }
}

/// Interreduction workspace element: the polynomial plus its expression in
/// terms of the original generators (one algebra element per input).
template <class F>
struct TrackedPoly {
  NCPoly<F> value;
  std::vector<NCPoly<F>> rep;
};

template <class F>
struct TrackedBasis {
  PrefixBasis<F> basis;
  std::vector<std::vector<NCPoly<F>>> reps;  // reps[i] expresses basis.elems[i]
};

/// Interreduce a generating list into the free prefix basis of the
/// submodule it generates, tracking how each output is built from the
/// inputs. Deterministic: pending elements are processed smallest leading
/// monomial first.
template <class F>
TrackedBasis<F> interreduce_tracked(const F& K, const ModuleShape& shape,
                                    const std::vector<NCPoly<F>>& gens) {
  ModuleShape algebra{1, shape.rank, {}};
  std::vector<TrackedPoly<F>> pending;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    TrackedPoly<F> t;
    t.value = gens[i];
    t.rep.assign(gens.size(), NCPoly<F>{});
    t.rep[i] = make_poly(K, algebra, {{NCMonomial{0, {}}, K.one()}});
    pending.push_back(std::move(t));
  }

  std::vector<TrackedPoly<F>> accepted;
  auto reduce_against_accepted = [&](TrackedPoly<F> t) {
    // mirror every reduction step on the representation
    while (true) {
      int term_idx = -1, basis_idx = -1, split = 0;
      for (size_t i = 0; i < t.value.terms.size() && term_idx < 0; ++i)
        for (size_t bidx = 0; bidx < accepted.size(); ++bidx)
          if (monomial_prefix(accepted[bidx].value.leading_monomial(), t.value.terms[i].first)) {
            term_idx = static_cast<int>(i);
            basis_idx = static_cast<int>(bidx);
            split = static_cast<int>(accepted[bidx].value.leading_monomial().word.size());
            break;
          }
      if (term_idx < 0) return t;
      const NCMonomial& m = t.value.terms[term_idx].first;
      Word suffix(m.word.begin() + split, m.word.end());
      auto c = K.neg(t.value.terms[term_idx].second);
      const TrackedPoly<F>& g = accepted[basis_idx];
      t.value = axpy(K, shape, t.value, c, shift_right(g.value, suffix));
      for (size_t k = 0; k < t.rep.size(); ++k)
        t.rep[k] = axpy(K, algebra, t.rep[k], c, shift_right(g.rep[k], suffix));
    }
  };

  while (!pending.empty()) {
    // smallest leading monomial first; ties resolved on the full monomial
    // sequence so the outcome never depends on container order
    size_t best = 0;
    for (size_t i = 1; i < pending.size(); ++i) {
      const auto& a = pending[i].value;
      const auto& b = pending[best].value;
      bool less = false;
      for (size_t k = 0; k < std::min(a.terms.size(), b.terms.size()); ++k) {
        if (a.terms[k].first == b.terms[k].first) continue;
        less = monomial_less(shape, a.terms[k].first, b.terms[k].first);
        goto decided;
      }
      less = a.terms.size() < b.terms.size();
    decided:
      if (less) best = i;
    }
    TrackedPoly<F> t = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<long>(best));

    t = reduce_against_accepted(std::move(t));
    if (t.value.is_zero()) continue;
    auto inv = K.inv(t.value.leading_coeff());
    t.value = poly_scale(K, t.value, inv);
    for (auto& r : t.rep) r = poly_scale(K, r, inv);

    // anything the new leading monomial can rewrite goes back to pending
    const NCMonomial& lm = t.value.leading_monomial();
    for (size_t i = accepted.size(); i-- > 0;) {
      bool touched = false;
      for (const auto& [m, c] : accepted[i].value.terms)
        if (monomial_prefix(lm, m)) { touched = true; break; }
      if (touched) {
        pending.push_back(std::move(accepted[i]));
        accepted.erase(accepted.begin() + static_cast<long>(i));
      }
    }
    accepted.push_back(std::move(t));
  }

  std::sort(accepted.begin(), accepted.end(), [&](const TrackedPoly<F>& a, const TrackedPoly<F>& b) {
    return monomial_less(shape, a.value.leading_monomial(), b.value.leading_monomial());
  });
  TrackedBasis<F> out;
  for (auto& t : accepted) {
    out.basis.elems.push_back(std::move(t.value));
    out.reps.push_back(std::move(t.rep));
  }
  return out;
}

template <class F>
PrefixBasis<F> interreduce(const F& K, const ModuleShape& shape,
                           const std::vector<NCPoly<F>>& gens) {
  return interreduce_tracked(K, shape, gens).basis;
}

/// Degree census of the normal monomials (those with no basis leading
/// monomial as a prefix): the Hilbert series of M = F/N. Counted by
/// dynamic programming on the leading-monomial trie and cross-checked by
/// brute-force enumeration for degrees <= min(cap, 8).
template <class F>
TruncSeries module_hilbert(const F& K, const ModuleShape& shape, const PrefixBasis<F>& basis,
                           int cap) {
  (void)K;
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  ncdetail::LmIndex index(shape, basis.elems);
  std::vector<long long> census(cap + 1, 0);

  for (int c = 0; c < shape.coords; ++c) {
    int shift = shape.coord_degree(c);
    if (shift > cap) continue;
    if (index.hit[c][0] >= 0) continue;  // the bare coordinate is a leading monomial
    int nodes = static_cast<int>(index.hit[c].size());
    std::vector<long long> alive(nodes, 0);
    alive[0] = 1;
    long long free_count = 0;
    for (int len = 0; shift + len <= cap; ++len) {
      long long total = free_count;
      for (int n = 0; n < nodes; ++n) total += alive[n];
      census[shift + len] += total;
      std::vector<long long> next(nodes, 0);
      long long next_free = free_count * shape.rank;
      for (int n = 0; n < nodes; ++n) {
        if (alive[n] == 0) continue;
        for (int letter = 0; letter < shape.rank; ++letter) {
          int ch = index.child[c][static_cast<size_t>(n) * shape.rank + letter];
          if (ch < 0)
            next_free += alive[n];
          else if (index.hit[c][ch] < 0)
            next[ch] += alive[n];
          // stepping onto a leading monomial kills the branch
        }
      }
      alive = std::move(next);
      free_count = next_free;
    }
  }

  // independent brute force over all monomials of small degree
  int check_cap = std::min(cap, 8);
  std::vector<long long> brute(check_cap + 1, 0);
  for (int c = 0; c < shape.coords; ++c) {
    int shift = shape.coord_degree(c);
    if (shift > check_cap) continue;
    Word w;
    auto normal = [&](const Word& word) {
      NCMonomial m{c, word};
      for (const auto& e : basis.elems)
        if (monomial_prefix(e.leading_monomial(), m)) return false;
      return true;
    };
    std::vector<Word> frontier{w};
    for (int len = 0; shift + len <= check_cap; ++len) {
      std::vector<Word> next;
      for (const Word& word : frontier) {
        if (normal(word)) brute[shift + len] += 1;
        if (shift + len < check_cap)
          for (int letter = 0; letter < shape.rank; ++letter) {
            Word ext = word;
            ext.push_back(letter);
            next.push_back(std::move(ext));
          }
      }
      frontier = std::move(next);
    }
  }
  for (int n = 0; n <= check_cap; ++n)
    if (census[n] != brute[n])
      throw std::logic_error("normal-monomial DP disagrees with brute force at degree " +
                             std::to_string(n));

  std::vector<Rat> coeffs(cap + 1);
  for (int n = 0; n <= cap; ++n) coeffs[n] = make_rat(static_cast<long>(census[n]));
  return TruncSeries(cap, coeffs);
}

/// Degree census of a basis, degrees taken from leading monomials.
template <class F>
TruncSeries basis_census(const ModuleShape& shape, const PrefixBasis<F>& basis, int cap) {
  std::vector<Rat> c(cap + 1, Rat(0));
  for (const auto& e : basis.elems) {
    int d = monomial_degree(shape, e.leading_monomial());
    if (d <= cap) c[d] += 1;
  }
  return TruncSeries(cap, c);
}

template <class F>
struct TpsfmReport {
  PrefixBasis<F> basis;
  TruncSeries basis_series{0};  // H(B,t)
  TruncSeries hilbert{0};       // H(M,t)
  TruncSeries rhs{0};           // H(M,t)(rt-1) + s
  bool series_ok = false;
  bool finite_dimensional = false;
  long long dim_m = -1;
  bool lewin_checked = false;
  bool lewin_ok = true;  // rk N = (r-1) dim M + rk M when dim M finite
  bool ok = false;
};

/// Verify H(B,t) = H(M,t)(rt-1) + s for the prefix basis of the submodule
/// generated by gens, and the Schreier-Lewin rank formula whenever M is
/// detected finite-dimensional.
template <class F>
TpsfmReport<F> verify_tpsfm_report(const F& K, const ModuleShape& shape,
                                   const std::vector<NCPoly<F>>& gens, int cap) {
  TpsfmReport<F> rep;
  rep.basis = interreduce(K, shape, gens);
  rep.basis_series = basis_census(shape, rep.basis, cap);
  rep.hilbert = module_hilbert(K, shape, rep.basis, cap);

  std::vector<Rat> rt(cap + 1, Rat(0));
  if (cap >= 1) rt[1] = make_rat(shape.rank);
  rt[0] -= 1;
  TruncSeries factor(cap, rt);
  rep.rhs = add(mul(rep.hilbert, factor),
                TruncSeries::constant(make_rat(shape.coords), cap));
  rep.series_ok = rep.basis_series == rep.rhs;

  // normal monomials are prefix-closed, so an empty level at degree >= all
  // coordinate shifts means the module is finite dimensional
  for (int n = shape.max_coord_degree(); n <= cap; ++n)
    if (sgn(rep.hilbert.coeff(n)) == 0) {
      rep.finite_dimensional = true;
      Rat total(0);
      for (int m = 0; m < n; ++m) total += rep.hilbert.coeff(m);
      rep.dim_m = total.get_num().get_si();
      break;
    }
  if (rep.finite_dimensional) {
    rep.lewin_checked = true;
    rep.lewin_ok = static_cast<long long>(rep.basis.size()) ==
                   static_cast<long long>(shape.rank - 1) * rep.dim_m + shape.coords;
  }
  rep.ok = rep.series_ok && rep.lewin_ok;
  return rep;
}

template <class F>
bool verify_tpsfm(const F& K, const ModuleShape& shape, const std::vector<NCPoly<F>>& gens,
                  int cap) {
  return verify_tpsfm_report(K, shape, gens, cap).ok;
}

// ---- text format: "2*u1.x1x2 - 1/3*u2.x2" ----------------------------------

template <class F>
NCPoly<F> parse_module_element(const F& K, const ModuleShape& shape, const std::string& text) {
  std::vector<std::pair<NCMonomial, typename F::Elem>> terms;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected a number at position " +
                                                  std::to_string(start) + " in '" + text + "'");
    return std::stol(text.substr(start, pos - start));
  };
  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    long sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos) +
                                  " in '" + text + "'");
    }
    first = false;
    Rat coeff(sign);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      long num = parse_int();
      long den = 1;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_int();
      }
      coeff = make_rat(sign * num, den);
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size() || text[pos] != 'u')
      throw std::invalid_argument("expected a coordinate 'u<k>' at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    ++pos;
    long coord = parse_int() - 1;
    if (coord < 0 || coord >= shape.coords)
      throw std::invalid_argument("coordinate u" + std::to_string(coord + 1) +
                                  " out of range in '" + text + "'");
    Word word;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && text[pos] == 'x') {
        ++pos;
        long letter = parse_int() - 1;
        if (letter < 0 || letter >= shape.rank)
          throw std::invalid_argument("letter x" + std::to_string(letter + 1) +
                                      " out of range in '" + text + "'");
        word.push_back(static_cast<int>(letter));
      }
    }
    auto num = coeff.get_num().get_si();
    auto den = coeff.get_den().get_si();
    auto elem = K.div(K.from_int(num), K.from_int(den));
    terms.push_back({NCMonomial{static_cast<int>(coord), std::move(word)}, elem});
    skip_ws();
  }
  return make_poly(K, shape, std::move(terms));
}

template <class F>
std::string format_module_element(const F& K, const NCPoly<F>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    const auto& [m, c] = f.terms[i];
    std::string coeff = K.to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (coeff != "1") {
      out += coeff;
      out += "*";
    }
    out += "u" + std::to_string(m.coord + 1);
    if (!m.word.empty()) {
      out += ".";
      for (int letter : m.word) out += "x" + std::to_string(letter + 1);
    }
  }
  return out;
}

}  // namespace schreier

#endif
