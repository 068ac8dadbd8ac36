#include "schreier/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schreier {

AlgWord reduce_alg_word(const AlgWord& w, AlgebraKind kind) {
  if (kind == AlgebraKind::FreeAssociative) return w;
  AlgWord out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

AlgWord parse_alg_word(const std::string& text, int rank, AlgebraKind kind) {
  AlgWord w;
  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 'x' && c != 'X')
      throw std::invalid_argument("expected x<k> or X<k> at position " + std::to_string(pos) +
                                  " in '" + text + "'");
    bool inverse = c == 'X';
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("missing generator index at position " + std::to_string(start) +
                                  " in '" + text + "'");
    int idx = std::stoi(text.substr(start, pos - start));
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("algebra generator x" + std::to_string(idx) +
                                  " out of range for rank " + std::to_string(rank));
    if (inverse && kind == AlgebraKind::FreeAssociative)
      throw std::invalid_argument("inverse letters need a free group algebra");
    w.push_back(inverse ? -idx : idx);
  }
  return reduce_alg_word(w, kind);
}

std::string format_alg_word(const AlgWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w)
    out += (letter > 0 ? "x" + std::to_string(letter) : "X" + std::to_string(-letter));
  return out;
}

namespace {

Relator canonicalize_relator(Relator rel, AlgebraKind kind) {
  for (PresTerm& t : rel) t.word = reduce_alg_word(t.word, kind);
  std::sort(rel.begin(), rel.end(), [](const PresTerm& a, const PresTerm& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.word < b.word;
  });
  Relator out;
  for (PresTerm& t : rel) {
    if (!out.empty() && out.back().gen == t.gen && out.back().word == t.word)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const PresTerm& t) { return sgn(t.coeff) == 0; });
  return out;
}

}  // namespace

Presentation make_presentation(AlgebraKind kind, int rank, std::vector<std::string> gen_names,
                               std::vector<Relator> relators) {
  if (rank < 1) throw std::invalid_argument("algebra rank must be >= 1");
  if (gen_names.empty()) throw std::invalid_argument("a presentation needs generators");
  std::set<std::string> seen;
  for (const auto& n : gen_names)
    if (!seen.insert(n).second)
      throw std::invalid_argument("generator name '" + n + "' repeats");
  Presentation pres{kind, rank, std::move(gen_names), {}};
  for (Relator& rel : relators) {
    for (const PresTerm& t : rel) {
      if (t.gen < 0 || t.gen >= pres.num_gens())
        throw std::invalid_argument("relator references a generator out of range");
      for (int letter : t.word) {
        if (letter == 0 || std::abs(letter) > rank)
          throw std::invalid_argument("relator word letter out of range");
        if (letter < 0 && kind == AlgebraKind::FreeAssociative)
          throw std::invalid_argument("inverse letters need a free group algebra");
      }
    }
    pres.relators.push_back(canonicalize_relator(std::move(rel), kind));
  }
  return pres;
}

bool AffineEntry::is_zero() const {
  if (sgn(c0) != 0) return false;
  for (const Rat& c : cz)
    if (sgn(c) != 0) return false;
  return true;
}

bool AffineEntry::is_constant() const {
  for (const Rat& c : cz)
    if (sgn(c) != 0) return false;
  return true;
}

std::string AffineEntry::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (sgn(c0) != 0) {
    os << c0.get_str();
    first = false;
  }
  for (size_t i = 0; i < cz.size(); ++i) {
    if (sgn(cz[i]) == 0) continue;
    if (!first) os << " + ";
    if (cz[i] != 1) os << cz[i].get_str() << "*";
    os << "z" << i + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool AffinePresentation::column_is_zero(int j) const {
  for (const auto& row : rows)
    if (!row[j].is_zero()) return false;
  return true;
}

bool AffinePresentation::column_is_constant(int j) const {
  for (const auto& row : rows)
    if (!row[j].is_constant()) return false;
  return true;
}

AffinePresentation higman_affinize(const Presentation& pres) {
  const int r = pres.rank;
  std::vector<std::string> names = pres.gen_names;
  std::vector<int> shifts(names.size(), 0);
  std::vector<Relator> rels = pres.relators;
  std::map<std::pair<int, int>, int> memo;  // (gen, first letter) -> new gen
  int fresh_counter = 0;
  std::set<std::string> used(names.begin(), names.end());

  auto fresh_name = [&] {
    std::string n;
    do {
      n = "w" + std::to_string(++fresh_counter);
    } while (used.count(n));
    used.insert(n);
    return n;
  };

  auto offending = [&](const PresTerm& t) {
    if (t.word.size() >= 2) return true;
    return t.word.size() == 1 && t.word[0] < 0;  // single inverse letter
  };

  while (true) {
    int ri = -1, ti = -1;
    for (size_t i = 0; i < rels.size() && ri < 0; ++i)
      for (size_t j = 0; j < rels[i].size(); ++j)
        if (offending(rels[i][j])) {
          ri = static_cast<int>(i);
          ti = static_cast<int>(j);
          break;
        }
    if (ri < 0) break;

    int g = rels[ri][ti].gen;
    int letter = rels[ri][ti].word[0];
    int ng;
    auto it = memo.find({g, letter});
    if (it != memo.end()) {
      ng = it->second;
    } else {
      ng = static_cast<int>(names.size());
      names.push_back(fresh_name());
      shifts.push_back(letter > 0 ? shifts[g] + 1 : std::max(0, shifts[g] - 1));
      memo[{g, letter}] = ng;
      Relator def;
      if (letter > 0) {
        // ng = g * x_letter
        def.push_back({ng, {}, Rat(1)});
        def.push_back({g, {letter}, Rat(-1)});
      } else {
        // g = ng * x_{-letter}, i.e. ng stands for g * x_{-letter}^{-1}
        def.push_back({ng, {-letter}, Rat(1)});
        def.push_back({g, {}, Rat(-1)});
      }
      rels.push_back(std::move(def));
    }

    // rewrite every occurrence g.(letter w) -> ng.w that is still offending
    for (Relator& rel : rels) {
      bool touched = false;
      for (PresTerm& t : rel)
        if (t.gen == g && !t.word.empty() && t.word[0] == letter && offending(t)) {
          t.gen = ng;
          t.word.erase(t.word.begin());
          touched = true;
        }
      if (touched) rel = canonicalize_relator(std::move(rel), pres.kind);
    }
  }

  AffinePresentation out;
  out.kind = pres.kind;
  out.rank = r;
  out.gen_names = names;
  out.gen_shift = shifts;
  out.added_gens = static_cast<int>(names.size()) - pres.num_gens();
  for (const Relator& rel : rels) {
    std::vector<AffineEntry> row(names.size(), AffineEntry{Rat(0), std::vector<Rat>(r, Rat(0))});
    for (const PresTerm& t : rel) {
      if (t.word.empty()) {
        row[t.gen].c0 += t.coeff;
      } else {
        int letter = t.word[0];
        if (t.word.size() != 1 || letter < 0)
          throw std::logic_error("linearization left a non-affine term");
        row[t.gen].cz[letter - 1] += t.coeff;
        if (pres.kind == AlgebraKind::FreeGroup) row[t.gen].c0 += t.coeff;  // x = z + 1
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

ModuleShape presentation_shape(const Presentation& pres) {
  if (pres.kind != AlgebraKind::FreeAssociative)
    throw std::invalid_argument("module arithmetic handles free associative algebras only");
  return ModuleShape{pres.num_gens(), pres.rank, {}};
}

std::vector<NCPoly<RationalField>> presentation_generators(const Presentation& pres) {
  ModuleShape shape = presentation_shape(pres);
  RationalField Q;
  std::vector<NCPoly<RationalField>> out;
  for (const Relator& rel : pres.relators) {
    std::vector<std::pair<NCMonomial, Rat>> terms;
    for (const PresTerm& t : rel) {
      Word w;
      for (int letter : t.word) w.push_back(letter - 1);
      terms.push_back({NCMonomial{t.gen, std::move(w)}, t.coeff});
    }
    out.push_back(make_poly(Q, shape, std::move(terms)));
  }
  return out;
}

ModuleShape affine_shape(const AffinePresentation& ap) {
  if (ap.kind != AlgebraKind::FreeAssociative)
    throw std::invalid_argument("module arithmetic handles free associative algebras only");
  return ModuleShape{ap.p(), ap.rank, ap.gen_shift};
}

std::vector<NCPoly<RationalField>> affine_generators(const AffinePresentation& ap) {
  ModuleShape shape = affine_shape(ap);
  RationalField Q;
  std::vector<NCPoly<RationalField>> out;
  for (const auto& row : ap.rows) {
    std::vector<std::pair<NCMonomial, Rat>> terms;
    for (int j = 0; j < ap.p(); ++j) {
      if (sgn(row[j].c0) != 0) terms.push_back({NCMonomial{j, {}}, row[j].c0});
      for (int i = 0; i < ap.rank; ++i)
        if (sgn(row[j].cz[i]) != 0) terms.push_back({NCMonomial{j, {i}}, row[j].cz[i]});
    }
    out.push_back(make_poly(Q, shape, std::move(terms)));
  }
  return out;
}

AffinizeCheck affinize_series_check(const Presentation& in, const AffinePresentation& out,
                                    int cap) {
  RationalField Q;
  AffinizeCheck chk;
  {
    ModuleShape shape = presentation_shape(in);
    auto basis = interreduce(Q, shape, presentation_generators(in));
    chk.input_series = module_hilbert(Q, shape, basis, cap);
  }
  {
    ModuleShape shape = affine_shape(out);
    auto basis = interreduce(Q, shape, affine_generators(out));
    chk.output_series = module_hilbert(Q, shape, basis, cap);
  }
  chk.ok = chk.input_series == chk.output_series;
  return chk;
}

namespace {

/// Column echelon workspace over the rationals: each stored vector is a
/// combination of original matrix columns, with the combination tracked.
struct Echelon {
  std::vector<std::vector<Rat>> vecs;
  std::vector<std::vector<std::pair<int, Rat>>> combos;
  std::vector<int> pivot_rows;

  /// Reduce d in place against the stored vectors; combo always receives
  /// the coefficients on the original columns that were subtracted. True
  /// when d vanishes (dependence found).
  bool try_reduce(std::vector<Rat>& d, std::vector<std::pair<int, Rat>>& combo) const {
    std::map<int, Rat> acc;
    for (size_t i = 0; i < vecs.size(); ++i) {
      Rat lead = d[pivot_rows[i]];
      if (sgn(lead) == 0) continue;
      Rat f = lead / vecs[i][pivot_rows[i]];
      for (size_t row = 0; row < d.size(); ++row) d[row] -= f * vecs[i][row];
      for (const auto& [col, c] : combos[i]) acc[col] += f * c;
    }
    for (auto& [col, c] : acc)
      if (sgn(c) != 0) combo.emplace_back(col, c);
    for (const Rat& v : d)
      if (sgn(v) != 0) return false;
    return true;
  }

  void add(std::vector<Rat> d, int source_col) {
    std::vector<std::pair<int, Rat>> combo;
    if (try_reduce(d, combo)) throw std::logic_error("adding a dependent column to the echelon");
    int pr = -1;
    for (size_t row = 0; row < d.size(); ++row)
      if (sgn(d[row]) != 0) { pr = static_cast<int>(row); break; }
    std::vector<std::pair<int, Rat>> expr{{source_col, Rat(1)}};
    for (const auto& [col, c] : combo) expr.emplace_back(col, -c);
    vecs.push_back(std::move(d));
    combos.push_back(std::move(expr));
    pivot_rows.push_back(pr);
  }
};

std::vector<Rat> constant_column(const AffinePresentation& ap, int j) {
  std::vector<Rat> d;
  d.reserve(ap.rows.size());
  for (const auto& row : ap.rows) d.push_back(row[j].c0);
  return d;
}

/// col_j -= sum combo[c] * col_c, returning the recording basis-change
/// matrix E with T_new = T_old * E.
std::vector<std::vector<Rat>> apply_column_ops(AffinePresentation& ap, int j,
                                               const std::vector<std::pair<int, Rat>>& combo) {
  int p = ap.p();
  std::vector<std::vector<Rat>> e(p, std::vector<Rat>(p, Rat(0)));
  for (int i = 0; i < p; ++i) e[i][i] = 1;
  for (const auto& [col, c] : combo) {
    e[col][j] -= c;
    for (auto& row : ap.rows) {
      row[j].c0 -= c * row[col].c0;
      for (int i = 0; i < ap.rank; ++i) row[j].cz[i] -= c * row[col].cz[i];
    }
  }
  return e;
}

void expand_column(AffinePresentation& ap, int j) {
  int r = ap.rank;
  std::string base = ap.gen_names[j];
  int shift = ap.gen_shift[j];
  ap.gen_names.erase(ap.gen_names.begin() + j);
  ap.gen_shift.erase(ap.gen_shift.begin() + j);
  for (int i = 1; i <= r; ++i) {
    ap.gen_names.push_back(base + "z" + std::to_string(i));
    ap.gen_shift.push_back(shift + 1);
  }
  for (auto& row : ap.rows) {
    AffineEntry old = row[j];
    row.erase(row.begin() + j);
    for (int i = 0; i < r; ++i)
      row.push_back(AffineEntry{old.cz[i], std::vector<Rat>(r, Rat(0))});
  }
}

}  // namespace

LargenessWitness largeness_witness(const AffinePresentation& ap) {
  if (ap.p() - ap.q() <= 0)
    throw std::invalid_argument("largeness procedure needs more generators than relations");
  LargenessWitness wit;
  wit.k = ap.q() / ap.rank + 1;
  AffinePresentation cur = ap;

  while (true) {
    int p = cur.p();
    Echelon ech;

    // constant columns first: a dependence among them is a zero column
    int success_col = -1;
    std::vector<std::pair<int, Rat>> combo;
    for (int j = 0; j < p && success_col < 0; ++j) {
      if (!cur.column_is_constant(j)) continue;
      std::vector<Rat> d = constant_column(cur, j);
      combo.clear();
      if (ech.try_reduce(d, combo))
        success_col = j;
      else
        ech.add(constant_column(cur, j), j);
    }

    int expand_col = -1;
    if (success_col < 0) {
      // constants independent: zero the constant part of some later column
      for (int j = 0; j < p && expand_col < 0; ++j) {
        if (cur.column_is_constant(j)) continue;
        std::vector<Rat> d = constant_column(cur, j);
        combo.clear();
        if (ech.try_reduce(d, combo))
          expand_col = j;
        else
          ech.add(constant_column(cur, j), j);
      }
      if (expand_col < 0)
        throw std::logic_error("no dependent column although p exceeds q");
    }

    int target = success_col >= 0 ? success_col : expand_col;
    WitnessStep step;
    step.basis_change = apply_column_ops(cur, target, combo);

    if (success_col >= 0 || cur.column_is_zero(target)) {
      step.expanded_column = -1;
      step.gen_names_after = cur.gen_names;
      wit.steps.push_back(std::move(step));
      wit.zero_column = target;
      wit.final_presentation = cur;
      wit.codim = static_cast<int>(wit.steps.size()) - 1;
      if (wit.codim > wit.k) throw std::logic_error("largeness procedure exceeded its bound");
      return wit;
    }

    step.expanded_column = target;
    expand_column(cur, target);
    step.gen_names_after = cur.gen_names;
    wit.steps.push_back(std::move(step));
    if (static_cast<int>(wit.steps.size()) > wit.k)
      throw std::logic_error("largeness procedure exceeded its bound");
  }
}

BoundLargeReport bound_large_example(int s, int r, int solveBound) {
  if (s < 1) throw std::invalid_argument("the example needs at least one generator");
  if (r <= 1) throw std::invalid_argument("the example needs rank r > 1");
  if (s > r) throw std::invalid_argument("the relator u_1 x_1 + ... + u_s x_s needs s <= r");

  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back("u" + std::to_string(i));
  Relator rel;
  for (int i = 0; i < s; ++i) rel.push_back({i, {i + 1}, Rat(1)});
  BoundLargeReport rep;
  rep.presentation =
      make_presentation(AlgebraKind::FreeAssociative, r, std::move(names), {std::move(rel)});
  if (s >= 2) rep.witness = largeness_witness(higman_affinize(rep.presentation));
  rep.solve_bound = solveBound;

  // the explicit free submodule N = <u1 x1,..,u1 xr, u2,..,us>
  {
    RationalField Q;
    ModuleShape shape{s, r, {}};
    std::vector<NCPoly<RationalField>> ngens;
    for (int i = 0; i < r; ++i)
      ngens.push_back(make_poly(Q, shape, {{NCMonomial{0, {i}}, Rat(1)}}));
    for (int j = 1; j < s; ++j)
      ngens.push_back(make_poly(Q, shape, {{NCMonomial{j, {}}, Rat(1)}}));
    auto basis = interreduce(Q, shape, ngens);
    rep.direct_rank = static_cast<long long>(basis.size());
    TruncSeries h = module_hilbert(Q, shape, basis, 2);
    Rat codim(0);
    for (int n = 0; n <= 2; ++n) codim += h.coeff(n);
    rep.direct_codim = codim.get_num().get_si();
    rep.direct_ok = rep.direct_codim == 1 && rep.direct_rank == r + s - 1;
  }

  // kernel of (b_1..b_s) -> sum b_i x_i on polynomials of degree <= bound:
  // independence of the columns means only the zero tuple maps to zero
  std::vector<Word> monomials{{}};
  std::map<Word, int> mono_index{{{}, 0}};
  for (size_t head = 0; head < monomials.size(); ++head) {
    Word w = monomials[head];
    if (static_cast<int>(w.size()) > solveBound) continue;
    for (int letter = 0; letter < r; ++letter) {
      Word ext = w;
      ext.push_back(letter);
      auto [it, inserted] = mono_index.emplace(ext, static_cast<int>(monomials.size()));
      if (inserted) monomials.push_back(ext);
    }
  }
  int unknowns = 0;
  std::vector<std::pair<int, Word>> vars;
  for (int i = 0; i < s; ++i)
    for (const Word& w : monomials)
      if (static_cast<int>(w.size()) <= solveBound) {
        vars.emplace_back(i, w);
        ++unknowns;
      }
  std::vector<std::vector<Rat>> m(monomials.size(), std::vector<Rat>(unknowns, Rat(0)));
  for (int col = 0; col < unknowns; ++col) {
    Word image = vars[col].second;
    image.push_back(vars[col].first);  // right multiplication by x_{i+1}
    m[mono_index.at(image)][col] = 1;
  }
  rep.no_surjection_ok = matrix_rank(m) == unknowns;
  bool witness_ok = s < 2 || (rep.witness->zero_column >= 0 && rep.witness->codim <= 1);
  rep.ok = witness_ok && rep.direct_ok && rep.no_surjection_ok;
  return rep;
}

std::vector<Word> f_polynomial_words(const std::vector<int>& multidegree) {
  if (multidegree.empty()) throw std::invalid_argument("multidegree must be nonempty");
  Word sorted;
  for (size_t i = 0; i < multidegree.size(); ++i) {
    if (multidegree[i] < 0) throw std::invalid_argument("multidegree entries must be >= 0");
    sorted.insert(sorted.end(), multidegree[i], static_cast<int>(i));
  }
  std::vector<Word> out;
  out.push_back(sorted);
  while (std::next_permutation(sorted.begin(), sorted.end())) out.push_back(sorted);
  return out;
}

Int multinomial(const std::vector<int>& multidegree) {
  long total = 0;
  for (int j : multidegree) {
    if (j < 0) throw std::invalid_argument("multidegree entries must be >= 0");
    total += j;
  }
  Int num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(total));
  for (int j : multidegree) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
    num /= f;
  }
  return num;
}

Int multidegree_count(int k, long n) {
  if (k < 1 || n < 0) throw std::invalid_argument("need k >= 1 and n >= 0");
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
               static_cast<unsigned long>(k - 1));
  return out;
}

int growth_gap(int l, int k, int r) {
  if (r < 2 || k < 1 || l < 0)
    throw std::invalid_argument("growth_gap needs r >= 2, k >= 1, l >= 0");
  for (int m = 1;; ++m) {
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r),
                  static_cast<unsigned long>(m));
    if (multidegree_count(k, l + m) < power) return m;
  }
}

}  // namespace schreier
