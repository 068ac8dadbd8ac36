#include "schreier/acts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schreier {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw std::invalid_argument(std::string(what) + " names must be distinct, '" + n +
                                  "' repeats");
}

}  // namespace

WeightedAlphabet::WeightedAlphabet(std::vector<std::string> names_, std::vector<int> deg_)
    : names(std::move(names_)), deg(std::move(deg_)) {
  if (names.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (names.size() != deg.size())
    throw std::invalid_argument("alphabet needs one weight per letter");
  require_distinct(names, "letter");
  for (size_t i = 0; i < deg.size(); ++i)
    if (deg[i] < 1)
      throw std::invalid_argument("letter '" + names[i] + "' must have weight >= 1");
}

int WeightedAlphabet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

int WeightedAlphabet::max_weight() const {
  int w = 1;
  for (int d : deg) w = std::max(w, d);
  return w;
}

ActBasis::ActBasis(std::vector<std::string> names_, std::vector<int> deg_)
    : names(std::move(names_)), deg(std::move(deg_)) {
  if (names.empty()) throw std::invalid_argument("act basis must be nonempty");
  if (names.size() != deg.size())
    throw std::invalid_argument("act basis needs one degree per element");
  require_distinct(names, "act basis");
  for (size_t i = 0; i < deg.size(); ++i)
    if (deg[i] < 0)
      throw std::invalid_argument("basis element '" + names[i] + "' must have degree >= 0");
}

int ActBasis::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

int degree(const FreeAct& act, const ActWord& w) {
  int d = act.basis.deg.at(w.base);
  for (int letter : w.letters) d += act.alphabet.deg.at(letter);
  return d;
}

bool is_base_prefix(const ActWord& p, const ActWord& f) {
  if (p.base != f.base || p.letters.size() > f.letters.size()) return false;
  return std::equal(p.letters.begin(), p.letters.end(), f.letters.begin());
}

std::string format_act_word(const FreeAct& act, const ActWord& w) {
  std::string s = act.basis.names.at(w.base);
  for (int letter : w.letters) s += act.alphabet.names.at(letter);
  return s;
}

bool act_word_less(const ActWord& a, const ActWord& b) {
  if (a.base != b.base) return a.base < b.base;
  return a.letters < b.letters;  // lexicographic, prefixes first
}

Subact::Subact(std::vector<ActWord> generators) {
  std::sort(generators.begin(), generators.end(), act_word_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // keep only prefix-minimal generators; after the sort a dominating
  // proper prefix always precedes the word it dominates
  for (const ActWord& g : generators) {
    bool dominated = false;
    for (const ActWord& h : gens_) {
      if (is_base_prefix(h, g)) { dominated = true; break; }
    }
    if (!dominated) gens_.push_back(g);
  }
}

bool membership(const ActWord& f, const Subact& p) {
  for (const ActWord& g : p.generators())
    if (is_base_prefix(g, f)) return true;
  return false;
}

TruncSeries letter_series(const FreeAct& act, int cap) {
  TruncSeries s(cap);
  std::vector<Rat> c(cap + 1, Rat(0));
  for (int d : act.alphabet.deg)
    if (d <= cap) c[d] += 1;
  return TruncSeries(cap, c);
}

TruncSeries base_series(const FreeAct& act, int cap) {
  std::vector<Rat> c(cap + 1, Rat(0));
  for (int d : act.basis.deg)
    if (d <= cap) c[d] += 1;
  return TruncSeries(cap, c);
}

TruncSeries basis_series(const FreeAct& act, const Subact& p, int cap) {
  std::vector<Rat> c(cap + 1, Rat(0));
  for (const ActWord& g : p.generators()) {
    int d = degree(act, g);
    if (d <= cap) c[d] += 1;
  }
  return TruncSeries(cap, c);
}

namespace {

/// Prefix trie of the generators of one base tree. Node 0 is the root.
struct GenTrie {
  int letters;
  std::vector<int> child;     // node*letters + letter -> node or -1
  std::vector<char> terminal; // a generator ends here

  explicit GenTrie(int letters_) : letters(letters_) { add_node(); }
  int add_node() {
    child.insert(child.end(), letters, -1);
    terminal.push_back(0);
    return static_cast<int>(terminal.size()) - 1;
  }
  int& at(int node, int letter) { return child[node * letters + letter]; }
  int get(int node, int letter) const { return child[node * letters + letter]; }

  void insert(const std::vector<int>& word) {
    int node = 0;
    for (int letter : word) {
      if (at(node, letter) < 0) at(node, letter) = add_node();
      node = at(node, letter);
    }
    terminal[node] = 1;
  }
};

std::vector<GenTrie> build_tries(const FreeAct& act, const Subact& p) {
  std::vector<GenTrie> tries(act.basis.size(), GenTrie(act.alphabet.size()));
  for (const ActWord& g : p.generators()) tries[g.base].insert(g.letters);
  return tries;
}

struct ComplementWalker {
  const std::vector<int>& weights;
  const GenTrie* trie = nullptr;
  int bound;
  std::vector<long long>* counts;

  // walk the part of the tree still shadowed by the generator trie
  void walk(int node, int deg) const {
    if (trie->terminal[node]) return;  // inside P: the whole cone is in P
    (*counts)[deg] += 1;
    for (size_t l = 0; l < weights.size(); ++l) {
      int nd = deg + weights[l];
      if (nd > bound) continue;
      int c = trie->get(node, static_cast<int>(l));
      if (c >= 0)
        walk(c, nd);
      else
        walk_free(nd);  // diverged from every generator: cone stays outside P
    }
  }

  void walk_free(int deg) const {
    (*counts)[deg] += 1;
    for (size_t l = 0; l < weights.size(); ++l) {
      int nd = deg + weights[l];
      if (nd <= bound) walk_free(nd);
    }
  }
};

}  // namespace

TruncSeries complement_census_enum(const FreeAct& act, const Subact& p, int degreeBound) {
  std::vector<long long> counts(degreeBound + 1, 0);
  auto tries = build_tries(act, p);
  for (int b = 0; b < act.basis.size(); ++b) {
    int d0 = act.basis.deg[b];
    if (d0 > degreeBound) continue;
    ComplementWalker w{act.alphabet.deg, &tries[b], degreeBound, &counts};
    w.walk(0, d0);
  }
  std::vector<Rat> c(degreeBound + 1);
  for (int n = 0; n <= degreeBound; ++n) c[n] = Rat(static_cast<long>(counts[n]));
  return TruncSeries(degreeBound, c);
}

TruncSeries complement_count(const FreeAct& act, const Subact& p, int degreeBound) {
  TruncSeries enumerated = complement_census_enum(act, p, degreeBound);
  TruncSeries inv = geom_inverse(letter_series(act, degreeBound));
  TruncSeries via_series =
      sub(mul(base_series(act, degreeBound), inv), mul(basis_series(act, p, degreeBound), inv));
  if (enumerated != via_series)
    throw std::logic_error("complement census mismatch: enumeration " + enumerated.pretty() +
                           " vs series " + via_series.pretty());
  return enumerated;
}

SchreierSeriesReport verify_schreier_series_report(const FreeAct& act, const Subact& p, int cap) {
  SchreierSeriesReport rep{basis_series(act, p, cap), TruncSeries(cap)};
  TruncSeries hx = letter_series(act, cap);
  TruncSeries complement = complement_census_enum(act, p, cap);
  rep.rhs = add(base_series(act, cap), mul(complement, sub(hx, TruncSeries::one(cap))));
  rep.ok = rep.basis_census == rep.rhs;
  return rep;
}

bool verify_schreier_series(const FreeAct& act, const Subact& p, int cap) {
  return verify_schreier_series_report(act, p, cap).ok;
}

namespace {

/// Search the window (d, d+w] for a complement vertex; any such vertex
/// heads a cone disjoint from P, so finding one proves the complement
/// infinite. d must dominate the degrees of all generators and all basis
/// elements for the window argument to be complete.
struct WitnessWalker {
  const FreeAct& act;
  const GenTrie* trie = nullptr;
  int lo, hi;  // window (lo, hi]
  std::optional<ActWord>* best;
  int base;
  std::vector<int> path;

  void record(int deg) {
    if (!*best || deg > degree(act, **best))
      *best = ActWord{base, path};
  }

  void walk(int node, int deg) {
    if (trie->terminal[node]) return;
    if (deg > lo) record(deg);
    for (int l = 0; l < act.alphabet.size(); ++l) {
      int nd = deg + act.alphabet.deg[l];
      if (nd > hi) continue;
      path.push_back(l);
      int c = trie->get(node, l);
      if (c >= 0)
        walk(c, nd);
      else
        walk_free(nd);
      path.pop_back();
    }
  }

  void walk_free(int deg) {
    if (deg > lo) record(deg);
    for (int l = 0; l < act.alphabet.size(); ++l) {
      int nd = deg + act.alphabet.deg[l];
      if (nd > hi) continue;
      path.push_back(l);
      walk_free(nd);
      path.pop_back();
    }
  }
};

int degree_dominator(const FreeAct& act, const Subact& p) {
  int d = 0;
  for (int bd : act.basis.deg) d = std::max(d, bd);
  for (const ActWord& g : p.generators()) d = std::max(d, degree(act, g));
  return d;
}

}  // namespace

std::optional<ActWord> infinite_complement_witness(const FreeAct& act, const Subact& p) {
  int d = degree_dominator(act, p);
  int w = act.alphabet.max_weight();
  std::optional<ActWord> best;
  auto tries = build_tries(act, p);
  for (int b = 0; b < act.basis.size(); ++b) {
    if (act.basis.deg[b] > d + w) continue;
    WitnessWalker walker{act, &tries[b], d, d + w, &best, b, {}};
    walker.walk(0, act.basis.deg[b]);
  }
  return best;
}

RankFormulaResult rank_formula_check(const FreeAct& act, const Subact& p) {
  if (auto witness = infinite_complement_witness(act, p))
    throw InfiniteComplementError(
        "complement of the subact is infinite (witness " + format_act_word(act, *witness) + ")",
        *witness);
  int d = degree_dominator(act, p);
  TruncSeries complement = complement_count(act, p, d);
  RankFormulaResult res;
  res.rank_p = static_cast<long long>(p.generators().size());
  Rat total(0);
  for (int n = 0; n <= d; ++n) total += complement.coeff(n);
  res.complement_size = static_cast<long long>(total.get_num().get_si());
  long long rk_f = act.basis.size();
  long long rk_w = act.alphabet.size();
  res.holds = res.rank_p == rk_f + res.complement_size * (rk_w - 1);
  return res;
}

std::pair<Subact, Subact> union_intersection(const Subact& p, const Subact& q) {
  std::vector<ActWord> union_gens = p.generators();
  union_gens.insert(union_gens.end(), q.generators().begin(), q.generators().end());

  // a cone s.W meets t.W exactly when s,t are base-equal and
  // prefix-comparable, and the intersection is the cone of the longer
  std::vector<ActWord> inter_gens;
  for (const ActWord& s : p.generators())
    for (const ActWord& t : q.generators()) {
      if (is_base_prefix(s, t))
        inter_gens.push_back(t);
      else if (is_base_prefix(t, s))
        inter_gens.push_back(s);
    }
  return {Subact(std::move(union_gens)), Subact(std::move(inter_gens))};
}

GrassmannReport verify_grassmann_report(const FreeAct& act, const Subact& p, const Subact& q,
                                        int cap) {
  auto [u, i] = union_intersection(p, q);
  GrassmannReport rep{basis_series(act, p, cap), basis_series(act, q, cap),
                      basis_series(act, u, cap), basis_series(act, i, cap)};
  rep.rk_p = static_cast<long long>(p.generators().size());
  rep.rk_q = static_cast<long long>(q.generators().size());
  rep.rk_union = static_cast<long long>(u.generators().size());
  rep.rk_inter = static_cast<long long>(i.generators().size());
  rep.empty_intersection = i.empty();
  rep.series_ok = add(rep.h_p, rep.h_q) == add(rep.h_union, rep.h_inter);
  rep.rank_ok = rep.rk_p + rep.rk_q == rep.rk_union + rep.rk_inter;
  rep.ok = rep.series_ok && rep.rank_ok;
  return rep;
}

bool verify_grassmann(const FreeAct& act, const Subact& p, const Subact& q, int cap) {
  return verify_grassmann_report(act, p, q, cap).ok;
}

}  // namespace schreier
