#ifndef SCHREIER_ACTS_HPP
#define SCHREIER_ACTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schreier/series.hpp"

namespace schreier {

/// Free generating set of a free monoid, each letter carrying a positive
/// integer weight.
struct WeightedAlphabet {
  std::vector<std::string> names;
  std::vector<int> deg;

  WeightedAlphabet(std::vector<std::string> names_, std::vector<int> deg_);
  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
  int max_weight() const;
};

/// Basis of a free act: one tree per basis element, with a nonnegative
/// base degree.
struct ActBasis {
  std::vector<std::string> names;
  std::vector<int> deg;

  ActBasis(std::vector<std::string> names_, std::vector<int> deg_);
  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
};

struct FreeAct {
  WeightedAlphabet alphabet;
  ActBasis basis;
};

/// A vertex of the forest: basis element followed by a word in the alphabet.
struct ActWord {
  int base = 0;
  std::vector<int> letters;

  bool operator==(const ActWord& o) const = default;
};

int degree(const FreeAct& act, const ActWord& w);
/// p is base-equal to f and p.letters is a prefix of f.letters.
bool is_base_prefix(const ActWord& p, const ActWord& f);
std::string format_act_word(const FreeAct& act, const ActWord& w);
/// Deterministic order used for canonical generator lists.
bool act_word_less(const ActWord& a, const ActWord& b);

/// Finitely generated subact P = S.W, canonicalized so that only
/// prefix-minimal generators are stored. Those generators are exactly the
/// free Schreier basis of P (the vertices of P whose tree parent is not
/// in P).
class Subact {
 public:
  Subact() = default;
  explicit Subact(std::vector<ActWord> generators);

  const std::vector<ActWord>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  bool operator==(const Subact& o) const { return gens_ == o.gens_; }

 private:
  std::vector<ActWord> gens_;
};

/// The unique free basis of P; for finitely generated subacts this is the
/// prefix-minimal generator set.
inline const std::vector<ActWord>& canonical_basis(const Subact& p) { return p.generators(); }

bool membership(const ActWord& f, const Subact& p);

TruncSeries letter_series(const FreeAct& act, int cap);  // H(X,t)
TruncSeries base_series(const FreeAct& act, int cap);    // H(A,t)
TruncSeries basis_series(const FreeAct& act, const Subact& p, int cap);  // H(B,t)

/// Degree census of the complement F \ P by explicit enumeration of every
/// complement vertex up to the bound.
TruncSeries complement_census_enum(const FreeAct& act, const Subact& p, int degreeBound);
/// Same census via the series identity (H(A)-H(B)) / (1-H(X)); throws
/// std::logic_error if the two routes ever disagree.
TruncSeries complement_count(const FreeAct& act, const Subact& p, int degreeBound);

struct SchreierSeriesReport {
  TruncSeries basis_census;  // H(B,t) by enumeration of the canonical basis
  TruncSeries rhs;           // H(A,t) + H(F\P,t)(H(X,t)-1), complement enumerated
  bool ok = false;
};
SchreierSeriesReport verify_schreier_series_report(const FreeAct& act, const Subact& p, int cap);
bool verify_schreier_series(const FreeAct& act, const Subact& p, int cap);

/// Thrown when the complement is infinite; carries a complement vertex of
/// maximal checked degree whose whole cone avoids P.
class InfiniteComplementError : public std::runtime_error {
 public:
  InfiniteComplementError(std::string msg, ActWord witness)
      : std::runtime_error(std::move(msg)), witness(std::move(witness)) {}
  ActWord witness;
};

struct RankFormulaResult {
  long long rank_p = 0;
  long long complement_size = 0;
  bool holds = false;
};
/// rk P = rk F + |F\P| (rk W - 1); requires F\P finite, else throws
/// InfiniteComplementError.
RankFormulaResult rank_formula_check(const FreeAct& act, const Subact& p);

/// Finiteness test used by rank_formula_check, exposed for inspection.
/// Returns a witness in the window (d, d+w] when the complement is
/// infinite, where d bounds generator and base degrees and w is the
/// maximal letter weight.
std::optional<ActWord> infinite_complement_witness(const FreeAct& act, const Subact& p);

std::pair<Subact, Subact> union_intersection(const Subact& p, const Subact& q);

struct GrassmannReport {
  TruncSeries h_p, h_q, h_union, h_inter;
  long long rk_p = 0, rk_q = 0, rk_union = 0, rk_inter = 0;
  bool empty_intersection = false;
  bool series_ok = false;
  bool rank_ok = false;
  bool ok = false;
};
GrassmannReport verify_grassmann_report(const FreeAct& act, const Subact& p, const Subact& q, int cap);
bool verify_grassmann(const FreeAct& act, const Subact& p, const Subact& q, int cap);

}  // namespace schreier

#endif
