#ifndef SCHREIER_PRESENTATION_HPP
#define SCHREIER_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "schreier/ncpoly.hpp"
#include "schreier/rational.hpp"
#include "schreier/series.hpp"

namespace schreier {

enum class AlgebraKind { FreeAssociative, FreeGroup };

/// Word over the algebra generators: +k is x_k, -k is x_k^{-1} (1-based).
/// Free-associative words use positive entries only; free-group words are
/// kept freely reduced.
using AlgWord = std::vector<int>;

AlgWord reduce_alg_word(const AlgWord& w, AlgebraKind kind);
/// "x1x2", "X2x1" (capital X = inverse); whitespace ignored.
AlgWord parse_alg_word(const std::string& text, int rank, AlgebraKind kind);
std::string format_alg_word(const AlgWord& w);

struct PresTerm {
  int gen = 0;  // 0-based generator index
  AlgWord word;
  Rat coeff;
};
/// Canonical relator: like terms combined, zero terms dropped.
using Relator = std::vector<PresTerm>;

struct Presentation {
  AlgebraKind kind = AlgebraKind::FreeAssociative;
  int rank = 1;
  std::vector<std::string> gen_names;
  std::vector<Relator> relators;

  int num_gens() const { return static_cast<int>(gen_names.size()); }
};

Presentation make_presentation(AlgebraKind kind, int rank, std::vector<std::string> gen_names,
                               std::vector<Relator> relators);

/// Matrix entry c0 + sum cz[i] * z_{i+1}, degree <= 1 in the z-generators
/// (z_i = x_i for free associative algebras, x_i - 1 for group algebras).
struct AffineEntry {
  Rat c0;
  std::vector<Rat> cz;

  bool is_zero() const;
  bool is_constant() const;  // z-part vanishes
  std::string to_string() const;
};

struct AffinePresentation {
  AlgebraKind kind = AlgebraKind::FreeAssociative;
  int rank = 1;
  std::vector<std::string> gen_names;
  std::vector<int> gen_shift;                  // generator degrees, for the series oracle
  std::vector<std::vector<AffineEntry>> rows;  // q rows of p entries
  int added_gens = 0;

  int p() const { return static_cast<int>(gen_names.size()); }
  int q() const { return static_cast<int>(rows.size()); }
  bool column_is_zero(int j) const;
  bool column_is_constant(int j) const;
};

/// Higman linearization: p+s generators and q+s relations with every
/// entry affine; free-group inputs get their inverse letters removed via
/// the u_st substitution first.
AffinePresentation higman_affinize(const Presentation& pres);

/// Free-associative inputs only: Hilbert series of the presented module
/// computed from both presentations (new generators carry the degree of
/// the word they abbreviate) must agree up to the cap.
struct AffinizeCheck {
  TruncSeries input_series{0}, output_series{0};
  bool ok = false;
};
AffinizeCheck affinize_series_check(const Presentation& in, const AffinePresentation& out,
                                    int cap);

// conversions into the module arithmetic (free associative only)
ModuleShape presentation_shape(const Presentation& pres);
std::vector<NCPoly<RationalField>> presentation_generators(const Presentation& pres);
ModuleShape affine_shape(const AffinePresentation& ap);
std::vector<NCPoly<RationalField>> affine_generators(const AffinePresentation& ap);

struct WitnessStep {
  // T_new = T_old * basis_change; identity except in one column
  std::vector<std::vector<Rat>> basis_change;
  int expanded_column = -1;  // -1 on the final step that exposes a zero column
  std::vector<std::string> gen_names_after;
};

struct LargenessWitness {
  std::vector<WitnessStep> steps;
  AffinePresentation final_presentation;
  int zero_column = -1;
  int codim = 0;  // number of generator expansions performed
  int k = 0;      // bound floor(q/r) + 1
};

/// The constructive largeness procedure: column operations over the field
/// until a generator is free of every relator, expanding a zero-constant
/// column into r new generators when stuck. Requires p - q > 0.
LargenessWitness largeness_witness(const AffinePresentation& ap);

struct BoundLargeReport {
  Presentation presentation;
  /// Witness from the constructive procedure; absent when s = 1 (then
  /// p - q = 0 and the procedure does not apply).
  std::optional<LargenessWitness> witness;
  /// The explicit free submodule <u_1 x_1,..,u_1 x_r, u_2,..,u_s>:
  /// codimension (expected 1) and rank (expected r+s-1).
  long long direct_codim = -1;
  long long direct_rank = -1;
  bool direct_ok = false;
  int solve_bound = 0;
  bool no_surjection_ok = false;  // sum b_i x_i = 0 has only the zero solution
  bool ok = false;
};

/// The bound-but-large module <u_1..u_s | u_1 x_1 + ... + u_s x_s>:
/// largeness both via the witness procedure (when applicable) and via the
/// explicit codimension-1 free submodule; boundness via an exact graded
/// solve showing no nonzero homomorphism onto the algebra exists.
BoundLargeReport bound_large_example(int s, int r, int solveBound = 6);

/// All words in y_1..y_k whose letter multiset is exactly the multidegree
/// j (so the coefficient of u^j in (u_1 y_1 + ... + u_k y_k)^m), in
/// lexicographic order. Throws on negative entries.
std::vector<Word> f_polynomial_words(const std::vector<int>& multidegree);
Int multinomial(const std::vector<int>& multidegree);

/// d_k(n) = C(n+k-1, k-1): the number of multidegrees of total degree n.
Int multidegree_count(int k, long n);
/// Least m >= 1 with d_k(l+m) < r^m.
int growth_gap(int l, int k, int r);

}  // namespace schreier

#endif
