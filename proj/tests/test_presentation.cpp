#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "schreier/presentation.hpp"
#include "schreier/rng.hpp"

using namespace schreier;

namespace {

Presentation assoc_pres(int rank, std::vector<std::string> gens,
                        std::vector<std::vector<std::pair<std::string, std::string>>> rels) {
  std::vector<Relator> relators;
  for (auto& rel : rels) {
    Relator r;
    for (auto& [gen, word] : rel) {
      int gi = -1;
      for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == gen) gi = static_cast<int>(i);
      r.push_back({gi, parse_alg_word(word, rank, AlgebraKind::FreeAssociative), Rat(1)});
    }
    relators.push_back(std::move(r));
  }
  return make_presentation(AlgebraKind::FreeAssociative, rank, std::move(gens),
                           std::move(relators));
}

bool syntactically_affine(const AffinePresentation& ap) {
  for (const auto& row : ap.rows)
    for (const auto& e : row)
      if (static_cast<int>(e.cz.size()) != ap.rank) return false;
  return true;
}

}  // namespace

TEST_CASE("algebra word parsing") {
  CHECK(parse_alg_word("x1x2", 2, AlgebraKind::FreeAssociative) == AlgWord{1, 2});
  CHECK(parse_alg_word("x1X1", 2, AlgebraKind::FreeGroup).empty());
  CHECK(parse_alg_word("X2x1", 2, AlgebraKind::FreeGroup) == AlgWord{-2, 1});
  CHECK_THROWS_AS(parse_alg_word("X1", 2, AlgebraKind::FreeAssociative), std::invalid_argument);
  CHECK_THROWS_AS(parse_alg_word("x3", 2, AlgebraKind::FreeAssociative), std::invalid_argument);
  CHECK(format_alg_word(AlgWord{1, -2}) == "x1X2");
  CHECK(format_alg_word(AlgWord{}) == "1");
}

TEST_CASE("Higman linearization: quadratic relator") {
  auto pres = assoc_pres(2, {"u1"}, {{{"u1", "x1x2"}}});
  auto ap = higman_affinize(pres);
  CHECK(ap.p() == 2);
  CHECK(ap.q() == 2);
  CHECK(ap.added_gens == 1);
  CHECK(syntactically_affine(ap));
  CHECK(ap.gen_shift == std::vector<int>{0, 1});
  auto chk = affinize_series_check(pres, ap, 8);
  CHECK(chk.ok);
  // direct expected series: words avoiding the factor prefix x1x2
  CHECK(chk.input_series.coeff(0) == Rat(1));
  CHECK(chk.input_series.coeff(1) == Rat(2));
  CHECK(chk.input_series.coeff(2) == Rat(3));
}

TEST_CASE("Higman linearization: already affine input is unchanged") {
  auto pres = assoc_pres(2, {"u1", "u2"}, {{{"u1", "x1"}, {"u2", "x2"}}});
  auto ap = higman_affinize(pres);
  CHECK(ap.p() == 2);
  CHECK(ap.q() == 1);
  CHECK(ap.added_gens == 0);
  CHECK(affinize_series_check(pres, ap, 8).ok);
}

TEST_CASE("Higman linearization removes inverse letters over group algebras") {
  Relator rel{{0, parse_alg_word("X1", 1, AlgebraKind::FreeGroup), Rat(1)}};
  auto pres = make_presentation(AlgebraKind::FreeGroup, 1, {"u1"}, {rel});
  auto ap = higman_affinize(pres);
  CHECK(ap.p() == 2);
  CHECK(ap.q() == 2);
  CHECK(ap.added_gens == 1);
  CHECK(syntactically_affine(ap));
  // the old relator became the new generator, entered with constant 1
  bool found_const_row = false;
  for (const auto& row : ap.rows)
    if (row[0].is_zero() && row[1].is_constant() && sgn(row[1].c0) != 0) found_const_row = true;
  CHECK(found_const_row);
  // the defining relation reads u11*x1 - u1 = 0, i.e. (1 + z1) on u11
  bool found_def = false;
  for (const auto& row : ap.rows)
    if (row[0].c0 == Rat(-1) && row[1].c0 == Rat(1) && row[1].cz[0] == Rat(1)) found_def = true;
  CHECK(found_def);
}

TEST_CASE("Higman linearization on random presentations keeps the series") {
  SmallRng rng(2200);
  for (int round = 0; round < 15; ++round) {
    int rank = rng.range(2, 3);
    int p = rng.range(1, 3);
    int q = rng.range(1, 2);
    std::vector<std::string> gens;
    for (int i = 1; i <= p; ++i) gens.push_back("u" + std::to_string(i));
    std::vector<Relator> rels;
    for (int i = 0; i < q; ++i) {
      Relator rel;
      int terms = rng.range(1, 3);
      for (int t = 0; t < terms; ++t) {
        AlgWord w;
        for (int l = 0, len = rng.upto(4); l < len; ++l) w.push_back(1 + rng.upto(rank));
        rel.push_back({rng.upto(p), std::move(w), make_rat(rng.range(-2, 2), 1)});
      }
      rels.push_back(std::move(rel));
    }
    auto pres = make_presentation(AlgebraKind::FreeAssociative, rank, gens, rels);
    auto ap = higman_affinize(pres);
    CAPTURE(round);
    CHECK(syntactically_affine(ap));
    CHECK(affinize_series_check(pres, ap, 8).ok);
  }
}

TEST_CASE("largeness witness: the paper-style bound-but-large module") {
  auto rep = bound_large_example(2, 2, 6);
  CHECK(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->codim == 1);
  CHECK(rep.witness->k == 1);
  CHECK(rep.witness->zero_column >= 0);
  CHECK(rep.no_surjection_ok);
  CHECK(rep.direct_codim == 1);
  CHECK(rep.direct_rank == 3);  // r + s - 1
  // final presentation: three generators with one of them free
  const auto& fin = rep.witness->final_presentation;
  CHECK(fin.p() == 3);
  CHECK(fin.column_is_zero(rep.witness->zero_column));
}

TEST_CASE("largeness witness: generator missing from relations, codim 0") {
  // <u1, u2 | u1 = 0>: u2 never appears
  Relator rel{{0, {}, Rat(1)}};
  auto pres = make_presentation(AlgebraKind::FreeAssociative, 2, {"u1", "u2"}, {rel});
  auto wit = largeness_witness(higman_affinize(pres));
  CHECK(wit.codim == 0);
  CHECK(wit.zero_column == 1);
}

TEST_CASE("largeness witness requires p > q") {
  Relator rel{{0, {1}, Rat(1)}};
  auto pres = make_presentation(AlgebraKind::FreeAssociative, 2, {"u1"}, {rel});
  CHECK_THROWS_AS(largeness_witness(higman_affinize(pres)), std::invalid_argument);
}

TEST_CASE("largeness witness on random affine presentations") {
  SmallRng rng(3100);
  for (int round = 0; round < 60; ++round) {
    int rank = rng.range(2, 3);
    int q = rng.range(1, 3);
    int p = q + rng.range(1, 2);
    AffinePresentation ap;
    ap.kind = rng.upto(2) ? AlgebraKind::FreeAssociative : AlgebraKind::FreeGroup;
    ap.rank = rank;
    for (int i = 1; i <= p; ++i) {
      ap.gen_names.push_back("u" + std::to_string(i));
      ap.gen_shift.push_back(0);
    }
    for (int i = 0; i < q; ++i) {
      std::vector<AffineEntry> row;
      for (int j = 0; j < p; ++j) {
        AffineEntry e{make_rat(rng.range(-2, 2), 1), std::vector<Rat>(rank, Rat(0))};
        for (int z = 0; z < rank; ++z) e.cz[z] = make_rat(rng.range(-1, 1), 1);
        row.push_back(std::move(e));
      }
      ap.rows.push_back(std::move(row));
    }
    CAPTURE(round);
    auto wit = largeness_witness(ap);
    CHECK(wit.codim <= wit.k);
    CHECK(wit.zero_column >= 0);
    CHECK(wit.final_presentation.column_is_zero(wit.zero_column));
    CHECK(wit.final_presentation.q() == q);
    // every recorded basis change is invertible over the field
    for (const auto& step : wit.steps) {
      int n = static_cast<int>(step.basis_change.size());
      CHECK(matrix_rank(step.basis_change) == n);
    }
    // each expansion swaps one generator for r new ones carrying z suffixes
    int expansions = 0;
    for (const auto& step : wit.steps)
      if (step.expanded_column >= 0) ++expansions;
    CHECK(expansions == wit.codim);
    CHECK(wit.final_presentation.p() == p + expansions * (rank - 1));
  }
}

TEST_CASE("bound-large example variants") {
  auto rep1 = bound_large_example(1, 2, 5);
  CHECK_FALSE(rep1.witness.has_value());  // p - q = 0, procedure inapplicable
  CHECK(rep1.direct_codim == 1);
  CHECK(rep1.direct_rank == 2);
  CHECK(rep1.no_surjection_ok);
  CHECK(rep1.ok);

  CHECK_THROWS_AS(bound_large_example(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(bound_large_example(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(bound_large_example(3, 2), std::invalid_argument);
}

TEST_CASE("f polynomials: worked examples") {
  auto w11 = f_polynomial_words({1, 1});
  CHECK(w11 == std::vector<Word>{{0, 1}, {1, 0}});

  auto w3 = f_polynomial_words({3});
  CHECK(w3 == std::vector<Word>{{0, 0, 0}});

  auto w111 = f_polynomial_words({1, 1, 1});
  CHECK(w111.size() == 6);

  CHECK_THROWS_AS(f_polynomial_words({1, -1}), std::invalid_argument);
  CHECK(f_polynomial_words({0, 0}) == std::vector<Word>{Word{}});
}

TEST_CASE("f polynomials match the expansion of (u1y1+...+ukyk)^m") {
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m <= 5; ++m) {
      // expand: every letter sequence of length m, grouped by multidegree
      std::map<std::vector<int>, std::set<Word>> grouped;
      std::vector<Word> seqs{{}};
      for (int step = 0; step < m; ++step) {
        std::vector<Word> next;
        for (const Word& w : seqs)
          for (int letter = 0; letter < k; ++letter) {
            Word e = w;
            e.push_back(letter);
            next.push_back(std::move(e));
          }
        seqs = std::move(next);
      }
      for (const Word& w : seqs) {
        std::vector<int> degree(k, 0);
        for (int letter : w) degree[letter] += 1;
        grouped[degree].insert(w);
      }
      for (const auto& [degree, set] : grouped) {
        auto words = f_polynomial_words(degree);
        CHECK(words.size() == set.size());
        CHECK(std::set<Word>(words.begin(), words.end()) == set);
        CHECK(multinomial(degree) == Int(static_cast<long>(set.size())));
      }
    }
}

TEST_CASE("growth gap: worked examples and exhaustive minimality") {
  CHECK(growth_gap(0, 1, 2) == 1);
  CHECK(growth_gap(0, 2, 2) == 2);

  for (int l = 0; l <= 10; ++l)
    for (int k = 1; k <= 4; ++k)
      for (int r : {2, 3}) {
        int m = growth_gap(l, k, r);
        Int power;
        mpz_ui_pow_ui(power.get_mpz_t(), r, m);
        CHECK(multidegree_count(k, l + m) < power);
        for (int mm = 1; mm < m; ++mm) {
          Int p2;
          mpz_ui_pow_ui(p2.get_mpz_t(), r, mm);
          CHECK(multidegree_count(k, l + mm) >= p2);
        }
      }
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(make_presentation(AlgebraKind::FreeAssociative, 0, {"u1"}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_presentation(AlgebraKind::FreeAssociative, 2, {"u1", "u1"}, {}),
                  std::invalid_argument);
  Relator bad{{5, {1}, Rat(1)}};
  CHECK_THROWS_AS(make_presentation(AlgebraKind::FreeAssociative, 2, {"u1"}, {bad}),
                  std::invalid_argument);
}
