#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schreier/series.hpp"

using namespace schreier;

namespace {

TruncSeries make(int cap, std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  v.resize(cap + 1, Rat(0));
  return TruncSeries(cap, v);
}

// small deterministic generator for property tests
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed) : s(seed) {}
  uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
  long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

TruncSeries random_series(Lcg& g, int cap, bool zero_const = false) {
  std::vector<Rat> v(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    long num = g.small(-6, 6);
    long den = g.small(1, 4);
    v[n] = Rat(num, den);
    v[n].canonicalize();
  }
  if (zero_const) v[0] = 0;
  return TruncSeries(cap, v);
}

}  // namespace

TEST_CASE("add: cancellation, identity, componentwise") {
  auto one_plus_t = make(3, {1, 1});
  auto one_minus_t = make(3, {1, -1});
  CHECK(add(one_plus_t, one_minus_t) == make(3, {2}));

  auto s = make(3, {3, 0, 5, 7});
  CHECK(add(s, TruncSeries::zero(3)) == s);

  CHECK(add(make(2, {0, 1, 2}), make(2, {1, 1})) == make(2, {1, 2, 2}));
}

TEST_CASE("add/mul reject cap mismatch") {
  CHECK_THROWS_AS(add(make(2, {1}), make(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(mul(make(2, {1}), make(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(div_unit(make(2, {1}), make(3, {1})), std::invalid_argument);
}

TEST_CASE("mul: difference of squares, identity, monomials") {
  CHECK(mul(make(3, {1, 1}), make(3, {1, -1})) == make(3, {1, 0, -1}));
  auto s = make(3, {2, -1, 3, 4});
  CHECK(mul(s, TruncSeries::one(3)) == s);
  CHECK(mul(make(3, {0, 2}), make(3, {0, 2})) == make(3, {0, 0, 4}));
}

TEST_CASE("geom_inverse: geometric series") {
  CHECK(geom_inverse(make(3, {0, 1})) == make(3, {1, 1, 1, 1}));
  // 1/(1-2t) mod t^3, frozen by multiplying back: (1-2t)(1+2t+4t^2) = 1 mod t^3
  auto inv2t = geom_inverse(make(2, {0, 2}));
  CHECK(inv2t == make(2, {1, 2, 4}));
  CHECK(mul(make(2, {1, -2}), inv2t) == TruncSeries::one(2));
  CHECK(geom_inverse(TruncSeries::zero(4)) == TruncSeries::one(4));
  CHECK_THROWS_AS(geom_inverse(make(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("div_unit examples") {
  CHECK(div_unit(make(2, {1, 2, 1}), make(2, {1, 1})) == make(2, {1, 1}));
  auto a = make(4, {5, -2, 0, 3});
  CHECK(div_unit(a, TruncSeries::one(4)) == a);
  // 3t(t+1)/(t+1) = 3t, re-multiplied to check
  auto q = div_unit(make(3, {0, 3, 3}), make(3, {1, 1}));
  CHECK(q == make(3, {0, 3}));
  CHECK(mul(q, make(3, {1, 1})) == make(3, {0, 3, 3}));
  CHECK_THROWS_AS(div_unit(make(3, {1}), make(3, {0, 1})), std::invalid_argument);
}

TEST_CASE("property: geom_inverse is inverse of 1-a") {
  Lcg g(2026);
  for (int round = 0; round < 50; ++round) {
    int cap = 1 + static_cast<int>(g.next() % 9);
    auto a = random_series(g, cap, true);
    auto one_minus_a = sub(TruncSeries::one(cap), a);
    CHECK(mul(geom_inverse(a), one_minus_a) == TruncSeries::one(cap));
  }
}

TEST_CASE("property: div_unit undoes mul") {
  Lcg g(777);
  for (int round = 0; round < 50; ++round) {
    int cap = 1 + static_cast<int>(g.next() % 9);
    auto a = random_series(g, cap);
    auto b = random_series(g, cap);
    if (sgn(b.coeff(0)) == 0) continue;
    CHECK(div_unit(mul(a, b), b) == a);
  }
}

TEST_CASE("property: add/mul commutative and associative") {
  Lcg g(4242);
  for (int round = 0; round < 40; ++round) {
    int cap = 1 + static_cast<int>(g.next() % 8);
    auto a = random_series(g, cap);
    auto b = random_series(g, cap);
    auto c = random_series(g, cap);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("string round trip keeps lowest terms") {
  std::vector<Rat> v{Rat(1), Rat(2, 4), Rat(-3, 9)};
  for (auto& q : v) q.canonicalize();
  TruncSeries s(2, v);
  auto strs = s.to_strings();
  CHECK(strs == std::vector<std::string>{"1", "1/2", "-1/3"});
  CHECK(TruncSeries::from_strings(strs) == s);
}

TEST_CASE("substitute t^2") {
  auto s = make(2, {1, 3, 5});
  auto d = s.substitute_t_squared();
  CHECK(d.cap() == 5);
  CHECK(d.coeff(0) == Rat(1));
  CHECK(d.coeff(2) == Rat(3));
  CHECK(d.coeff(4) == Rat(5));
  CHECK(d.coeff(1) == Rat(0));
  CHECK(d.coeff(3) == Rat(0));
}
