#ifndef SCHREIER_RATIONAL_HPP
#define SCHREIER_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace schreier {

/// Exact rational scalar used throughout the library. GMP keeps every
/// coefficient in lowest terms; no floating point exists anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// mpq_class(n, d) keeps the fraction as given; this always canonicalizes.
inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

/// Prime field Z/p with a runtime modulus. Elements live in [0, p).
class PrimeField {
 public:
  using Elem = unsigned long;

  explicit PrimeField(unsigned long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus must be prime");
  }

  unsigned long modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem from_int(long v) const {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return static_cast<Elem>(m);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    // extended Euclid
    long t = 0, nt = 1;
    long r = static_cast<long>(p_), nr = static_cast<long>(a);
    while (nr != 0) {
      long quot = r / nr;
      long tmp = t - quot * nt; t = nt; nt = tmp;
      tmp = r - quot * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<long>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  unsigned long p_;
};

/// Field of exact rationals, shaped like PrimeField so templated code can
/// take either.
class RationalField {
 public:
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem from_int(long v) const { return Rat(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return Rat(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
  std::string to_string(const Elem& a) const { return a.get_str(); }

 private:
  static const Rat& inv_guard(const Rat& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    return b;
  }
};

/// Rank of a dense rational matrix, by fraction-free row elimination.
inline int matrix_rank(std::vector<std::vector<Rat>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(m[r][c]) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace schreier

#endif
