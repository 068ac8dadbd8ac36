#ifndef SCHREIER_SERIES_HPP
#define SCHREIER_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schreier/rational.hpp"

namespace schreier {

/// Formal power series with exact rational coefficients, truncated at a
/// fixed cap D. Immutable once built; every binary operation demands equal
/// caps so a truncation level can never change silently.
class TruncSeries {
 public:
  explicit TruncSeries(int cap) : coeffs_(check_cap(cap) + 1, Rat(0)) {}
  TruncSeries(int cap, std::vector<Rat> coeffs);

  static TruncSeries zero(int cap) { return TruncSeries(cap); }
  static TruncSeries one(int cap) { return constant(Rat(1), cap); }
  static TruncSeries constant(const Rat& c, int cap);
  /// c * t^n (zero if n exceeds the cap).
  static TruncSeries monomial(const Rat& c, int n, int cap);

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int n) const;
  const Rat& operator[](int n) const { return coeff(n); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  /// Coefficients as canonical "p/q" strings, index = degree.
  std::vector<std::string> to_strings() const;
  static TruncSeries from_strings(const std::vector<std::string>& v);

  std::string pretty() const;  // for error messages and logs

  /// Substitute t -> t^2, doubling the cap.
  TruncSeries substitute_t_squared() const;

  friend TruncSeries add(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries scale(const Rat& c, const TruncSeries& a);
  friend TruncSeries geom_inverse(const TruncSeries& a);
  friend TruncSeries div_unit(const TruncSeries& a, const TruncSeries& b);

 private:
  static int check_cap(int cap);
  std::vector<Rat> coeffs_;  // size cap+1
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
/// Cauchy product truncated at the common cap.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries scale(const Rat& c, const TruncSeries& a);
/// Truncation of 1/(1-a); requires a(0) == 0.
TruncSeries geom_inverse(const TruncSeries& a);
/// Quotient q with q*b == a up to the cap; requires b(0) != 0.
TruncSeries div_unit(const TruncSeries& a, const TruncSeries& b);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

}  // namespace schreier

#endif
