#include "schreier/series.hpp"

#include <sstream>
#include <stdexcept>

namespace schreier {

int TruncSeries::check_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
  return cap;
}

TruncSeries::TruncSeries(int cap, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  check_cap(cap);
  if (coeffs_.size() != static_cast<size_t>(cap) + 1)
    throw std::invalid_argument("coefficient vector must have cap+1 entries");
}

TruncSeries TruncSeries::constant(const Rat& c, int cap) {
  TruncSeries s(cap);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(const Rat& c, int n, int cap) {
  if (n < 0) throw std::invalid_argument("monomial degree must be >= 0");
  TruncSeries s(cap);
  if (n <= cap) s.coeffs_[n] = c;
  return s;
}

const Rat& TruncSeries::coeff(int n) const {
  if (n < 0 || n > cap()) throw std::out_of_range("series coefficient index out of range");
  return coeffs_[n];
}

bool TruncSeries::is_zero() const {
  for (const Rat& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

std::vector<std::string> TruncSeries::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) out.push_back(rat_to_string(c));
  return out;
}

TruncSeries TruncSeries::from_strings(const std::vector<std::string>& v) {
  if (v.empty()) throw std::invalid_argument("series needs at least the degree-0 coefficient");
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const std::string& s : v) c.push_back(rat_from_string(s));
  return TruncSeries(static_cast<int>(v.size()) - 1, std::move(c));
}

std::string TruncSeries::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= cap(); ++n) {
    if (sgn(coeffs_[n]) == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[n].get_str();
    if (n > 0) os << "*t^" << n;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << cap() + 1 << ")";
  return os.str();
}

TruncSeries TruncSeries::substitute_t_squared() const {
  TruncSeries out(2 * cap() + 1);
  for (int n = 0; n <= cap(); ++n) out.coeffs_[2 * n] = coeffs_[n];
  return out;
}

namespace {
void require_same_cap(const TruncSeries& a, const TruncSeries& b) {
  if (a.cap() != b.cap())
    throw std::invalid_argument("series cap mismatch: " + std::to_string(a.cap()) +
                                " vs " + std::to_string(b.cap()));
}
}  // namespace

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
  require_same_cap(a, b);
  TruncSeries out(a.cap());
  for (int n = 0; n <= a.cap(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return out;
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
  require_same_cap(a, b);
  TruncSeries out(a.cap());
  for (int n = 0; n <= a.cap(); ++n) out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return out;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_cap(a, b);
  TruncSeries out(a.cap());
  for (int i = 0; i <= a.cap(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= a.cap(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncSeries scale(const Rat& c, const TruncSeries& a) {
  TruncSeries out(a.cap());
  for (int n = 0; n <= a.cap(); ++n) out.coeffs_[n] = c * a.coeffs_[n];
  return out;
}

TruncSeries geom_inverse(const TruncSeries& a) {
  if (sgn(a.coeffs_[0]) != 0)
    throw std::invalid_argument("geom_inverse needs zero constant term, got " +
                                a.coeffs_[0].get_str());
  // g = 1/(1-a): g(n) = sum_{i=1..n} a(i) g(n-i), g(0) = 1.
  TruncSeries out(a.cap());
  out.coeffs_[0] = 1;
  for (int n = 1; n <= a.cap(); ++n) {
    Rat acc(0);
    for (int i = 1; i <= n; ++i) acc += a.coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = acc;
  }
  return out;
}

TruncSeries div_unit(const TruncSeries& a, const TruncSeries& b) {
  require_same_cap(a, b);
  if (sgn(b.coeffs_[0]) == 0)
    throw std::invalid_argument("div_unit needs a unit constant term in the divisor");
  TruncSeries out(a.cap());
  for (int n = 0; n <= a.cap(); ++n) {
    Rat acc = a.coeffs_[n];
    for (int i = 1; i <= n; ++i) acc -= b.coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = acc / b.coeffs_[0];
  }
  return out;
}

}  // namespace schreier
