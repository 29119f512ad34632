#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clans {

/// Integer-coefficient polynomial in q, coefficients stored by ascending
/// degree with no trailing zeros.  The zero polynomial has an empty
/// coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(long long constant);
  explicit QPoly(std::vector<long long> ascending);

  static QPoly one() { return QPoly(1); }
  static QPoly monomial(int degree, long long coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  long long coeff(int k) const;
  const std::vector<long long>& coeffs() const { return c_; }

  long long eval_at_one() const;
  bool nonnegative() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator*(const QPoly& o) const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  bool operator==(const QPoly& o) const = default;

  /// Human form, e.g. "1 + 3q + q^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<long long> c_;
};

/// Integer Laurent polynomial in v = q^{1/2}: sparse-by-offset dense block.
/// Supports the exact arithmetic needed by the canonical-basis recursions.
class VLaurent {
 public:
  VLaurent() = default;
  static VLaurent monomial(int exp, long long coeff = 1);
  /// v^{shift} * P(v^2)
  static VLaurent from_qpoly(const QPoly& p, int shift);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return off_; }
  int max_exp() const { return off_ + static_cast<int>(c_.size()) - 1; }
  long long coeff(int exp) const;

  /// Substitute v -> v^{-1}.
  VLaurent bar() const;

  VLaurent& operator+=(const VLaurent& o);
  VLaurent& operator-=(const VLaurent& o);
  VLaurent& add_scaled(const VLaurent& o, long long k);  // this += k*o
  VLaurent operator*(const VLaurent& o) const;
  VLaurent& operator*=(const VLaurent& o) { return *this = *this * o; }
  friend VLaurent operator+(VLaurent a, const VLaurent& b) { return a += b; }
  friend VLaurent operator-(VLaurent a, const VLaurent& b) { return a -= b; }
  bool operator==(const VLaurent& o) const = default;

  /// Interpret as v^{-shift} * P(v^2) and recover P; throws if the exponents
  /// do not fit that shape (parity or range violation) or P has negative
  /// coefficients and `require_nonneg` is set.
  QPoly to_qpoly(int shift, bool require_nonneg) const;

  std::string str() const;

 private:
  void trim();
  int off_ = 0;
  std::vector<long long> c_;  // coeff of v^{off_ + i}
};

}  // namespace clans
