// Exact arithmetic in Z[A^-1, A], its quotients Z[A^-1, A] / (A^-n - A^n),
// and the Jones variable s = t^(1/2).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

using Integer = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in one variable with arbitrary-precision
/// integer coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit integer embedding is intended

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  /// A^e.
  static LaurentPoly var(int exponent = 1) { return monomial(1, exponent); }
  /// The loop value -A^2 - A^-2.
  static LaurentPoly delta();
  /// (-A)^k.
  static LaurentPoly unit_power(int k);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Multiply by A^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient by `divisor`, or nullopt if the division leaves a
  /// remainder. Throws on division by zero.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Terms in decreasing exponent order, e.g. "-A^4 + 2 - A^-4".
  std::string to_string(std::string_view var_name = "A") const;

  /// Adds c * A^e, dropping the entry if it cancels.
  void add_term(int exponent, const Integer& coeff);

 private:
  TermMap terms_;
};

/// Element of R_n = Z[A^-1, A] / (A^-n - A^n). Because A is a unit the ideal
/// equals (A^2n - 1), so for n > 0 every exponent is kept in [0, 2n).
/// For n = 0 no reduction happens and the value is a plain Laurent polynomial.
class ReducedScalar {
 public:
  ReducedScalar() = default;
  ReducedScalar(const LaurentPoly& value, int index);

  int index() const { return index_; }
  const LaurentPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  ReducedScalar& operator+=(const ReducedScalar& rhs);
  ReducedScalar& operator-=(const ReducedScalar& rhs);
  ReducedScalar& operator*=(const ReducedScalar& rhs);
  ReducedScalar operator-() const { return {-value_, index_}; }

  friend ReducedScalar operator+(ReducedScalar lhs, const ReducedScalar& rhs) { return lhs += rhs; }
  friend ReducedScalar operator-(ReducedScalar lhs, const ReducedScalar& rhs) { return lhs -= rhs; }
  friend ReducedScalar operator*(ReducedScalar lhs, const ReducedScalar& rhs) { return lhs *= rhs; }
  friend ReducedScalar operator*(const LaurentPoly& lhs, const ReducedScalar& rhs) {
    return ReducedScalar(lhs, rhs.index_) * rhs;
  }
  friend bool operator==(const ReducedScalar&, const ReducedScalar&) = default;

  std::string to_string() const;

 private:
  void check_same_index(const ReducedScalar& rhs) const;

  int index_ = 0;
  LaurentPoly value_;
};

ReducedScalar reduce_mod(const LaurentPoly& p, int n);

/// The projection R_n -> R_m; requires m | n (every m divides 0).
ReducedScalar project_reduced(const ReducedScalar& x, int m);

/// Polynomial in s = t^(1/2) with integer exponents.
class JonesPoly {
 public:
  JonesPoly() = default;
  explicit JonesPoly(LaurentPoly in_s) : in_s_(std::move(in_s)) {}

  const LaurentPoly& in_s() const { return in_s_; }
  bool is_zero() const { return in_s_.is_zero(); }

  friend JonesPoly operator+(const JonesPoly& a, const JonesPoly& b) { return JonesPoly(a.in_s_ + b.in_s_); }
  friend JonesPoly operator-(const JonesPoly& a, const JonesPoly& b) { return JonesPoly(a.in_s_ - b.in_s_); }
  friend JonesPoly operator*(const JonesPoly& a, const JonesPoly& b) { return JonesPoly(a.in_s_ * b.in_s_); }
  friend bool operator==(const JonesPoly&, const JonesPoly&) = default;

  /// "-s^-1 - s".
  std::string to_string() const { return in_s_.to_string("s"); }
  /// Display in powers of t, e.g. "-t^-4 + t^-3 + t^-1" or "-t^(1/2) - t^(-1/2)".
  std::string to_t_string() const;

 private:
  LaurentPoly in_s_;
};

/// c A^e -> c s^(-e/2), realizing t^(1/2) = A^-2. Throws SkeinError
/// "non-integral half-power of t" if some exponent is odd.
JonesPoly substitute_jones_var(const LaurentPoly& p);

/// Inverse direction s -> A^-2, so Jones values can be compared inside Z[A^-1, A].
LaurentPoly jones_to_laurent(const JonesPoly& v);

}  // namespace skein
