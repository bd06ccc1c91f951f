#include "skein/laurent.hpp"

#include <numeric>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

namespace {

// Floor modulus for possibly negative exponents.
int floor_mod(int e, int m) {
  int r = e % m;
  return r < 0 ? r + m : r;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::delta() { return monomial(-1, 2) + monomial(-1, -2); }

LaurentPoly LaurentPoly::unit_power(int k) { return monomial(k % 2 == 0 ? 1 : -1, k); }

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw SkeinError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw SkeinError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw SkeinError("division by the zero polynomial");
  // Long division from the top degree down.
  LaurentPoly rem = *this;
  LaurentPoly quotient;
  if (rem.is_zero()) return quotient;
  const int dtop = divisor.max_exponent();
  const int dlow = divisor.min_exponent();
  // An exact quotient has lowest exponent min(this) - min(divisor).
  const int qmin = rem.min_exponent() - dlow;
  const Integer& lead = divisor.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const int rtop = rem.max_exponent();
    if (rtop - dtop < qmin) return std::nullopt;
    const Integer& rc = rem.terms_.rbegin()->second;
    if (rc % lead != 0) return std::nullopt;
    LaurentPoly step = monomial(rc / lead, rtop - dtop);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

std::string LaurentPoly::to_string(std::string_view var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var_name;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

ReducedScalar::ReducedScalar(const LaurentPoly& value, int index) : index_(index) {
  if (index < 0) throw SkeinError("reduction index must be nonnegative");
  if (index == 0) {
    value_ = value;
    return;
  }
  const int period = 2 * index;
  for (const auto& [e, c] : value.terms()) value_.add_term(floor_mod(e, period), c);
}

void ReducedScalar::check_same_index(const ReducedScalar& rhs) const {
  if (index_ != rhs.index_)
    throw SkeinError("reduced scalars live in different rings R_" + std::to_string(index_) +
                     " and R_" + std::to_string(rhs.index_));
}

ReducedScalar& ReducedScalar::operator+=(const ReducedScalar& rhs) {
  check_same_index(rhs);
  value_ += rhs.value_;
  return *this;
}

ReducedScalar& ReducedScalar::operator-=(const ReducedScalar& rhs) {
  check_same_index(rhs);
  value_ -= rhs.value_;
  return *this;
}

ReducedScalar& ReducedScalar::operator*=(const ReducedScalar& rhs) {
  check_same_index(rhs);
  *this = ReducedScalar(value_ * rhs.value_, index_);
  return *this;
}

std::string ReducedScalar::to_string() const {
  if (index_ == 0) return value_.to_string();
  return value_.to_string() + " (mod A^" + std::to_string(2 * index_) + " - 1)";
}

ReducedScalar reduce_mod(const LaurentPoly& p, int n) { return ReducedScalar(p, n); }

ReducedScalar project_reduced(const ReducedScalar& x, int m) {
  if (m < 0) throw SkeinError("reduction index must be nonnegative");
  const int n = x.index();
  const bool divides = (n == 0) ? true : (m != 0 && n % m == 0);
  if (!divides)
    throw SkeinError("cannot project R_" + std::to_string(n) + " to R_" + std::to_string(m) + ": " +
                     std::to_string(m) + " does not divide " + std::to_string(n));
  return ReducedScalar(x.value(), m);
}

std::string JonesPoly::to_t_string() const {
  if (in_s_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& terms = in_s_.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e % 2 == 0) {
      if (e != 2) os << '^' << e / 2;
    } else {
      os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

JonesPoly substitute_jones_var(const LaurentPoly& p) {
  LaurentPoly s;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw SkeinError("non-integral half-power of t (A^" + std::to_string(e) + ")");
    s.add_term(-e / 2, c);
  }
  return JonesPoly(std::move(s));
}

LaurentPoly jones_to_laurent(const JonesPoly& v) {
  LaurentPoly out;
  for (const auto& [e, c] : v.in_s().terms()) out.add_term(-2 * e, c);
  return out;
}

}  // namespace skein
