// Jones polynomial of oriented link diagrams in the plane (no punctures),
// and formal sums of oriented diagrams.
#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// Which non-descending crossing the recursion switches first.
enum class SwitchPolicy { first_offending, last_offending };

/// Recursion measure (crossings, non-descending crossings) at every visited diagram.
using MeasureLog = std::vector<std::pair<int, int>>;

/// V(unknot) = 1. Requires a closed, oriented diagram without punctures.
JonesPoly jones_polynomial(const SlicedDiagram& d, SwitchPolicy policy = SwitchPolicy::first_offending);

/// Uncached evaluation; when `log` is given, every recursion step appends
/// the measure of the diagram it expands.
JonesPoly jones_polynomial_uncached(const SlicedDiagram& d, SwitchPolicy policy = SwitchPolicy::first_offending,
                                    MeasureLog* log = nullptr);

void set_jones_cache_capacity(std::size_t entries);

/// Non-descending crossings (event indices) for the canonical base points,
/// in traversal order.
std::vector<int> non_descending_crossings(const SlicedDiagram& d);

/// Element of the free module on oriented diagrams. All keys share one
/// signature: arities, puncture count and boundary directions.
class FormalTangleSum {
 public:
  using TermMap = std::map<SlicedDiagram, LaurentPoly>;

  FormalTangleSum() = default;
  static FormalTangleSum of(const SlicedDiagram& d, const LaurentPoly& coeff = LaurentPoly(1));

  void add(const SlicedDiagram& d, const LaurentPoly& coeff);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalTangleSum& operator+=(const FormalTangleSum& rhs);
  FormalTangleSum& operator-=(const FormalTangleSum& rhs);
  friend FormalTangleSum operator+(FormalTangleSum a, const FormalTangleSum& b) { return a += b; }
  friend FormalTangleSum operator-(FormalTangleSum a, const FormalTangleSum& b) { return a -= b; }
  FormalTangleSum scaled(const LaurentPoly& c) const;
  friend bool operator==(const FormalTangleSum&, const FormalTangleSum&) = default;

 private:
  TermMap terms_;
};

/// A^4 K+ - A^-4 K- - (A^-2 - A^2) K0 as a formal sum.
FormalTangleSum jones_relation_element(const SkeinTriple& t);

inline LaurentPoly scale_value(const LaurentPoly& c, const LaurentPoly& v) { return c * v; }
inline BracketElement scale_value(const LaurentPoly& c, const BracketElement& v) { return v.scaled(c); }

/// Whether `eval` satisfies A^4 E(K+) - A^-4 E(K-) = (A^-2 - A^2) E(K0) exactly.
/// `eval` returns a LaurentPoly or a BracketElement.
template <class Eval>
bool jones_relation_check(const SkeinTriple& t, Eval&& eval) {
  const auto plus = eval(t.plus);
  const auto minus = eval(t.minus);
  const auto zero = eval(t.zero);
  const auto lhs = scale_value(LaurentPoly::var(4), plus) - scale_value(LaurentPoly::var(-4), minus);
  const auto rhs = scale_value(LaurentPoly::var(-2) - LaurentPoly::var(2), zero);
  return lhs == rhs;
}

/// The Jones evaluator as a map into Z[A^-1, A] (s = A^-2).
LaurentPoly jones_in_a(const SlicedDiagram& d);

/// V(add_kink(D, +-1)) == V(D) for both signs. The kink goes on
/// first_strand_location(D) unless `loc` is given.
bool framing_insensitivity_check(const SlicedDiagram& d, std::optional<Location> loc = std::nullopt);

}  // namespace skein
