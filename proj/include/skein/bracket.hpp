// Kauffman bracket resolution into the crossingless basis.
//
// Closed diagrams in the g-holed disk resolve to multisets of puncture
// subsets (one subset per essential curve, the punctures it encloses).
// Tangles (g = 0 only) resolve to noncrossing matchings of their b + t
// boundary points, numbered bottom 0..b-1 then top b..b+t-1.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct LaminarMulticurve {
  std::vector<std::vector<int>> curves;         // sorted lists of 1-based puncture labels, sorted
  std::vector<std::pair<int, int>> matching;    // (i, j) with i < j, sorted

  /// Sorts into canonical form; throws SkeinError on empty or non-laminar subsets.
  static LaminarMulticurve from_curves(std::vector<std::vector<int>> curves);
  static LaminarMulticurve from_matching(std::vector<std::pair<int, int>> pairs);

  bool is_empty() const { return curves.empty() && matching.empty(); }
  /// "{{1,2},{1}}" or "[[0,3],[1,2]]"; the empty closed class prints as "{}".
  std::string to_string() const;

  friend bool operator==(const LaminarMulticurve&, const LaminarMulticurve&) = default;
  friend auto operator<=>(const LaminarMulticurve&, const LaminarMulticurve&) = default;
};

bool is_laminar(const std::vector<std::vector<int>>& curves);

struct LaminarClass {
  LaminarMulticurve curve;
  int trivial_loops = 0;
};

/// Basis class of a crossingless diagram.
LaminarClass laminar_class(const SlicedDiagram& d);

/// Finite combination of basis classes with coefficients in R_n.
class BracketElement {
 public:
  using TermMap = std::map<LaminarMulticurve, ReducedScalar>;

  explicit BracketElement(int reduction = 0) : reduction_(reduction) {}

  int reduction() const { return reduction_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LaminarMulticurve& key, const LaurentPoly& coeff);
  ReducedScalar coefficient(const LaminarMulticurve& key) const;

  /// Multiplies every coefficient by `c` (reduced into this element's ring).
  BracketElement scaled(const LaurentPoly& c) const;
  /// Re-reduces into R_m; requires m | reduction().
  BracketElement projected(int m) const;

  BracketElement& operator+=(const BracketElement& rhs);
  BracketElement& operator-=(const BracketElement& rhs);
  friend BracketElement operator+(BracketElement a, const BracketElement& b) { return a += b; }
  friend BracketElement operator-(BracketElement a, const BracketElement& b) { return a -= b; }
  friend bool operator==(const BracketElement&, const BracketElement&) = default;

  /// Coefficient of the empty class when no other class occurs.
  bool is_scalar() const;
  LaurentPoly scalar() const;

  std::string to_string() const;

 private:
  void check_same_ring(const BracketElement& rhs) const;

  int reduction_;
  TermMap terms_;
};

enum class Normalization {
  internal,   // empty diagram -> 1, unknot -> delta
  classical,  // unknot -> 1; one factor delta divided out exactly
};

/// Full resolution. Coefficients are computed in Z[A^-1, A] and reduced into
/// R_n at the end. Results are memoized per diagram (see result_cache.hpp).
BracketElement bracket_resolve(const SlicedDiagram& d, int reduction = 0,
                               Normalization norm = Normalization::internal);

/// Same computation with the memo table bypassed.
BracketElement bracket_resolve_uncached(const SlicedDiagram& d, int reduction = 0,
                                        Normalization norm = Normalization::internal);

/// Sets the bracket memo capacity (0 disables it).
void set_bracket_cache_capacity(std::size_t entries);

/// Direct sum over all 2^c Kauffman states; c <= 24.
BracketElement state_sum_oracle(const SlicedDiagram& d);

/// Image of a (x) b under placing b's punctures after a's `genus_a` punctures.
/// Both elements must be closed-case elements over the same ring.
BracketElement juxtapose(const BracketElement& a, int genus_a, const BracketElement& b);

/// All laminar multisets of at most `max_curves` nonempty subsets of 1..genus.
std::vector<LaminarMulticurve> laminar_basis(int genus, int max_curves);

}  // namespace skein
