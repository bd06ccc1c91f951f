// The Kauffman map on oriented framed diagrams, the framing class modulo
// 2 omega, and cross-checks between the Jones and bracket sides.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/bracket.hpp"
#include "skein/diagram.hpp"
#include "skein/homology.hpp"
#include "skein/jones.hpp"

namespace skein {

struct KappaImage {
  HomClass alpha;
  std::vector<int> tag;  // alpha mod 2
  long omega = 0;
  int reduction = 0;     // 3 * omega
  int writhe = 0;
  BracketElement value;
  SlicedDiagram reference;

  friend bool operator==(const KappaImage&, const KappaImage&) = default;
};

/// The homology class of D read in `data`; requires data.free_rank == g.
HomClass diagram_class(const SlicedDiagram& d, const ManifoldHomologyData& data);

/// (-A)^(-3 w(D)) <D> in R_(3 omega(alpha)).
KappaImage kappa(const SlicedDiagram& d, const ManifoldHomologyData& data);

/// Linear extension; every term must land in the same reduced ring.
BracketElement kappa(const FormalTangleSum& s, const ManifoldHomologyData& data);

struct PrzytyckiClass {
  HomClass alpha;
  long omega = 0;
  long exponent = 0;  // in [0, 2 omega) when omega > 0
  SlicedDiagram reference;

  friend bool operator==(const PrzytyckiClass&, const PrzytyckiClass&) = default;
};

PrzytyckiClass przytycki_class(const SlicedDiagram& d, const ManifoldHomologyData& data);

/// Both sides of Kauffman's formula for a closed oriented diagram without
/// punctures: {substituted normalized bracket, Jones polynomial}.
std::pair<JonesPoly, JonesPoly> kauffman_formula_sides(const SlicedDiagram& d);
bool kauffman_formula_check(const SlicedDiagram& d);

struct GlueReport {
  bool ok = false;
  bool writhe_additive = false;
  bool gcd_bound = false;
  bool commutes = false;
  long omega1 = 0, omega2 = 0, omega_glued = 0;
  std::string detail;
};

/// Compares kappa of the glued diagram with the glued kappa images, routed
/// through R_(3 gcd(omega1, omega2)). Gluing data defaults to glue_data(data1, data2).
GlueReport glue_compat_report(const SlicedDiagram& d1, const SlicedDiagram& d2, GlueMode mode,
                              const ManifoldHomologyData& data1, const ManifoldHomologyData& data2,
                              const std::optional<ManifoldHomologyData>& glued_data = std::nullopt);
bool glue_compat_check(const SlicedDiagram& d1, const SlicedDiagram& d2, GlueMode mode,
                       const ManifoldHomologyData& data1, const ManifoldHomologyData& data2);

/// Stacks two g = 0 elements: matchings compose, closed middle loops give delta.
/// `middle` is the number of shared boundary points.
BracketElement compose_matchings(const BracketElement& lower, int lower_bottom, int middle,
                                 const BracketElement& upper, int upper_top);

/// The oriented crossingless diagram used to hit a basis element.
SlicedDiagram canonical_diagram(const LaminarMulticurve& m, int genus);

}  // namespace skein
