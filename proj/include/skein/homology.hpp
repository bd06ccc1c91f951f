// Homology presentations of the supported 3-manifolds, the affine set of
// tangle classes, and the writhe indeterminacy omega.
#pragma once

#include <string>
#include <vector>

namespace skein {

enum class ManifoldKind { handlebody, surface_times_interval, ball, custom };

enum class SurfaceMarking { vertical_pair, same_side_pair, empty };

/// (H_1, H_2, intersection pairing) for a marked manifold. H_1 has free rank
/// `free_rank` plus the listed torsion factors; H_2 is free of rank
/// `h2_rank`. `pairing[j][k]` pairs the j-th free H_1 generator with the k-th
/// H_2 generator, and `base_pairing[k]` pairs the base class alpha_0 with it.
struct ManifoldHomologyData {
  int free_rank = 0;
  std::vector<int> torsion;
  int h2_rank = 0;
  std::vector<std::vector<long>> pairing;
  std::vector<long> base_pairing;
  std::string label;
  ManifoldKind kind = ManifoldKind::custom;
  int genus = 0;  // handlebody genus or surface genus, when meaningful

  /// Throws SkeinError on shape or range violations.
  void check() const;
  friend bool operator==(const ManifoldHomologyData&, const ManifoldHomologyData&) = default;
};

/// A class in h_1(M,P), stored as alpha_0 + gamma with gamma in H_1.
struct HomClass {
  std::vector<long> free_part;
  std::vector<long> torsion_part;

  /// Mod-2 reduction of the free part followed by the torsion part.
  std::vector<int> mod2() const;
  friend bool operator==(const HomClass&, const HomClass&) = default;
  friend auto operator<=>(const HomClass&, const HomClass&) = default;
};

ManifoldHomologyData handlebody(int genus);
ManifoldHomologyData surface_times_interval(int genus, SurfaceMarking marking);
ManifoldHomologyData ball();

/// Parses "handlebody:2", "sigma-times-i:1:vertical_pair", "ball".
ManifoldHomologyData parse_manifold_preset(const std::string& selector);

/// Builds a class with a zero torsion part sized for `data`.
HomClass free_class(const ManifoldHomologyData& data, std::vector<long> free_part);

/// Non-negative generator of iota(alpha (x) H_2) in Z: the gcd of the
/// entries of base_pairing + pairing^T gamma. Torsion never contributes.
long omega(const ManifoldHomologyData& data, const HomClass& alpha);

/// Boundary connected sum of two handlebody-type presentations.
ManifoldHomologyData glue_data(const ManifoldHomologyData& d1, const ManifoldHomologyData& d2);
/// The gluing map on classes: concatenation.
HomClass glue_classes(const HomClass& a1, const HomClass& a2);

/// True iff omega_glued divides gcd(omega1, omega2), with gcd(0, x) = x and
/// every integer dividing 0.
bool gcd_bound_check(long omega1, long omega2, long omega_glued);

}  // namespace skein
