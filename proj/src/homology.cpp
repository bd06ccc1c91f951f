#include "skein/homology.hpp"

#include <numeric>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_nonnegative(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) throw SkeinError("invalid " + what + " '" + text + "'");
  return value;
}

bool is_handlebody_like(const ManifoldHomologyData& d) {
  return d.kind == ManifoldKind::handlebody || d.kind == ManifoldKind::ball;
}

}  // namespace

void ManifoldHomologyData::check() const {
  if (free_rank < 0 || h2_rank < 0) throw SkeinError("homology ranks must be nonnegative");
  for (int t : torsion)
    if (t < 2) throw SkeinError("torsion invariant factors must be at least 2");
  if (static_cast<int>(pairing.size()) != free_rank)
    throw SkeinError("pairing matrix must have one row per free H_1 generator");
  for (const auto& row : pairing)
    if (static_cast<int>(row.size()) != h2_rank)
      throw SkeinError("pairing matrix rows must have one entry per H_2 generator");
  if (static_cast<int>(base_pairing.size()) != h2_rank)
    throw SkeinError("base pairing vector must have one entry per H_2 generator");
}

std::vector<int> HomClass::mod2() const {
  std::vector<int> out;
  out.reserve(free_part.size() + torsion_part.size());
  for (long x : free_part) out.push_back(static_cast<int>(((x % 2) + 2) % 2));
  for (long x : torsion_part) out.push_back(static_cast<int>(((x % 2) + 2) % 2));
  return out;
}

ManifoldHomologyData handlebody(int genus) {
  if (genus < 0) throw SkeinError("handlebody genus must be nonnegative");
  ManifoldHomologyData d;
  d.free_rank = genus;
  d.pairing.assign(genus, {});
  d.label = "handlebody:" + std::to_string(genus);
  d.kind = ManifoldKind::handlebody;
  d.genus = genus;
  return d;
}

ManifoldHomologyData surface_times_interval(int genus, SurfaceMarking marking) {
  if (genus < 0) throw SkeinError("surface genus must be nonnegative");
  ManifoldHomologyData d;
  d.free_rank = 2 * genus;
  d.h2_rank = 1;
  // Horizontal classes miss the middle surface; only a vertical arc meets it.
  d.pairing.assign(2 * genus, std::vector<long>{0});
  d.base_pairing = {marking == SurfaceMarking::vertical_pair ? 1L : 0L};
  const char* mark = marking == SurfaceMarking::vertical_pair    ? "vertical_pair"
                     : marking == SurfaceMarking::same_side_pair ? "same_side_pair"
                                                                 : "empty";
  d.label = "sigma-times-i:" + std::to_string(genus) + ":" + mark;
  d.kind = ManifoldKind::surface_times_interval;
  d.genus = genus;
  return d;
}

ManifoldHomologyData ball() {
  ManifoldHomologyData d;
  d.label = "ball";
  d.kind = ManifoldKind::ball;
  return d;
}

ManifoldHomologyData parse_manifold_preset(const std::string& selector) {
  const auto parts = split(selector, ':');
  if (parts.empty()) throw SkeinError("empty manifold selector");
  if (parts[0] == "ball" && parts.size() == 1) return ball();
  if (parts[0] == "handlebody" && parts.size() == 2)
    return handlebody(parse_nonnegative(parts[1], "handlebody genus"));
  if ((parts[0] == "sigma-times-i" || parts[0] == "surface-times-i") && (parts.size() == 2 || parts.size() == 3)) {
    const int genus = parse_nonnegative(parts[1], "surface genus");
    SurfaceMarking marking = SurfaceMarking::empty;
    if (parts.size() == 3) {
      if (parts[2] == "vertical_pair") marking = SurfaceMarking::vertical_pair;
      else if (parts[2] == "same_side_pair") marking = SurfaceMarking::same_side_pair;
      else if (parts[2] == "empty") marking = SurfaceMarking::empty;
      else throw SkeinError("unknown surface marking '" + parts[2] + "'");
    }
    return surface_times_interval(genus, marking);
  }
  throw SkeinError("unknown manifold selector '" + selector + "'");
}

HomClass free_class(const ManifoldHomologyData& data, std::vector<long> free_part) {
  if (static_cast<int>(free_part.size()) != data.free_rank)
    throw SkeinError("class has " + std::to_string(free_part.size()) + " free entries but H_1 has rank " +
                     std::to_string(data.free_rank));
  HomClass c;
  c.free_part = std::move(free_part);
  c.torsion_part.assign(data.torsion.size(), 0);
  return c;
}

long omega(const ManifoldHomologyData& data, const HomClass& alpha) {
  data.check();
  if (static_cast<int>(alpha.free_part.size()) != data.free_rank)
    throw SkeinError("dimension mismatch: class has " + std::to_string(alpha.free_part.size()) +
                     " free entries, H_1 has rank " + std::to_string(data.free_rank));
  if (alpha.torsion_part.size() != data.torsion.size())
    throw SkeinError("dimension mismatch in torsion part");
  for (std::size_t i = 0; i < data.torsion.size(); ++i)
    if (alpha.torsion_part[i] < 0 || alpha.torsion_part[i] >= data.torsion[i])
      throw SkeinError("torsion residue out of range");
  long g = 0;
  for (int k = 0; k < data.h2_rank; ++k) {
    long entry = data.base_pairing[k];
    for (int j = 0; j < data.free_rank; ++j) entry += data.pairing[j][k] * alpha.free_part[j];
    g = std::gcd(g, entry);
  }
  return g;
}

ManifoldHomologyData glue_data(const ManifoldHomologyData& d1, const ManifoldHomologyData& d2) {
  if (!is_handlebody_like(d1) || !is_handlebody_like(d2))
    throw SkeinError("unsupported gluing: only boundary connected sums of handlebodies are realized");
  return handlebody(d1.free_rank + d2.free_rank);
}

HomClass glue_classes(const HomClass& a1, const HomClass& a2) {
  HomClass out = a1;
  out.free_part.insert(out.free_part.end(), a2.free_part.begin(), a2.free_part.end());
  out.torsion_part.insert(out.torsion_part.end(), a2.torsion_part.begin(), a2.torsion_part.end());
  return out;
}

bool gcd_bound_check(long omega1, long omega2, long omega_glued) {
  const long g = std::gcd(omega1, omega2);
  if (omega_glued == 0) return g == 0;
  return g % omega_glued == 0;
}

}  // namespace skein
