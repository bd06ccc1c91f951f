// Seeded random inputs for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::uint64_t next() { return rng_(); }

  LaurentPoly poly(int max_terms = 5, int span = 12, int coeff = 9) {
    LaurentPoly p;
    const int n = uniform(0, max_terms);
    for (int k = 0; k < n; ++k) p.add_term(uniform(-span, span), uniform(-coeff, coeff));
    return p;
  }

  SlicedDiagram diagram(int max_crossings, int genus, int bottom = 0, int top = 0, bool oriented = true) {
    RandomParams p;
    p.max_crossings = max_crossings;
    p.genus = genus;
    p.bottom = bottom;
    p.top = top;
    p.oriented = oriented;
    return random_diagram(next(), p);
  }

 private:
  std::mt19937_64 rng_;
};

inline SlicedDiagram with_strand(SlicedDiagram d) {
  const auto w = level_widths(d);
  for (int x : w)
    if (x > 0) return d;
  return disjoint_unknot(d);
}

inline SlicedDiagram with_crossing(SlicedDiagram d) {
  d = with_strand(std::move(d));
  if (d.crossing_count() == 0) d = add_kink(d, first_strand_location(d), 1);
  return d;
}

inline std::vector<int> crossing_events(const SlicedDiagram& d) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(d.events.size()); ++i)
    if (d.events[i].kind == EventKind::cross) out.push_back(i);
  return out;
}

}  // namespace skein::testing
