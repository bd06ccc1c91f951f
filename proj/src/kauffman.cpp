#include "skein/kauffman.hpp"

#include <climits>
#include <numeric>

#include "skein/error.hpp"

namespace skein {

namespace {

int reduction_index(long omega_value) {
  if (omega_value > INT_MAX / 3) throw SkeinError("writhe indeterminacy too large for a reduction index");
  return static_cast<int>(3 * omega_value);
}

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

HomClass diagram_class(const SlicedDiagram& d, const ManifoldHomologyData& data) {
  if (!d.oriented()) throw SkeinError("an oriented diagram is required");
  validate(d);
  const int g = d.puncture_count();
  if (data.free_rank != g)
    throw SkeinError("dimension mismatch: diagram has " + std::to_string(g) + " punctures but H_1 has free rank " +
                     std::to_string(data.free_rank));
  return free_class(data, winding_vector(d));
}

KappaImage kappa(const SlicedDiagram& d, const ManifoldHomologyData& data) {
  KappaImage img;
  img.alpha = diagram_class(d, data);
  img.tag = img.alpha.mod2();
  img.omega = omega(data, img.alpha);
  img.reduction = reduction_index(img.omega);
  img.writhe = writhe(d);
  img.value = bracket_resolve(d, img.reduction).scaled(LaurentPoly::unit_power(-3 * img.writhe));
  img.reference = reference_tangle(img.alpha.free_part);
  return img;
}

BracketElement kappa(const FormalTangleSum& s, const ManifoldHomologyData& data) {
  std::optional<BracketElement> total;
  for (const auto& [d, c] : s.terms()) {
    const BracketElement term = kappa(d, data).value.scaled(c);
    if (!total) total = term;
    else *total += term;
  }
  return total.value_or(BracketElement(0));
}

PrzytyckiClass przytycki_class(const SlicedDiagram& d, const ManifoldHomologyData& data) {
  PrzytyckiClass p;
  p.alpha = diagram_class(d, data);
  p.omega = omega(data, p.alpha);
  p.reference = reference_tangle(p.alpha.free_part);
  const long shift = static_cast<long>(writhe(d)) - writhe(p.reference);
  p.exponent = p.omega > 0 ? floor_mod(shift, 2 * p.omega) : shift;
  return p;
}

std::pair<JonesPoly, JonesPoly> kauffman_formula_sides(const SlicedDiagram& d) {
  if (!d.oriented() || !d.closed() || d.puncture_count() != 0)
    throw SkeinError("Kauffman's formula needs a closed oriented diagram without punctures");
  const int w = writhe(d);
  const LaurentPoly normalized =
      LaurentPoly::unit_power(-3 * w) * bracket_resolve(d, 0, Normalization::classical).scalar();
  return {substitute_jones_var(normalized), jones_polynomial(d)};
}

bool kauffman_formula_check(const SlicedDiagram& d) {
  const auto [via_bracket, via_skein] = kauffman_formula_sides(d);
  return via_bracket == via_skein;
}

BracketElement compose_matchings(const BracketElement& lower, int lower_bottom, int middle,
                                 const BracketElement& upper, int upper_top) {
  if (lower.reduction() != upper.reduction()) throw SkeinError("compose_matchings: different rings");
  const int b = lower_bottom;
  const int total = b + middle + upper_top;
  const LaurentPoly delta = LaurentPoly::delta();
  BracketElement out(lower.reduction());
  for (const auto& [kl, vl] : lower.terms()) {
    for (const auto& [ku, vu] : upper.terms()) {
      if (!kl.curves.empty() || !ku.curves.empty()) throw SkeinError("compose_matchings needs g = 0 elements");
      // Node ids: lower bottom 0..b-1, middle b..b+middle-1, upper top after that.
      std::vector<std::vector<int>> adj(total);
      for (const auto& [i, j] : kl.matching) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
      for (const auto& [i, j] : ku.matching) {
        adj[i + b].push_back(j + b);
        adj[j + b].push_back(i + b);
      }
      std::vector<char> seen(total, 0);
      auto is_boundary = [&](int v) { return v < b || v >= b + middle; };
      auto relabel = [&](int v) { return v < b ? v : v - middle; };
      std::vector<std::pair<int, int>> pairs;
      for (int v = 0; v < total; ++v) {
        if (!is_boundary(v) || seen[v]) continue;
        int prev = -1, cur = v;
        seen[cur] = 1;
        while (true) {
          int next = -1;
          for (int w : adj[cur])
            if (w != prev || adj[cur].size() == 1) next = w;
          if (next < 0) throw SkeinError("compose_matchings: dangling boundary point");
          prev = cur;
          cur = next;
          seen[cur] = 1;
          if (is_boundary(cur)) break;
        }
        pairs.emplace_back(relabel(v), relabel(cur));
      }
      int loops = 0;
      for (int v = b; v < b + middle; ++v) {
        if (seen[v]) continue;
        ++loops;
        int prev = -1, cur = v;
        while (!seen[cur]) {
          seen[cur] = 1;
          const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = next;
        }
      }
      LaurentPoly c = vl.value() * vu.value();
      for (int k = 0; k < loops; ++k) c *= delta;
      out.add(LaminarMulticurve::from_matching(std::move(pairs)), c);
    }
  }
  return out;
}

GlueReport glue_compat_report(const SlicedDiagram& d1, const SlicedDiagram& d2, GlueMode mode,
                              const ManifoldHomologyData& data1, const ManifoldHomologyData& data2,
                              const std::optional<ManifoldHomologyData>& glued_data) {
  GlueReport r;
  const SlicedDiagram glued = glue_diagrams(d1, d2, mode);
  const ManifoldHomologyData data = glued_data ? *glued_data : glue_data(data1, data2);

  const int w1 = writhe(d1), w2 = writhe(d2), wg = writhe(glued);
  r.writhe_additive = wg == w1 + w2;

  const KappaImage k1 = kappa(d1, data1);
  const KappaImage k2 = kappa(d2, data2);
  const KappaImage kg = kappa(glued, data);
  r.omega1 = k1.omega;
  r.omega2 = k2.omega;
  r.omega_glued = kg.omega;
  r.gcd_bound = gcd_bound_check(k1.omega, k2.omega, kg.omega);

  if (r.gcd_bound) {
    const int via = reduction_index(std::gcd(k1.omega, k2.omega));
    const BracketElement p1 = k1.value.projected(via);
    const BracketElement p2 = k2.value.projected(via);
    const bool planar = d1.puncture_count() == 0 && d2.puncture_count() == 0;
    const BracketElement combined = (planar && mode == GlueMode::stack)
                                        ? compose_matchings(p1, d1.bottom, d1.top, p2, d2.top)
                                        : juxtapose(p1, d1.puncture_count(), p2);
    r.commutes = combined.projected(kg.reduction) == kg.value;
    if (!r.commutes)
      r.detail = "glued image " + kg.value.to_string() + " differs from " + combined.to_string();
  } else {
    r.detail = "omega of the glued class (" + std::to_string(kg.omega) + ") does not divide gcd(" +
               std::to_string(k1.omega) + ", " + std::to_string(k2.omega) + ")";
  }
  if (!r.writhe_additive)
    r.detail = "writhe " + std::to_string(wg) + " != " + std::to_string(w1) + " + " + std::to_string(w2);
  r.ok = r.writhe_additive && r.gcd_bound && r.commutes;
  return r;
}

bool glue_compat_check(const SlicedDiagram& d1, const SlicedDiagram& d2, GlueMode mode,
                       const ManifoldHomologyData& data1, const ManifoldHomologyData& data2) {
  return glue_compat_report(d1, d2, mode, data1, data2).ok;
}

SlicedDiagram canonical_diagram(const LaminarMulticurve& m, int genus) {
  if (!m.matching.empty()) throw SkeinError("canonical_diagram takes closed-case basis elements");
  SlicedDiagram d = laminar_realization(m.curves, genus, std::vector<int>(m.curves.size(), 1));
  if (!d.orientation) d.orientation = Orientation{};
  return d;
}

}  // namespace skein
