#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "skein/error.hpp"
#include "skein/kauffman.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

LaurentPoly A(int e) { return LaurentPoly::var(e); }

SlicedDiagram annulus_pair(int inner_sign) {
  SlicedDiagram d;
  d.events = {Event::cup(0), Event::cup(1), Event::punctures({2}), Event::cap(1), Event::cap(0)};
  d.orientation = Orientation{1, inner_sign};
  return d;
}

// H_2 of rank one paired to 1 with the base class, so omega is 1 for every class.
ManifoldHomologyData unit_omega(int g) {
  ManifoldHomologyData d;
  d.free_rank = g;
  d.h2_rank = 1;
  d.pairing.assign(g, std::vector<long>{0});
  d.base_pairing = {1};
  d.label = "unit-omega";
  return d;
}

SlicedDiagram oriented_tangle(int b, int t, std::vector<Event> events, std::vector<int> bottom, std::vector<int> top) {
  SlicedDiagram d;
  d.bottom = b;
  d.top = t;
  d.events = std::move(events);
  return orient_from_endpoints(std::move(d), bottom, top, {});
}

}  // namespace

TEST_CASE("annulus witness pair") {
  const auto data = handlebody(1);
  const auto z2 = LaminarMulticurve::from_curves({{1}, {1}});
  const KappaImage opposite = kappa(annulus_pair(-1), data);
  const KappaImage parallel = kappa(annulus_pair(1), data);
  CHECK(opposite.alpha.free_part == std::vector<long>{0});
  CHECK(std::abs(parallel.alpha.free_part[0]) == 2);
  for (const KappaImage* k : {&opposite, &parallel}) {
    CHECK(k->omega == 0);
    CHECK(k->reduction == 0);
    CHECK(k->writhe == 0);
    CHECK(k->value.terms().size() == 1);
    CHECK(k->value.coefficient(z2).value() == LaurentPoly(1));
  }
  CHECK(opposite.value == parallel.value);
  CHECK(opposite.tag == parallel.tag);
  CHECK(opposite.tag == std::vector<int>{0});
}

TEST_CASE("kappa undoes the framing factor") {
  const auto data = handlebody(0);
  const auto k = add_kink(unknot(), first_strand_location(unknot()), 1);
  CHECK(kappa(k, data).value == kappa(unknot(), data).value);
  CHECK(kappa(unknot(), data).value.scalar() == LaurentPoly::delta());
  CHECK(kappa(left_trefoil(), data).value.scalar() ==
        (A(7) - A(3) - A(-5)) * LaurentPoly::delta() * LaurentPoly::unit_power(9));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(kappa(left_trefoil(), handlebody(1)), SkeinError);
  CHECK_THROWS_AS(kappa(unknot().unoriented(), handlebody(0)), SkeinError);
  CHECK_THROWS_AS(kauffman_formula_check(core_circle(1)), SkeinError);
}

TEST_CASE("kappa respects the Jones relation") {
  Gen gen(51);
  for (int k = 0; k < 150; ++k) {
    const int g = k % 3;
    const auto data = handlebody(g);
    const SlicedDiagram d = with_crossing(gen.diagram(6, g));
    const auto xs = crossing_events(d);
    const auto t = skein_triple(d, xs[gen.uniform(0, static_cast<int>(xs.size()) - 1)]);
    CHECK(jones_relation_check(t, [&](const SlicedDiagram& x) { return kappa(x, data).value; }));
    CHECK(kappa(jones_relation_element(t), data).is_zero());
  }
}

TEST_CASE("kappa relation in a reduced ring") {
  Gen gen(52);
  const auto data = unit_omega(1);
  for (int k = 0; k < 60; ++k) {
    const SlicedDiagram d = with_crossing(gen.diagram(5, 1));
    const auto xs = crossing_events(d);
    const auto t = skein_triple(d, xs[gen.uniform(0, static_cast<int>(xs.size()) - 1)]);
    const KappaImage kz = kappa(t.zero, data);
    CHECK(kz.reduction == 3);
    CHECK(kz.value == kappa(t.zero, handlebody(1)).value.projected(3));
    CHECK(jones_relation_check(t, [&](const SlicedDiagram& x) { return kappa(x, data).value; }));
  }
}

TEST_CASE("kappa is framing and unknot coherent") {
  Gen gen(53);
  for (int k = 0; k < 100; ++k) {
    const int g = k % 3;
    const auto data = handlebody(g);
    const SlicedDiagram d = with_strand(gen.diagram(6, g));
    const auto base = kappa(d, data);
    for (int s : {1, -1}) CHECK(kappa(add_kink(d, first_strand_location(d), s), data).value == base.value);
    CHECK(kappa(disjoint_unknot(d), data).value == base.value.scaled(LaurentPoly::delta()));
  }
}

TEST_CASE("surface times interval data reduces mod 3") {
  const auto data = surface_times_interval(1, SurfaceMarking::vertical_pair);
  Gen gen(54);
  for (int k = 0; k < 20; ++k) {
    const SlicedDiagram d = gen.diagram(5, 2);
    const KappaImage img = kappa(d, data);
    CHECK(img.omega == 1);
    CHECK(img.reduction == 3);
    for (const auto& [key, c] : img.value.terms()) {
      CHECK(c.index() == 3);
      CHECK(c.value().min_exponent() >= 0);
      CHECK(c.value().max_exponent() < 6);
    }
  }
}

TEST_CASE("przytycki exponent bookkeeping") {
  Gen gen(55);
  for (int k = 0; k < 100; ++k) {
    const int g = k % 3;
    const auto data = handlebody(g);
    const SlicedDiagram d = with_crossing(gen.diagram(6, g));
    const auto xs = crossing_events(d);
    const auto t = skein_triple(d, xs[gen.uniform(0, static_cast<int>(xs.size()) - 1)]);
    const auto p0 = przytycki_class(t.zero, data);
    CHECK(przytycki_class(t.plus, data).exponent == p0.exponent + 1);
    CHECK(przytycki_class(t.minus, data).exponent == p0.exponent - 1);
    CHECK(przytycki_class(t.plus, data).alpha == p0.alpha);
    const auto pd = przytycki_class(d, data);
    CHECK(przytycki_class(add_kink(d, first_strand_location(d), 1), data).exponent == pd.exponent + 1);
    CHECK(przytycki_class(disjoint_unknot(d), data) == pd);
    CHECK(pd.reference == reference_tangle(pd.alpha.free_part));
  }
}

TEST_CASE("przytycki exponents are mod 2 when omega is 1") {
  Gen gen(56);
  for (int k = 0; k < 60; ++k) {
    const int g = k % 3;
    const auto data = unit_omega(g);
    const SlicedDiagram d = with_strand(gen.diagram(6, g));
    const auto p = przytycki_class(d, data);
    CHECK(p.omega == 1);
    CHECK((p.exponent == 0 || p.exponent == 1));
    const auto once = add_kink(d, first_strand_location(d), 1);
    const auto twice = add_kink(once, first_strand_location(once), 1);
    CHECK(przytycki_class(once, data).exponent == 1 - p.exponent);
    CHECK(przytycki_class(twice, data) == p);
  }
}

TEST_CASE("Kauffman formula") {
  CHECK(kauffman_formula_check(unknot()));
  const auto [bracket_side, jones_side] = kauffman_formula_sides(left_trefoil());
  CHECK(bracket_side == jones_side);
  CHECK(bracket_side.to_t_string() == "t^-1 + t^-3 - t^-4");
  CHECK(kauffman_formula_check(figure_eight()));
  CHECK(kauffman_formula_check(hopf({1, -1})));
  Gen gen(57);
  for (int k = 0; k < 200; ++k) CHECK(kauffman_formula_check(gen.diagram(8, 0)));
}

TEST_CASE("stacked crossings glue compatibly") {
  const SlicedDiagram x = oriented_tangle(2, 2, {Event::cross(0, Over::left)}, {1, 1}, {1, 1});
  const SlicedDiagram y = oriented_tangle(2, 2, {Event::cross(0, Over::right)}, {1, 1}, {1, 1});
  const GlueReport r = glue_compat_report(x, y, GlueMode::stack, handlebody(0), handlebody(0));
  CHECK(r.ok);
  CHECK(r.writhe_additive);
  CHECK(r.gcd_bound);
  CHECK(r.commutes);
  CHECK(glue_compat_check(x, x, GlueMode::stack, handlebody(0), handlebody(0)));
}

TEST_CASE("side by side core circles") {
  const auto glued = glue_diagrams(core_circle(1), core_circle(1), GlueMode::side_by_side);
  const KappaImage k = kappa(glued, handlebody(2));
  CHECK(k.value.terms().size() == 1);
  CHECK(k.value.coefficient(LaminarMulticurve::from_curves({{1}, {2}})).value() == LaurentPoly(1));
  CHECK(glue_compat_check(core_circle(1), core_circle(1), GlueMode::side_by_side, handlebody(1), handlebody(1)));
}

TEST_CASE("random side by side gluings") {
  Gen gen(58);
  for (int k = 0; k < 60; ++k) {
    const int g1 = gen.uniform(0, 2), g2 = gen.uniform(0, 2);
    const SlicedDiagram a = gen.diagram(4, g1), b = gen.diagram(4, g2);
    const GlueReport r = glue_compat_report(a, b, GlueMode::side_by_side, handlebody(g1), handlebody(g2));
    CHECK(r.ok);
    CHECK(r.omega_glued == 0);
  }
}

TEST_CASE("gluing through a reduced ring") {
  const auto data = unit_omega(1);
  const GlueReport r =
      glue_compat_report(core_circle(1), annulus_pair(-1), GlueMode::side_by_side, data, data, unit_omega(2));
  CHECK(r.omega1 == 1);
  CHECK(r.omega2 == 1);
  CHECK(r.omega_glued == 1);
  CHECK(r.gcd_bound);
  CHECK(r.ok);
}

TEST_CASE("matching composition") {
  const BracketElement cup = bracket_resolve(SlicedDiagram{0, 2, {Event::cup(0)}, std::nullopt});
  const BracketElement cap = bracket_resolve(SlicedDiagram{2, 0, {Event::cap(0)}, std::nullopt});
  const BracketElement loop = compose_matchings(cup, 0, 2, cap, 0);
  CHECK(loop.is_scalar());
  CHECK(loop.scalar() == LaurentPoly::delta());

  const BracketElement id = bracket_resolve(SlicedDiagram{2, 2, {}, std::nullopt});
  const BracketElement x = bracket_resolve(SlicedDiagram{2, 2, {Event::cross(0, Over::left)}, std::nullopt});
  CHECK(compose_matchings(id, 2, 2, x, 2) == x);
  CHECK(compose_matchings(x, 2, 2, id, 2) == x);
  const BracketElement xx =
      bracket_resolve(SlicedDiagram{2, 2, {Event::cross(0, Over::left), Event::cross(0, Over::left)}, std::nullopt});
  CHECK(compose_matchings(x, 2, 2, x, 2) == xx);
}

TEST_CASE("basis elements are hit with unit coefficient") {
  for (int g = 0; g <= 2; ++g) {
    for (const auto& m : laminar_basis(g, 2)) {
      const SlicedDiagram d = canonical_diagram(m, g);
      const KappaImage k = kappa(d, handlebody(g));
      CHECK(k.value.terms().size() == 1);
      CHECK(k.value.coefficient(m).value() == LaurentPoly(1));
    }
  }
}
