#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "skein/bracket.hpp"
#include "skein/error.hpp"

using namespace skein;
using namespace skein::testing;

namespace {

LaurentPoly A(int e) { return LaurentPoly::var(e); }
const LaurentPoly delta = LaurentPoly::delta();

LaminarMulticurve empty_class() { return LaminarMulticurve{}; }

SlicedDiagram crossing_tangle(Over over) {
  SlicedDiagram d;
  d.bottom = 2;
  d.top = 2;
  d.events = {Event::cross(0, over)};
  return d;
}

}  // namespace

TEST_CASE("multicurve normal form") {
  const auto m = LaminarMulticurve::from_curves({{1}, {2, 1}});
  CHECK(m == LaminarMulticurve::from_curves({{1, 2}, {1}}));
  CHECK(m.to_string() == "{{1},{1,2}}");
  CHECK(LaminarMulticurve::from_curves({{1}, {1}}).to_string() == "{{1},{1}}");
  CHECK(empty_class().to_string() == "{}");
  CHECK(LaminarMulticurve::from_matching({{3, 0}, {1, 2}}).to_string() == "[[0,3],[1,2]]");
  CHECK_THROWS_AS(LaminarMulticurve::from_curves({{1, 2}, {2, 3}}), SkeinError);
  CHECK_THROWS_AS(LaminarMulticurve::from_curves({{}}), SkeinError);
  CHECK(is_laminar({{1, 2, 3}, {2}, {1}}));
  CHECK_FALSE(is_laminar({{1, 2}, {2, 3}}));
}

TEST_CASE("laminar class of crossingless diagrams") {
  SlicedDiagram nested;
  nested.events = {Event::cup(0), Event::cup(1), Event::cap(1), Event::cap(0)};
  const auto c = laminar_class(nested);
  CHECK(c.curve.is_empty());
  CHECK(c.trivial_loops == 2);

  SlicedDiagram annulus;
  annulus.events = {Event::cup(0), Event::cup(1), Event::punctures({2}), Event::cap(1), Event::cap(0)};
  const auto z2 = laminar_class(annulus);
  CHECK(z2.curve.to_string() == "{{1},{1}}");
  CHECK(z2.trivial_loops == 0);

  // Outer circle around both punctures, inner circle around the first.
  SlicedDiagram h2;
  h2.events = {Event::cup(0), Event::cup(1), Event::punctures({2, 3}), Event::cap(1), Event::cap(0)};
  CHECK(laminar_class(h2).curve == LaminarMulticurve::from_curves({{1, 2}, {1}}));
  CHECK(laminar_class(laminar_realization({{1, 2}, {1}}, 2)).curve == LaminarMulticurve::from_curves({{1, 2}, {1}}));

  SlicedDiagram beside;
  beside.events = {Event::punctures({0}), Event::cup(0), Event::cap(0)};
  const auto off = laminar_class(beside);
  CHECK(off.curve.is_empty());
  CHECK(off.trivial_loops == 1);

  CHECK_THROWS_AS(laminar_class(left_trefoil()), SkeinError);
}

TEST_CASE("unknot and loop value") {
  const BracketElement u = bracket_resolve(unknot());
  CHECK(u.is_scalar());
  CHECK(u.scalar() == delta);
  CHECK(bracket_resolve(unknot(), 0, Normalization::classical).scalar() == LaurentPoly(1));
  SlicedDiagram nothing;
  CHECK(bracket_resolve(nothing).scalar() == LaurentPoly(1));
}

TEST_CASE("left trefoil") {
  // Value read off the 8-state expansion.
  const LaurentPoly expected = A(7) - A(3) - A(-5);
  CHECK(bracket_resolve(left_trefoil(), 0, Normalization::classical).scalar() == expected);
  CHECK(state_sum_oracle(left_trefoil()).scalar() == expected * delta);
  CHECK(bracket_resolve(trefoil(Over::left), 0, Normalization::classical).scalar() == A(-7) - A(-3) - A(5));
}

TEST_CASE("hopf link and figure eight") {
  CHECK(bracket_resolve(hopf({1, 1}), 0, Normalization::classical).scalar() == -A(4) - A(-4));
  CHECK(bracket_resolve(figure_eight(), 0, Normalization::classical).scalar() ==
        A(8) - A(4) + LaurentPoly(1) - A(-4) + A(-8));
}

TEST_CASE("a kink costs -A^3") {
  const auto k = add_kink(unknot(), first_strand_location(unknot()), 1);
  CHECK(bracket_resolve(k).scalar() == A(5) + A(1));
  CHECK(bracket_resolve(k).scalar() == -A(3) * delta);
  const auto n = add_kink(unknot(), first_strand_location(unknot()), -1);
  CHECK(bracket_resolve(n).scalar() == -A(-3) * delta);
}

TEST_CASE("one crossing tangle") {
  const BracketElement b = bracket_resolve(crossing_tangle(Over::left));
  const auto vertical = LaminarMulticurve::from_matching({{0, 2}, {1, 3}});
  const auto turnback = LaminarMulticurve::from_matching({{0, 1}, {2, 3}});
  CHECK(b.terms().size() == 2);
  CHECK(b.coefficient(vertical).value() == A(1));
  CHECK(b.coefficient(turnback).value() == A(-1));
  const BracketElement r = bracket_resolve(crossing_tangle(Over::right));
  CHECK(r.coefficient(vertical).value() == A(-1));
  CHECK(r.coefficient(turnback).value() == A(1));
  CHECK_THROWS_AS(bracket_resolve(crossing_tangle(Over::left), 0, Normalization::classical), SkeinError);
}

TEST_CASE("classical normalization needs a loop factor") {
  CHECK_THROWS_AS(bracket_resolve(core_circle(1), 0, Normalization::classical), SkeinError);
  CHECK_THROWS_AS(bracket_resolve(SlicedDiagram{}, 0, Normalization::classical), SkeinError);
}

TEST_CASE("bracket element arithmetic") {
  const auto z = LaminarMulticurve::from_curves({{1}});
  BracketElement a(3);
  a.add(z, A(7));
  CHECK(a.coefficient(z).value() == A(1));
  a.add(z, -A(1));
  CHECK(a.is_zero());
  BracketElement b;
  b.add(z, A(5) + A(-1));
  CHECK(b.projected(2).coefficient(z).value() == A(1) + A(3));
  CHECK_THROWS_AS(BracketElement(3).projected(2), SkeinError);
  CHECK_THROWS_AS(BracketElement(3) + BracketElement(2), SkeinError);
  CHECK((b - b).is_zero());
  CHECK(b.scaled(A(2)).coefficient(z).value() == A(7) + A(1));
}

TEST_CASE("disjoint unknot multiplies by the loop value") {
  Gen gen(31);
  for (int k = 0; k < 100; ++k) {
    const SlicedDiagram d = gen.diagram(7, gen.uniform(0, 2), 0, 0, false);
    CHECK(bracket_resolve(disjoint_unknot(d)) == bracket_resolve(d).scaled(delta));
  }
}

TEST_CASE("scanline resolution agrees with the state sum") {
  Gen gen(32);
  for (int k = 0; k < 150; ++k) {
    const SlicedDiagram d = gen.diagram(9, gen.uniform(0, 2), 0, 0, false);
    CHECK(bracket_resolve_uncached(d) == state_sum_oracle(d));
  }
  for (int k = 0; k < 50; ++k) {
    const int b = 2 * gen.uniform(0, 2);
    const int t = 2 * gen.uniform(0, 2);
    const SlicedDiagram d = gen.diagram(6, 0, b, t, false);
    CHECK(bracket_resolve_uncached(d) == state_sum_oracle(d));
  }
}

TEST_CASE("reduction commutes with resolution") {
  Gen gen(33);
  for (int k = 0; k < 60; ++k) {
    const SlicedDiagram d = gen.diagram(6, gen.uniform(0, 2), 0, 0, false);
    const int n = gen.uniform(1, 6);
    CHECK(bracket_resolve(d, n) == bracket_resolve(d).projected(n));
  }
}

TEST_CASE("regular isotopy") {
  Gen gen(34);
  for (int k = 0; k < 80; ++k) {
    const SlicedDiagram d = with_strand(gen.diagram(6, gen.uniform(0, 2), 0, 0, false));
    const BracketElement base = bracket_resolve(d);
    for (int s : {1, -1}) {
      ReidemeisterMove r1;
      r1.kind = ReidemeisterMove::Kind::r1_add;
      r1.loc = first_strand_location(d);
      r1.sign = s;
      CHECK(bracket_resolve(rmove(d, r1)) == base.scaled(-A(3 * s)));
    }
    const auto w = level_widths(d);
    for (int lv = 0; lv < static_cast<int>(w.size()); ++lv) {
      if (w[lv] < 2) continue;
      ReidemeisterMove r2;
      r2.kind = ReidemeisterMove::Kind::r2;
      r2.loc = {lv, gen.uniform(0, w[lv] - 2)};
      r2.over = gen.uniform(0, 1) ? Over::left : Over::right;
      CHECK(bracket_resolve(rmove(d, r2)) == base);
      break;
    }
    for (int site : r3_sites(d)) {
      ReidemeisterMove r3;
      r3.kind = ReidemeisterMove::Kind::r3;
      r3.loc = {site, d.events[site].pos};
      CHECK(bracket_resolve(rmove(d, r3)) == base);
    }
  }
}

TEST_CASE("r3 on a braid word") {
  for (Over o : {Over::left, Over::right}) {
    SlicedDiagram d;
    d.events = {Event::cup(0), Event::cup(2), Event::cup(1),  Event::cross(1, o), Event::cross(2, o),
                Event::cross(1, o), Event::cap(1), Event::cap(2), Event::cap(0)};
    validate(d);
    const auto sites = r3_sites(d);
    REQUIRE_FALSE(sites.empty());
    ReidemeisterMove m;
    m.kind = ReidemeisterMove::Kind::r3;
    m.loc = {sites[0], d.events[sites[0]].pos};
    const auto moved = rmove(d, m);
    CHECK(moved != d);
    CHECK(bracket_resolve(moved) == bracket_resolve(d));
    CHECK(state_sum_oracle(moved) == state_sum_oracle(d));
  }
}

TEST_CASE("memo table is transparent") {
  const SlicedDiagram d = figure_eight();
  const BracketElement first = bracket_resolve(d);
  CHECK(bracket_resolve(d) == first);
  set_bracket_cache_capacity(0);
  CHECK(bracket_resolve(d) == first);
  set_bracket_cache_capacity(1024);
  CHECK(bracket_resolve(d, 2) == first.projected(2));
}

TEST_CASE("juxtaposition matches side by side gluing") {
  Gen gen(35);
  for (int k = 0; k < 60; ++k) {
    const SlicedDiagram a = gen.diagram(4, gen.uniform(0, 2), 0, 0, false);
    const SlicedDiagram b = gen.diagram(4, gen.uniform(0, 2), 0, 0, false);
    const auto glued = glue_diagrams(a, b, GlueMode::side_by_side);
    CHECK(bracket_resolve(glued) == juxtapose(bracket_resolve(a), a.puncture_count(), bracket_resolve(b)));
  }
}

TEST_CASE("laminar basis enumeration") {
  CHECK(laminar_basis(0, 3).size() == 1);
  CHECK(laminar_basis(1, 2).size() == 3);
  CHECK(laminar_basis(2, 1).size() == 4);
  CHECK(laminar_basis(2, 2).size() == 10);
  for (const auto& m : laminar_basis(3, 2)) CHECK(is_laminar(m.curves));
}
