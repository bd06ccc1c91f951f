#include <doctest.h>

#include "skein/error.hpp"
#include "skein/homology.hpp"

using namespace skein;

TEST_CASE("presets") {
  const auto h2 = handlebody(2);
  CHECK(h2.free_rank == 2);
  CHECK(h2.h2_rank == 0);

  const auto s = surface_times_interval(1, SurfaceMarking::vertical_pair);
  CHECK(s.free_rank == 2);
  CHECK(s.h2_rank == 1);
  CHECK(s.base_pairing == std::vector<long>{1});

  const auto b = ball();
  CHECK(b.free_rank == 0);
  CHECK(b.h2_rank == 0);
  CHECK(b.torsion.empty());
}

TEST_CASE("preset selectors") {
  CHECK(parse_manifold_preset("handlebody:3") == handlebody(3));
  CHECK(parse_manifold_preset("ball") == ball());
  CHECK(parse_manifold_preset("sigma-times-i:2:same_side_pair") ==
        surface_times_interval(2, SurfaceMarking::same_side_pair));
  CHECK_THROWS_AS(parse_manifold_preset("handlebody:-1"), SkeinError);
  CHECK_THROWS_AS(parse_manifold_preset("torus"), SkeinError);
  CHECK_THROWS_AS(parse_manifold_preset("sigma-times-i:1:sideways"), SkeinError);
}

TEST_CASE("omega vanishes on handlebodies") {
  for (int g = 0; g <= 3; ++g) {
    const auto data = handlebody(g);
    std::vector<long> v(g, 0);
    for (int trial = 0; trial < 50; ++trial) {
      for (int j = 0; j < g; ++j) v[j] = (trial * 7 + j * 3) % 11 - 5;
      CHECK(omega(data, free_class(data, v)) == 0);
    }
  }
}

TEST_CASE("vertical marking of a surface times an interval gives omega 1") {
  const auto data = surface_times_interval(1, SurfaceMarking::vertical_pair);
  CHECK(omega(data, free_class(data, {0, 0})) == 1);
  CHECK(omega(data, free_class(data, {3, -2})) == 1);
  const auto flat = surface_times_interval(1, SurfaceMarking::same_side_pair);
  CHECK(omega(flat, free_class(flat, {1, 0})) == 0);
}

TEST_CASE("torsion never contributes") {
  ManifoldHomologyData d;
  d.free_rank = 1;
  d.torsion = {2, 3};
  d.h2_rank = 1;
  d.pairing = {{4}};
  d.base_pairing = {0};
  HomClass a = free_class(d, {0});
  CHECK(omega(d, a) == 0);
  a.torsion_part = {1, 2};
  CHECK(omega(d, a) == 0);
  a.free_part = {3};
  CHECK(omega(d, a) == 12);
  a.torsion_part = {0, 1};
  CHECK(omega(d, a) == 12);
}

TEST_CASE("omega is a gcd over the H_2 basis") {
  ManifoldHomologyData d;
  d.free_rank = 2;
  d.h2_rank = 2;
  d.pairing = {{2, 0}, {0, 3}};
  d.base_pairing = {0, 0};
  CHECK(omega(d, free_class(d, {2, 2})) == 2);
  CHECK(omega(d, free_class(d, {3, 2})) == 6);
  CHECK(omega(d, free_class(d, {-1, 0})) == 2);
}

TEST_CASE("dimension and range checks") {
  const auto data = handlebody(2);
  CHECK_THROWS_AS(free_class(data, {1}), SkeinError);
  HomClass c{{1, 2, 3}, {}};
  CHECK_THROWS_AS(omega(data, c), SkeinError);
  ManifoldHomologyData bad;
  bad.free_rank = 1;
  bad.h2_rank = 1;
  bad.pairing = {{1, 2}};
  bad.base_pairing = {0};
  CHECK_THROWS_AS(bad.check(), SkeinError);
  bad.pairing = {{1}};
  bad.torsion = {1};
  CHECK_THROWS_AS(bad.check(), SkeinError);
}

TEST_CASE("gluing handlebodies") {
  CHECK(glue_data(handlebody(1), handlebody(1)) == handlebody(2));
  CHECK(glue_data(handlebody(0), handlebody(3)) == handlebody(3));
  CHECK(glue_data(ball(), handlebody(2)) == handlebody(2));
  CHECK_THROWS_AS(glue_data(surface_times_interval(1, SurfaceMarking::empty), handlebody(1)), SkeinError);
  const HomClass g = glue_classes(HomClass{{3}, {}}, HomClass{{-2}, {}});
  CHECK(g.free_part == std::vector<long>{3, -2});
  const HomClass id = glue_classes(HomClass{}, HomClass{{4, 1}, {}});
  CHECK(id.free_part == std::vector<long>{4, 1});
}

TEST_CASE("gcd bound") {
  CHECK(gcd_bound_check(4, 6, 2));
  CHECK_FALSE(gcd_bound_check(4, 6, 4));
  CHECK(gcd_bound_check(0, 0, 5));
  CHECK(gcd_bound_check(0, 0, 0));
  CHECK(gcd_bound_check(0, 6, 3));
  CHECK(gcd_bound_check(5, 10, 1));
}

TEST_CASE("mod 2 tags") {
  HomClass c{{3, -2, -1}, {1}};
  CHECK(c.mod2() == std::vector<int>{1, 0, 1, 1});
}
