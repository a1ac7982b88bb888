#include "crystfib/atlas.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace crystfib;

TEST_CASE("bundled atlas has 17 + 219 entries") {
  const Atlas& a = Atlas::bundled();
  CHECK(a.count(2) == 17);
  CHECK(a.count(3) == 219);
}

TEST_CASE("entry 3/113 carries the explicit generator triple") {
  const SpaceGroup& g = Atlas::bundled().get("3/113");
  CHECK(g.point_order() == 8);
  CHECK(g.contains(parse_symop("-x+1/2,-y+1/2,z", 3)));  // alpha
  CHECK(g.contains(parse_symop("y+1/2,-x,-z", 3)));      // beta
  CHECK(g.contains(parse_symop("-x,y+1/2,-z", 3)));      // gamma
}

TEST_CASE("entry 2/4 is pg with the half glide") {
  const SpaceGroup& g = Atlas::bundled().get("2/4");
  CHECK(g.point_order() == 2);
  CHECK(g.contains(parse_symop("x+1/2,-y", 2)));
}

TEST_CASE("enantiomorphic ids alias to one representative") {
  const Atlas& a = Atlas::bundled();
  CHECK(&a.get("3/78") == &a.get("3/76"));
  CHECK(&a.get("3/213") == &a.get("3/212"));
  CHECK(a.ids(3).size() == 219);
}

TEST_CASE("unknown ids raise a helpful error") {
  CHECK_THROWS_AS(Atlas::bundled().get("9/1"), UnknownIdError);
  CHECK_THROWS_WITH(Atlas::bundled().get("3/231"),
                    Catch::Matchers::ContainsSubstring("nearest"));
}

TEST_CASE("point group orders divide the family bounds") {
  const Atlas& a = Atlas::bundled();
  for (const std::string& id : a.ids(2)) CHECK(12 % a.get(id).point_order() == 0);
  for (const std::string& id : a.ids(3)) CHECK(48 % a.get(id).point_order() == 0);
}

TEST_CASE("symop round trip over the bundled atlases") {
  const Atlas& a = Atlas::bundled();
  for (size_t dim : {2u, 3u}) {
    for (const std::string& id : a.ids(dim)) {
      const SpaceGroup& g = a.get(id);
      for (const Coset& c : g.cosets()) {
        AffineElement e(c.point, c.offset);
        CHECK(parse_symop(format_symop(e), dim) == e);
      }
    }
  }
}

TEST_CASE("a catalog file can override bundled entries") {
  Atlas a = Atlas::load_default();
  a.add_text("[group]\nid = 2/1\nname = p1-custom\ngram = 3 0; 0 5\n");
  CHECK(a.get("2/1").gram().matrix() == RatMat(2, 2, {Rat(3), Rat(0), Rat(0), Rat(5)}));
  CHECK(a.name_of("2/1") == "p1-custom");
}
