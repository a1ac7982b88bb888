#include "crystfib/groupcore.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace crystfib;

namespace {

CatalogEntry entry2(const std::string& id, const std::string& name,
                    std::vector<std::string> ops, bool hex = false) {
  CatalogEntry e;
  e.id = id;
  e.dim = 2;
  e.it_number = std::stoi(id.substr(2));
  e.name = name;
  e.gram = hex ? RatMat(2, 2, {Rat(2), Rat(-1), Rat(-1), Rat(2)})
               : to_rat_mat(IntMat::identity(2));
  for (auto& s : ops) {
    e.ops.push_back(parse_symop(s, 2));
    e.op_strings.push_back(s);
  }
  return e;
}

CatalogEntry entry113() {
  CatalogEntry e;
  e.id = "3/113";
  e.dim = 3;
  e.it_number = 113;
  e.name = "P-42_1m";
  e.gram = to_rat_mat(IntMat::identity(3));
  for (const char* s : {"-x+1/2,-y+1/2,z", "y+1/2,-x,-z", "-x,y+1/2,-z"}) {
    e.ops.push_back(parse_symop(s, 3));
    e.op_strings.push_back(s);
  }
  return e;
}

}  // namespace

TEST_CASE("build_group p1 has one coset") {
  SpaceGroup g = build_group(entry2("2/1", "p1", {}));
  CHECK(g.point_order() == 1);
  CHECK(g.dim() == 2);
}

TEST_CASE("build_group pm has two cosets") {
  SpaceGroup g = build_group(entry2("2/3", "pm", {"x,-y"}));
  CHECK(g.point_order() == 2);
}

TEST_CASE("build_group IT 113 closes to point order 8") {
  SpaceGroup g = build_group(entry113());
  CHECK(g.point_order() == 8);
  CHECK(g.dim() == 3);
}

TEST_CASE("conjugating a translation applies the point part") {
  SpaceGroup g = build_group(entry2("2/3", "pm", {"x,-y"}));
  AffineElement t(IntMat::identity(2), {Rat(0), Rat(1)});  // t2
  int b = g.find_coset(IntMat(2, 2, {1, 0, 0, -1}));
  REQUIRE(b >= 0);
  AffineElement refl = g.element({b, IntVec{Int(0), Int(0)}});
  AffineElement c = conjugate(t, refl);
  CHECK(c.is_translation());
  CHECK(c.trans == RatVec{Rat(0), Rat(-1)});
}

TEST_CASE("invert identity") {
  CHECK(invert(AffineElement::identity(3)) == AffineElement::identity(3));
}

TEST_CASE("the IT 113 square obstruction: ((d+I)gamma)^2 = (1+2l)e2 + I") {
  SpaceGroup g = build_group(entry113());
  AffineElement gamma = parse_symop("-x,y+1/2,-z", 3);
  REQUIRE(g.contains(gamma));
  for (int k = -2; k <= 2; ++k) {
    for (int l = -2; l <= 2; ++l) {
      AffineElement d(IntMat::identity(3), {Rat(k), Rat(l), Rat(0)});
      AffineElement sq = power(multiply(d, gamma), 2);
      CHECK(sq.point == IntMat::identity(3));
      CHECK(sq.trans == RatVec{Rat(0), Rat(1 + 2 * l), Rat(0)});
      CHECK(!sq.is_identity());
    }
  }
}

TEST_CASE("group axioms on random elements") {
  SpaceGroup g = build_group(entry113());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dc(0, (int)g.point_order() - 1);
  std::uniform_int_distribution<int> ds(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = [&] {
      GroupElementRef e;
      e.coset = dc(rng);
      e.shift = {Int(ds(rng)), Int(ds(rng)), Int(ds(rng))};
      return e;
    };
    GroupElementRef a = r(), b = r(), c = r();
    AffineElement lhs = g.element(g.mul(g.mul(a, b), c));
    AffineElement rhs = g.element(g.mul(a, g.mul(b, c)));
    CHECK(lhs == rhs);
    AffineElement e = g.element(g.mul(a, g.inv(a)));
    CHECK(e.is_identity());
  }
}

TEST_CASE("center of p1, pm, cm") {
  SpaceGroup p1 = build_group(entry2("2/1", "p1", {}));
  CHECK(center(p1).rank() == 2);

  SpaceGroup pm = build_group(entry2("2/3", "pm", {"x,-y"}));
  IntLattice zc = center(pm);
  CHECK(zc.rank() == 1);
  CHECK(zc.contains(RatVec{Rat(1), Rat(0)}));   // <t1>
  CHECK(!zc.contains(RatVec{Rat(0), Rat(1)}));

  SpaceGroup cm = build_group(entry2("2/5", "cm", {"y,x"}));
  IntLattice zcm = center(cm);
  CHECK(zcm.rank() == 1);
  CHECK(zcm.contains(RatVec{Rat(1), Rat(1)}));  // <t1 t2>
}

TEST_CASE("transfer examples") {
  // p2: the point matrices cancel
  SpaceGroup p2 = build_group(entry2("2/2", "p2", {"-x,-y"}));
  AffineElement x(IntMat::identity(2), {Rat(3), Rat(-1)});
  CHECK(transfer(p2, x).is_identity());

  // p1: transfer is the identity map on translations
  SpaceGroup p1 = build_group(entry2("2/1", "p1", {}));
  AffineElement t1(IntMat::identity(2), {Rat(1), Rat(0)});
  CHECK(transfer(p1, t1) == t1);

  // pm: sum = diag(2,0)
  SpaceGroup pm = build_group(entry2("2/3", "pm", {"x,-y"}));
  AffineElement b(IntMat(2, 2, {1, 0, 0, -1}), {Rat(5, 2), Rat(1, 3)});
  AffineElement tr = transfer(pm, b);
  CHECK(tr.trans == RatVec{Rat(5), Rat(0)});
}

TEST_CASE("transfer is a homomorphism on random pairs") {
  SpaceGroup g = build_group(entry113());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dc(0, (int)g.point_order() - 1);
  std::uniform_int_distribution<int> ds(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    GroupElementRef a{dc(rng), {Int(ds(rng)), Int(ds(rng)), Int(ds(rng))}};
    GroupElementRef b{dc(rng), {Int(ds(rng)), Int(ds(rng)), Int(ds(rng))}};
    AffineElement lhs = transfer(g, g.element(g.mul(a, b)));
    AffineElement rhs = multiply(transfer(g, g.element(a)), transfer(g, g.element(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("betti1 examples and three-way consistency") {
  SpaceGroup p1 = build_group(entry2("2/1", "p1", {}));
  CHECK(betti1(p1) == 2);
  CHECK(betti1_consistent(p1));

  SpaceGroup pg = build_group(entry2("2/4", "pg", {"x+1/2,-y"}));
  CHECK(betti1(pg) == 1);
  CHECK(betti1_consistent(pg));

  SpaceGroup pmm = build_group(entry2("2/6", "pmm", {"-x,-y", "x,-y"}));
  CHECK(betti1(pmm) == 0);
  CHECK(betti1_consistent(pmm));

  SpaceGroup g113 = build_group(entry113());
  CHECK(betti1_consistent(g113));
}

TEST_CASE("abelianization of pg is Z x Z/2") {
  SpaceGroup pg = build_group(entry2("2/4", "pg", {"x+1/2,-y"}));
  auto [rank, torsion] = abelianization(pg);
  CHECK(rank == 1);
  REQUIRE(torsion.size() == 1);
  CHECK(torsion[0] == 2);
}

TEST_CASE("Lemma 4: Im(sum A) = Fix(Pi) and Ker(sum A) = Fix(Pi)^perp") {
  for (auto e : {entry2("2/3", "pm", {"x,-y"}), entry2("2/5", "cm", {"y,x"}),
                 entry2("2/2", "p2", {"-x,-y"})}) {
    SpaceGroup g = build_group(e);
    RatMat s = to_rat_mat(g.point_sum());
    RatSpace fix = g.fixed_space();
    RatSpace im = RatSpace::full(g.dim()).apply(s);
    CHECK(im == fix);
    RatSpace ker(g.dim(), rational_kernel(s));
    CHECK(ker == orth_complement(fix, g.gram()));
  }
}

TEST_CASE("centered setting is rebased to a primitive lattice") {
  // cm given as mirror x,-y plus the (1/2,1/2) centering translation
  CatalogEntry e = entry2("2/5", "cm-centered", {"x,-y", "x+1/2,y+1/2"});
  SpaceGroup g = build_group(e);
  CHECK(g.point_order() == 2);
  // after rebasing, the primitive cell has half the covolume
  CHECK(rat_det(g.gram().matrix()) == Rat(1, 4));
}

TEST_CASE("build_group rejects a non-finite closure") {
  // shear matrix has infinite order
  CatalogEntry e;
  e.id = "2/1";
  e.dim = 2;
  e.it_number = 1;
  e.gram = to_rat_mat(IntMat::identity(2));
  e.ops.push_back(AffineElement(IntMat(2, 2, {1, 1, 0, 1}), RatVec(2)));
  CHECK_THROWS_AS(build_group(e), GroupError);
}

TEST_CASE("build_group rejects Gram violations") {
  CatalogEntry e;
  e.id = "2/2";
  e.dim = 2;
  e.it_number = 2;
  e.gram = RatMat(2, 2, {Rat(1), Rat(0), Rat(0), Rat(3)});
  e.ops.push_back(parse_symop("y,x", 2));  // swap does not preserve diag(1,3)
  CHECK_THROWS_AS(build_group(e), GroupError);
}
