#include "crystfib/symparse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace crystfib;

TEST_CASE("parse_symop identity") {
  AffineElement e = parse_symop("x,y,z", 3);
  CHECK(e.point == IntMat::identity(3));
  CHECK(is_zero_vec(e.trans));
}

TEST_CASE("parse_symop the IT 113 element gamma") {
  AffineElement e = parse_symop("-x,y+1/2,-z", 3);
  IntMat expect(3, 3, {-1, 0, 0, 0, 1, 0, 0, 0, -1});
  CHECK(e.point == expect);
  CHECK(e.trans == RatVec{Rat(0), Rat(1, 2), Rat(0)});
}

TEST_CASE("parse_symop cm generator") {
  AffineElement e = parse_symop("y,x", 2);
  IntMat expect(2, 2, {0, 1, 1, 0});
  CHECK(e.point == expect);
  CHECK(is_zero_vec(e.trans));
}

TEST_CASE("parse_symop keeps exact constants without mod-1 reduction") {
  AffineElement e = parse_symop("x+3/2,y-1", 2);
  CHECK(e.trans == RatVec{Rat(3, 2), Rat(-1)});
}

TEST_CASE("parse_symop error cases") {
  CHECK_THROWS_AS(parse_symop("x,y", 3), ParseError);       // wrong coordinate count
  CHECK_THROWS_AS(parse_symop("x,y,z,w", 3), ParseError);   // too many
  CHECK_THROWS_AS(parse_symop("x+x,y,z", 3), ParseError);   // repeated axis
  CHECK_THROWS_AS(parse_symop("q,y,z", 3), ParseError);     // bad character
  CHECK_THROWS_AS(parse_symop("x,;y", 2), ParseError);
  CHECK_THROWS_AS(parse_symop("x,1/", 2), ParseError);
  CHECK_THROWS_AS(parse_symop("", 1), ParseError);
  CHECK_THROWS_AS(parse_symop("w,x", 2), ParseError);       // w needs dim 4
}

TEST_CASE("format/parse round trip") {
  for (const char* s : {"x,y,z", "-x,y+1/2,-z", "y,x", "-y,x-y", "x+3/4,-y+1/2",
                        "x-y+1/6,x,z+5/6"}) {
    AffineElement e = parse_symop(s, std::string(s).find('z') != std::string::npos ? 3 : 2);
    AffineElement f = parse_symop(format_symop(e), e.dim());
    CHECK(e == f);
  }
}

TEST_CASE("parse_catalog empty") {
  CHECK(parse_catalog(std::string()).empty());
}

TEST_CASE("parse_catalog single p1 entry") {
  auto entries = parse_catalog(std::string("# a comment\n[group]\nid = 2/1\nname = p1\n"));
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].id == "2/1");
  CHECK(entries[0].dim == 2);
  CHECK(entries[0].ops.empty());
  CHECK(entries[0].gram == to_rat_mat(IntMat::identity(2)));
}

TEST_CASE("parse_catalog gram and ops") {
  std::string text =
      "[group]\n"
      "id = 2/13\n"
      "name = p3\n"
      "gram = 2 -1; -1 2\n"
      "op = -y,x-y\n";
  auto entries = parse_catalog(text);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].gram(0, 1) == Rat(-1));
  REQUIRE(entries[0].ops.size() == 1);
  CHECK(entries[0].ops[0].point == IntMat(2, 2, {0, -1, 1, -1}));
}

TEST_CASE("parse_catalog rejects duplicates and bad data with line numbers") {
  std::string dup = "[group]\nid = 2/1\n[group]\nid = 2/1\n";
  CHECK_THROWS_WITH(parse_catalog(dup), Catch::Matchers::ContainsSubstring("duplicate id"));

  std::string badgram = "[group]\nid = 2/1\ngram = 1 2; 2 1\n";
  CHECK_THROWS_WITH(parse_catalog(badgram), Catch::Matchers::ContainsSubstring("bad gram"));

  std::string badrat = "[group]\nid = 2/1\ngram = 1 0; 0 1/0\n";
  CHECK_THROWS_AS(parse_catalog(badrat), ParseError);

  std::string badit = "[group]\nid = 2/19\n";
  CHECK_THROWS_WITH(parse_catalog(badit), Catch::Matchers::ContainsSubstring("out of range"));

  std::string stray = "id = 2/1\n";
  CHECK_THROWS_WITH(parse_catalog(stray), Catch::Matchers::ContainsSubstring("line 1"));
}

TEST_CASE("parse_catalog accepts CRLF") {
  auto entries = parse_catalog(std::string("[group]\r\nid = 2/2\r\nname = p2\r\nop = -x,-y\r\n"));
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].ops.size() == 1);
}
