#include <doctest.h>

#include "pixcat/lattice.hpp"

using namespace pixcat;

namespace {

// discrete topology on {1,2}
FiniteTopology discrete2() {
  return make_topology({"1", "2"}, {{false, false}, {true, false}, {false, true}, {true, true}});
}

FiniteTopology sierpinski() {
  // opens: {}, {o}, {o,c}; the closed point is c
  return make_topology({"o", "c"}, {{false, false}, {true, false}, {true, true}});
}

}  // namespace

TEST_CASE("lattice construction validates order and distributivity") {
  // diamond M3 is not distributive
  std::vector<std::vector<int>> leq(5, std::vector<int>(5, 0));
  for (int i = 0; i < 5; ++i) leq[i][i] = 1;
  for (int i = 1; i <= 3; ++i) {
    leq[0][i] = 1;
    leq[i][4] = 1;
  }
  leq[0][4] = 1;
  CHECK_THROWS_AS(FiniteLattice({"bot", "a", "b", "c", "top"}, leq), input_error);

  // the boolean square is fine
  std::vector<std::vector<int>> sq(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) sq[i][i] = 1;
  sq[0][1] = sq[0][2] = sq[0][3] = sq[1][3] = sq[2][3] = 1;
  FiniteLattice b2({"00", "01", "10", "11"}, sq);
  CHECK(b2.meet(1, 2) == 0);
  CHECK(b2.join(1, 2) == 3);
}

TEST_CASE("lattice screens partition by meets against Y") {
  FiniteTopology X = discrete2();
  FiniteLattice opens = X.open_lattice();
  // C = L = the open lattice, Y = {1}
  std::vector<std::size_t> C;
  for (std::size_t i = 0; i < opens.size(); ++i) C.push_back(i);
  std::size_t Y = opens.index_of("{1}");
  FinitePartition part = lattice_screen(opens, C, Y);
  REQUIRE(part.blocks().size() == 2);
  // A_empty = { {}, {2} }, A_{1} = { {1}, {1,2} }
  CHECK(part.block_of("{}") == part.block_of("{2}"));
  CHECK(part.block_of("{1}") == part.block_of("{1,2}"));
  CHECK(part.block_of("{}") != part.block_of("{1}"));

  SUBCASE("bottom gives one block") {
    FinitePartition bot = lattice_screen(opens, C, opens.index_of("{}"));
    CHECK(bot.blocks().size() == 1);
  }
  SUBCASE("top gives singletons") {
    FinitePartition top = lattice_screen(opens, C, opens.index_of("{1,2}"));
    CHECK(top.blocks().size() == opens.size());
  }
}

TEST_CASE("lattice screens satisfy the screen axioms and pixelate to C_Y") {
  FiniteTopology X = discrete2();
  FiniteLattice opens = X.open_lattice();
  std::vector<std::size_t> C;
  for (std::size_t i = 0; i < opens.size(); ++i) C.push_back(i);

  for (std::size_t Y = 0; Y < opens.size(); ++Y) {
    LatticePixelation pix = pixelate_lattice(opens, C, Y);
    CHECK(pix.axioms.all_pass());
    CHECK(pix.isomorphic);
  }

  // Y = an atom of the square: the result is the 2-chain
  LatticePixelation pix = pixelate_lattice(opens, C, opens.index_of("{1}"));
  REQUIRE(pix.isomorphic);
  CHECK(pix.result.size() == 2);

  LatticePixelation bot = pixelate_lattice(opens, C, opens.index_of("{}"));
  REQUIRE(bot.isomorphic);
  CHECK(bot.result.size() == 1);
}

TEST_CASE("spectra of Z/n") {
  FiniteTopology s12 = spec_zn(12);
  CHECK(s12.points == std::vector<std::string>{"(2)", "(3)"});
  CHECK(s12.opens.size() == 4);  // discrete

  FiniteTopology s8 = spec_zn(8);
  CHECK(s8.points == std::vector<std::string>{"(2)"});
  CHECK(s8.opens.size() == 2);

  CHECK_THROWS_AS(spec_zn(1), input_error);
}

TEST_CASE("subspace pixelation on small spaces") {
  SUBCASE("empty subset gives the point lattice") {
    FiniteTopology X = discrete2();
    CHECK(subspace_pixelation_check(X, {false, false}).ok);
  }
  SUBCASE("sierpinski closed point") {
    FiniteTopology X = sierpinski();
    CHECK(subspace_pixelation_check(X, {false, true}).ok);
    CHECK(subspace_pixelation_check(X, {true, false}).ok);
    CHECK(subspace_pixelation_check(X, {true, true}).ok);
  }
}

TEST_CASE("topology enumeration matches the known counts") {
  CHECK(enumerate_topologies({"a"}).size() == 1);
  CHECK(enumerate_topologies({"a", "b"}).size() == 4);
  CHECK(enumerate_topologies({"a", "b", "c"}).size() == 29);
}

TEST_CASE("screens refine as Y grows") {
  FiniteTopology X = sierpinski();
  FiniteLattice opens = X.open_lattice();
  std::vector<std::size_t> C;
  for (std::size_t i = 0; i < opens.size(); ++i) C.push_back(i);
  // Y <= Y' makes the Y' screen refine the Y screen
  for (std::size_t y = 0; y < opens.size(); ++y)
    for (std::size_t y2 = 0; y2 < opens.size(); ++y2) {
      if (!opens.leq(y, y2)) continue;
      FinitePartition coarse = lattice_screen(opens, C, y);
      FinitePartition fine = lattice_screen(opens, C, y2);
      for (const auto& blk : fine.blocks()) {
        std::size_t target = coarse.block_of(blk[0]);
        for (const auto& el : blk) CHECK(coarse.block_of(el) == target);
      }
    }
}

TEST_CASE("lattice screens reject non-sublattices") {
  FiniteTopology X = discrete2();
  FiniteLattice opens = X.open_lattice();
  // atoms alone are not closed under join
  std::vector<std::size_t> bad{opens.index_of("{1}"), opens.index_of("{2}")};
  CHECK_THROWS_AS(lattice_screen(opens, bad, opens.index_of("{1}")), input_error);
}

TEST_CASE("localization of spectra at a prime") {
  CHECK(spec_zn_localization_check(30, 2).ok);
  CHECK(spec_zn_localization_check(30, 3).ok);
  CHECK(spec_zn_localization_check(30, 5).ok);
  CHECK(spec_zn_localization_check(8, 2).ok);
  CHECK_THROWS_AS(spec_zn_localization_check(8, 3), input_error);
}
