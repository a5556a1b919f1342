#include <doctest.h>

#include <sstream>

#include "goldgames/game.hpp"
#include "goldgames/game_io.hpp"

using namespace gg;

namespace {

GameInstance sample(std::uint32_t depth, std::uint64_t index) {
  return sample_game({depth, phi(), 0x10ull, index});
}

}  // namespace

TEST_CASE("text format round trip and exact layout") {
  GameInstance game(2);
  game.set_leaf(1, true);
  game.set_leaf(3, true);
  std::ostringstream out;
  write_game_text(game, out);
  CHECK(out.str() == "GGAME v1 depth=2\n0101\n");

  std::istringstream in(out.str());
  CHECK(read_game(in) == game);
}

TEST_CASE("binary format layout") {
  GameInstance game(3);
  for (std::uint64_t i : {0, 2, 7}) game.set_leaf(i, true);
  std::ostringstream out;
  write_game_binary(game, out);
  const std::string bytes = out.str();
  REQUIRE(bytes.size() == 7);
  CHECK(bytes.substr(0, 4) == "GGB1");
  CHECK(bytes[4] == 0x01);
  CHECK(bytes[5] == 3);
  CHECK(static_cast<unsigned char>(bytes[6]) == 0b10000101);

  std::istringstream in(bytes);
  CHECK(read_game(in) == game);
}

TEST_CASE("round trip property over random games, both formats") {
  for (std::uint64_t k = 0; k < 30; ++k) {
    const GameInstance game = sample(1 + static_cast<std::uint32_t>(k % 8), k);
    {
      std::stringstream ss;
      write_game_text(game, ss);
      CHECK(read_game(ss) == game);
    }
    {
      std::stringstream ss;
      write_game_binary(game, ss);
      CHECK(read_game(ss) == game);
    }
  }
}

TEST_CASE("parse errors carry byte offsets") {
  SUBCASE("bad magic") {
    std::istringstream in("HELLO\n");
    CHECK_THROWS_AS(read_game(in), ParseError);
  }
  SUBCASE("payoff length mismatch") {
    std::istringstream in("GGAME v1 depth=2\n01\n");
    try {
      read_game(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.byte_offset() >= 17);  // inside the payoff line
    }
  }
  SUBCASE("bad payoff character") {
    std::istringstream in("GGAME v1 depth=1\n0x\n");
    try {
      read_game(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.byte_offset() == 18);
    }
  }
  SUBCASE("truncated binary payload") {
    std::string bytes = "GGB1";
    bytes += '\x01';
    bytes += '\x04';  // depth 4 needs 2 payload bytes
    bytes += '\x00';
    std::istringstream in(bytes);
    CHECK_THROWS_AS(read_game(in), ParseError);
  }
  SUBCASE("depth over the materialization limit") {
    std::istringstream in("GGAME v1 depth=31\n0\n");
    CHECK_THROWS_AS(read_game(in), ParseError);
  }
}
