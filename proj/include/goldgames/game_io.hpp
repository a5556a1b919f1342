#ifndef GOLDGAMES_GAME_IO_HPP
#define GOLDGAMES_GAME_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "goldgames/game.hpp"

namespace gg {

// Malformed game file; byte_offset points at the first offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset);
  std::size_t byte_offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Text format:
//   GGAME v1 depth=<n>\n
//   <2^n characters '0'/'1'>\n
void write_game_text(const GameInstance& game, std::ostream& out);

// Binary format: magic "GGB1", version byte 0x01, depth byte, then
// ceil(2^n/8) payload bytes, leaf i at byte i/8 bit i%8 (LSB first).
void write_game_binary(const GameInstance& game, std::ostream& out);

// Reads either format, dispatching on the magic bytes.
// Throws ParseError on malformed input.
GameInstance read_game(std::istream& in);

GameInstance read_game_file(const std::string& path);
void write_game_file(const GameInstance& game, const std::string& path, bool binary);

}  // namespace gg

#endif
