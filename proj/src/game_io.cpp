#include "goldgames/game_io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gg {

ParseError::ParseError(const std::string& what, std::size_t byte_offset)
    : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

void write_game_text(const GameInstance& game, std::ostream& out) {
  out << "GGAME v1 depth=" << game.depth() << '\n';
  const std::uint64_t leaves = game.leaf_count();
  std::string bits(leaves, '0');
  for (std::uint64_t i = 0; i < leaves; ++i)
    if (game.leaf(i)) bits[i] = '1';
  out << bits << '\n';
}

void write_game_binary(const GameInstance& game, std::ostream& out) {
  out.write("GGB1", 4);
  const unsigned char version = 0x01;
  const unsigned char depth = static_cast<unsigned char>(game.depth());
  out.put(static_cast<char>(version));
  out.put(static_cast<char>(depth));
  const std::uint64_t leaves = game.leaf_count();
  const std::uint64_t bytes = (leaves + 7) / 8;
  std::string buf(bytes, '\0');
  for (std::uint64_t i = 0; i < leaves; ++i)
    if (game.leaf(i)) buf[i / 8] |= static_cast<char>(1u << (i % 8));
  out.write(buf.data(), static_cast<std::streamsize>(bytes));
}

namespace {

GameInstance read_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing header line", 0);
  const std::string prefix = "GGAME v1 depth=";
  if (header.rfind(prefix, 0) != 0)
    throw ParseError("bad text header, expected 'GGAME v1 depth=<n>'", 0);
  unsigned long depth = 0;
  try {
    std::size_t pos = 0;
    depth = std::stoul(header.substr(prefix.size()), &pos);
    if (prefix.size() + pos != header.size())
      throw ParseError("trailing bytes after depth", prefix.size() + pos);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("unparsable depth field", prefix.size());
  }
  if (depth > kMaxMaterializedDepth)
    throw ParseError("depth exceeds materialization limit", prefix.size());

  const std::size_t body_start = header.size() + 1;
  std::string body;
  if (!std::getline(in, body)) throw ParseError("missing payoff line", body_start);
  GameInstance game(static_cast<std::uint32_t>(depth));
  const std::uint64_t leaves = game.leaf_count();
  if (body.size() != leaves)
    throw ParseError("payoff line length " + std::to_string(body.size()) +
                         ", expected " + std::to_string(leaves),
                     body_start + std::min<std::size_t>(body.size(), leaves));
  for (std::uint64_t i = 0; i < leaves; ++i) {
    if (body[i] == '1') game.set_leaf(i, true);
    else if (body[i] != '0')
      throw ParseError("payoff character is not '0' or '1'", body_start + i);
  }
  return game;
}

GameInstance read_binary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::memcmp(magic, "GGB1", 4) != 0)
    throw ParseError("bad binary magic, expected GGB1", 0);
  const int version = in.get();
  if (version != 0x01) throw ParseError("unsupported version byte", 4);
  const int depth = in.get();
  if (depth < 0) throw ParseError("missing depth byte", 5);
  if (depth > static_cast<int>(kMaxMaterializedDepth))
    throw ParseError("depth exceeds materialization limit", 5);
  GameInstance game(static_cast<std::uint32_t>(depth));
  const std::uint64_t leaves = game.leaf_count();
  const std::uint64_t bytes = (leaves + 7) / 8;
  std::string buf(bytes, '\0');
  in.read(buf.data(), static_cast<std::streamsize>(bytes));
  if (static_cast<std::uint64_t>(in.gcount()) != bytes)
    throw ParseError("truncated payload, expected " + std::to_string(bytes) +
                         " bytes",
                     6 + static_cast<std::size_t>(in.gcount()));
  for (std::uint64_t i = 0; i < leaves; ++i)
    game.set_leaf(i, (buf[i / 8] >> (i % 8)) & 1);
  return game;
}

}  // namespace

GameInstance read_game(std::istream& in) {
  // both formats start "GG"; the third byte disambiguates ('A' vs 'B')
  char head[3];
  in.read(head, 3);
  const std::streamsize got = in.gcount();
  in.clear();
  for (std::streamsize i = got - 1; i >= 0; --i) in.putback(head[i]);
  if (got == 3 && head[0] == 'G' && head[1] == 'G') {
    if (head[2] == 'B') return read_binary(in);
    if (head[2] == 'A') return read_text(in);
  }
  throw ParseError("unrecognized magic bytes", 0);
}

GameInstance read_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_game(in);
}

void write_game_file(const GameInstance& game, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (binary) write_game_binary(game, out);
  else write_game_text(game, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gg
