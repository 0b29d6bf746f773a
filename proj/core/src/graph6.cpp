#include <fstream>
#include <sstream>

#include "drg/graph.hpp"

namespace drg {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_n(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

int sextet(char ch) {
  if (ch < 63 || ch > 126) throw Graph6Error("invalid graph6 byte " + std::to_string(static_cast<int>(ch)));
  return ch - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g, bool header) {
  std::string out;
  if (header) out += kHeader;
  const int n = g.order();
  put_n(out, static_cast<std::uint64_t>(n));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  auto next = [&] {
    if (pos >= text.size()) throw Graph6Error("truncated graph6 size field");
    return sextet(text[pos++]);
  };
  std::uint64_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = next();
    int fields = 3;
    if (second == 63) {
      fields = 6;
      second = -1;
    }
    if (second >= 0) n = static_cast<std::uint64_t>(second);
    for (int i = second >= 0 ? 1 : 0; i < fields; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
    if (fields == 3 && n <= 62) throw Graph6Error("non-canonical graph6 size field");
    if (fields == 6 && n <= 258047) throw Graph6Error("non-canonical graph6 size field");
  }
  if (n > 100000) throw Graph6Error("graph6 order " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(bytes) + " data bytes, got " +
                      std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw Graph6Error("graph6 padding bits set");
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace drg
