#include "gel/graph6.hpp"

namespace gel {

namespace {
constexpr int kBias = 63;
constexpr char kLongForm = '~';
}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongForm);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int bits = 0;
  int value = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + kBias));
        bits = 0;
        value = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(const std::string& line) {
  if (line.empty()) throw parse_error("empty graph6 line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(line[i]);
    if (ch < kBias || ch > 126)
      throw parse_error("graph6 character out of range", i);
  }

  std::size_t pos = 0;
  long n = 0;
  if (line[0] == kLongForm) {
    if (line.size() >= 2 && line[1] == kLongForm)
      throw parse_error("graph orders beyond 2^18 are unsupported", 1);
    if (line.size() < 4) throw parse_error("truncated graph6 header", line.size());
    n = (static_cast<long>(line[1] - kBias) << 12) |
        (static_cast<long>(line[2] - kBias) << 6) |
        static_cast<long>(line[3] - kBias);
    pos = 4;
  } else {
    n = line[0] - kBias;
    pos = 1;
  }
  if (n < 1) throw parse_error("graph6 order must be at least 1", 0);
  if (n > kMaxVertices)
    throw parse_error("graph order exceeds the 64-vertex cap", 0);

  const int pairs = static_cast<int>(n) * (static_cast<int>(n) - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (line.size() < pos + body)
    throw parse_error("graph6 line shorter than its header promises", line.size());
  if (line.size() > pos + body)
    throw parse_error("trailing bytes after graph6 payload", pos + body);

  Graph g(static_cast<int>(n));
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      int byte = bit / 6;
      int shift = 5 - bit % 6;
      if ((line[pos + byte] - kBias) >> shift & 1) g.add_edge(u, v);
      ++bit;
    }
  // Padding must be zero bits.
  if (body > 0) {
    int pad = static_cast<int>(body) * 6 - pairs;
    int last = line[pos + body - 1] - kBias;
    if (pad > 0 && (last & ((1 << pad) - 1)) != 0)
      throw parse_error("nonzero padding bits in graph6 payload", pos + body - 1);
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == ">>graph6<<") continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    graphs.push_back(from_graph6(line));
  }
  return graphs;
}

}  // namespace gel
