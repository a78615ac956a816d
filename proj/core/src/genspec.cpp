#include "gel/genspec.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

#include "gel/affine.hpp"
#include "gel/canonical.hpp"
#include "gel/graph6.hpp"

namespace gel {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  while (true) {
    std::size_t at = s.find(sep, from);
    if (at == std::string::npos) {
      out.push_back(s.substr(from));
      return out;
    }
    out.push_back(s.substr(from, at - from));
    from = at + 1;
  }
}

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != s.size() || s.empty())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

double parse_prob(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != s.size() || s.empty() || v < 0.0 || v > 1.0)
    throw std::invalid_argument("bad probability: '" + s + "'");
  return v;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete bipartite parts must be positive");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

// K<n>, E<n>, P<n>, C<n>, K<a>,<b>, claw; nullopt when the string does not
// fit the grammar at all
std::optional<Graph> try_named(const std::string& name) {
  if (name == "claw") return complete_bipartite(1, 3);
  if (name.size() < 2) return std::nullopt;
  char kind = name[0];
  std::string rest = name.substr(1);
  for (char ch : rest)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ',')
      return std::nullopt;
  auto parts = split(rest, ',');
  if (parts.size() == 2 && kind == 'K')
    return complete_bipartite(parse_int(parts[0], "part size"),
                              parse_int(parts[1], "part size"));
  if (parts.size() != 1) return std::nullopt;
  int n = parse_int(rest, "vertex count");
  switch (kind) {
    case 'K': return complete_graph(n);
    case 'E': return empty_graph(n);
    case 'P': return path_graph(n);
    case 'C': return cycle_graph(n);
    default: return std::nullopt;
  }
}

}  // namespace

Graph parse_member_name(const std::string& name) {
  if (name.size() > 1 && name.back() == 'c')
    if (auto g = try_named(name.substr(0, name.size() - 1)))
      return complement(*g);
  if (auto g = try_named(name)) return *g;
  return from_graph6(name);
}

Graph parse_graph_arg(const std::string& arg, std::uint64_t default_seed) {
  std::size_t colon = arg.find(':');
  if (colon == std::string::npos) return parse_member_name(arg);
  std::string head = arg.substr(0, colon);
  auto args = split(arg.substr(colon + 1), ',');
  auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw std::invalid_argument("generator " + head + " takes " +
                                  std::to_string(want) + " argument(s)");
  };
  if (head == "complete") {
    arity(1);
    return complete_graph(parse_int(args[0], "vertex count"));
  }
  if (head == "empty") {
    arity(1);
    return empty_graph(parse_int(args[0], "vertex count"));
  }
  if (head == "path") {
    arity(1);
    return path_graph(parse_int(args[0], "vertex count"));
  }
  if (head == "cycle") {
    arity(1);
    return cycle_graph(parse_int(args[0], "vertex count"));
  }
  if (head == "kpq") {
    arity(2);
    return complete_multipartite(parse_int(args[0], "part count"),
                                 parse_int(args[1], "part size"));
  }
  if (head == "affine") {
    arity(1);
    return affine_construction(parse_int(args[0], "order")).graph;
  }
  if (head == "gnp") {
    if (args.size() != 2 && args.size() != 3)
      throw std::invalid_argument("gnp takes n,p and an optional seed=S");
    std::uint64_t seed = default_seed;
    if (args.size() == 3) {
      if (args[2].rfind("seed=", 0) != 0)
        throw std::invalid_argument("third gnp argument must be seed=S");
      seed = std::stoull(args[2].substr(5));
    }
    return gnp(parse_int(args[0], "vertex count"), parse_prob(args[1]), seed);
  }
  throw std::invalid_argument("unknown generator '" + head + "'");
}

ForbiddenFamily q_family() {
  std::vector<Graph> members;
  for (const Graph& g : enumerate_nonisomorphic(4))
    if (g.m() == 3) members.push_back(g);
  return make_family(std::move(members), FamilyMode::induced);
}

ForbiddenFamily parse_family_arg(const std::vector<std::string>& args,
                                 FamilyMode mode) {
  std::vector<Graph> members;
  for (const std::string& raw : args) {
    if (raw == "forbset:4v3e") {
      for (Graph& g : q_family().members) members.push_back(std::move(g));
      continue;
    }
    std::string name = raw.rfind("forb:", 0) == 0 ? raw.substr(5) : raw;
    members.push_back(parse_member_name(name));
  }
  return make_family(std::move(members), mode);
}

}  // namespace gel
