#include "uobs/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "uobs/error.hpp"

namespace uobs {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  }
}

}  // namespace

std::string to_text(const MultiGraph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) os << "e " << e.u << " " << e.v << " " << e.mult << "\n";
  return os.str();
}

MultiGraph parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_n = false;
  MultiGraph g;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!have_n) {
      if (tok.size() != 2 || tok[0] != "n")
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'n <N>'");
      int n = parse_int(tok[1], line_no);
      if (n < 0) throw InvalidInput("line " + std::to_string(line_no) + ": negative vertex count");
      g = MultiGraph(n);
      have_n = true;
      continue;
    }
    if (tok.size() != 4 || tok[0] != "e")
      throw InvalidInput("line " + std::to_string(line_no) + ": expected 'e <u> <v> <mult>'");
    int u = parse_int(tok[1], line_no);
    int v = parse_int(tok[2], line_no);
    int m = parse_int(tok[3], line_no);
    std::string where = "line " + std::to_string(line_no) + ": ";
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
      throw InvalidInput(where + "vertex out of range");
    if (u == v) throw InvalidInput(where + "loop edge");
    if (m < 1) throw InvalidInput(where + "multiplicity must be at least 1");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw InvalidInput(where + "duplicate pair");
    g.set_multiplicity(u, v, m);
  }
  if (!have_n) throw InvalidInput("missing 'n <N>' line");
  return g;
}

std::vector<MultiGraph> parse_text_list(const std::string& text) {
  std::vector<MultiGraph> out;
  std::istringstream in(text);
  std::string raw;
  std::string block;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) out.push_back(parse_text(block));
    block.clear();
    has_content = false;
  };
  while (std::getline(in, raw)) {
    auto line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] != '#') has_content = true;
    block += raw + "\n";
  }
  flush();
  return out;
}

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw InvalidInput("graph6 cannot encode parallel edges");
  long long n = g.vertex_count();
  std::string s;
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    s.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    s.push_back(126);
    s.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) s.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return s;
}

MultiGraph parse_graph6(const std::string& input) {
  std::string s = trim(input);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw InvalidInput("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw InvalidInput("invalid graph6 character");
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw InvalidInput("truncated graph6 size field");
      v = (v << 6) | (s[pos++] - 63);
    }
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 100000) throw InvalidInput("graph6 graph too large");
  MultiGraph g(static_cast<int>(n));
  long long need = n * (n - 1) / 2;
  long long expected_chars = (need + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != expected_chars) throw InvalidInput("graph6 length mismatch");
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int c = s[pos + bit / 6] - 63;
      if ((c >> (5 - bit % 6)) & 1) g.set_multiplicity(i, j, 1);
    }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MultiGraph load_graph(const std::string& path) {
  auto text = read_file(path);
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return parse_graph6(text);
  return parse_text(text);
}

}  // namespace uobs
