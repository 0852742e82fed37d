#include "z2lab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace z2lab {

namespace {

// Strips comments and blank lines; returns the remaining lines.
std::vector<std::string> clean_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

// Parses the graph header lines; returns the index of the first line after it.
size_t parse_graph_lines(const std::vector<std::string>& lines, Graph* g) {
  if (lines.empty()) throw std::invalid_argument("graph text: empty input");
  std::istringstream head(lines[0]);
  std::string tag;
  int nv, ne;
  if (!(head >> tag >> nv >> ne) || tag != "g")
    throw std::invalid_argument("graph text: expected 'g <V> <E>'");
  *g = Graph(nv);
  size_t i = 1;
  int edges_seen = 0;
  for (; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    std::string t;
    is >> t;
    if (t == "e") {
      int id, u, v;
      if (!(is >> id >> u >> v)) throw std::invalid_argument("graph text: bad edge line");
      if (id != edges_seen)
        throw std::invalid_argument("graph text: edge ids must be dense and in order");
      if (g->add_edge(u, v) != id) throw std::invalid_argument("graph text: duplicate edge");
      ++edges_seen;
    } else if (t == "l") {
      int v;
      std::string label;
      if (!(is >> v >> label)) throw std::invalid_argument("graph text: bad label line");
      g->set_label(v, label);
    } else {
      break;
    }
  }
  if (edges_seen != ne) throw std::invalid_argument("graph text: edge count mismatch");
  return i;
}

}  // namespace

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "g " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (int e = 0; e < g.num_edges(); ++e)
    os << "e " << e << " " << g.edge(e).first << " " << g.edge(e).second << "\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!g.label(v).empty()) os << "l " << v << " " << g.label(v) << "\n";
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  Graph g;
  auto lines = clean_lines(text);
  size_t used = parse_graph_lines(lines, &g);
  if (used != lines.size()) throw std::invalid_argument("graph text: trailing content");
  return g;
}

std::string scheme_to_text(const EmbeddingScheme& s) {
  std::ostringstream os;
  os << graph_to_text(s.g);
  for (int v = 0; v < s.g.num_vertices(); ++v) {
    os << "r " << v << ":";
    for (int e : s.rotation[v]) os << " " << e;
    os << "\n";
  }
  for (int e = 0; e < s.g.num_edges(); ++e)
    if (s.signature[e] < 0) os << "s " << e << ": -1\n";
  return os.str();
}

EmbeddingScheme scheme_from_text(const std::string& text) {
  auto lines = clean_lines(text);
  EmbeddingScheme s;
  size_t i = parse_graph_lines(lines, &s.g);
  s.rotation.assign(s.g.num_vertices(), {});
  s.signature.assign(s.g.num_edges(), 1);
  for (; i < lines.size(); ++i) {
    std::string fixed = lines[i];
    for (char& c : fixed)
      if (c == ':') c = ' ';
    std::istringstream is(fixed);
    std::string t;
    is >> t;
    if (t == "r") {
      int v;
      if (!(is >> v) || v < 0 || v >= s.g.num_vertices())
        throw std::invalid_argument("scheme text: bad rotation line");
      int e;
      s.rotation[v].clear();
      while (is >> e) s.rotation[v].push_back(e);
    } else if (t == "s") {
      int e, sig;
      if (!(is >> e >> sig) || e < 0 || e >= s.g.num_edges() || (sig != 1 && sig != -1))
        throw std::invalid_argument("scheme text: bad signature line");
      s.signature[e] = static_cast<int8_t>(sig);
    } else {
      throw std::invalid_argument("scheme text: unknown line '" + lines[i] + "'");
    }
  }
  s.validate();
  return s;
}

std::string drawing_to_text(const CrosscapDrawing& d) {
  std::ostringstream os;
  os << graph_to_text(d.g);
  os << "h " << d.h << "\n";
  for (int e = 0; e < d.g.num_edges(); ++e)
    if (!d.y[e].is_zero()) os << "y " << e << ": " << d.y[e].to_string() << "\n";
  for (const auto& [key, bit] : d.x)
    if (bit) os << "x " << key.first << " " << key.second << ": 1\n";
  return os.str();
}

CrosscapDrawing drawing_from_text(const std::string& text) {
  auto lines = clean_lines(text);
  CrosscapDrawing d;
  size_t i = parse_graph_lines(lines, &d.g);
  bool have_h = false;
  for (; i < lines.size(); ++i) {
    std::string fixed = lines[i];
    for (char& c : fixed)
      if (c == ':') c = ' ';
    std::istringstream is(fixed);
    std::string t;
    is >> t;
    if (t == "h") {
      if (!(is >> d.h) || d.h < 0) throw std::invalid_argument("drawing text: bad h line");
      d.y.assign(d.g.num_edges(), BitVec(d.h));
      have_h = true;
    } else if (t == "y") {
      if (!have_h) throw std::invalid_argument("drawing text: y before h");
      int e;
      std::string bits;
      if (!(is >> e >> bits) || e < 0 || e >= d.g.num_edges())
        throw std::invalid_argument("drawing text: bad y line");
      BitVec v = BitVec::from_string(bits);
      if (v.length() != d.h) throw std::invalid_argument("drawing text: y length != h");
      d.y[e] = v;
    } else if (t == "x") {
      if (!have_h) throw std::invalid_argument("drawing text: x before h");
      int e1, e2, bit;
      if (!(is >> e1 >> e2 >> bit) || bit != 1)
        throw std::invalid_argument("drawing text: bad x line");
      d.set_x_parity(e1, e2, 1);
    } else {
      throw std::invalid_argument("drawing text: unknown line '" + lines[i] + "'");
    }
  }
  if (!have_h) throw std::invalid_argument("drawing text: missing h line");
  d.validate();
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace z2lab
