#include "altsurf/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace altsurf {

char side_letter(Side s) noexcept { return s == Side::left ? 'L' : 'R'; }

std::string_view to_string(DiagramErrorKind kind) noexcept {
  switch (kind) {
    case DiagramErrorKind::syntax: return "syntax";
    case DiagramErrorKind::inconsistent: return "inconsistent";
    case DiagramErrorKind::not_alternating: return "not-alternating";
    case DiagramErrorKind::split: return "split-diagram";
    case DiagramErrorKind::not_planar: return "not-planar";
    case DiagramErrorKind::nugatory: return "nugatory-crossing";
    case DiagramErrorKind::not_prime: return "not-prime";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(DiagramErrorKind kind, const std::string& msg) { throw DiagramError(kind, msg); }

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<std::array<int, 4>> scan() {
    std::vector<std::array<int, 4>> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(token());
      skip_space();
    }
    if (out.empty()) fail(DiagramErrorKind::syntax, "empty PD code");
    return out;
  }

 private:
  std::array<int, 4> token() {
    const std::size_t start = pos_;
    expect('X', start);
    expect('[', start);
    std::array<int, 4> labels{};
    for (int i = 0; i < 4; ++i) {
      skip_space();
      labels[i] = number(start);
      skip_space();
      expect(i < 3 ? ',' : ']', start);
    }
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
      fail(DiagramErrorKind::syntax, "expected whitespace after token at offset " + std::to_string(pos_));
    return labels;
  }

  int number(std::size_t token_start) {
    const std::size_t begin = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail(DiagramErrorKind::syntax, "label too large");
      ++pos_;
    }
    if (pos_ == begin)
      fail(DiagramErrorKind::syntax, "malformed token at offset " + std::to_string(token_start));
    if (value <= 0) fail(DiagramErrorKind::syntax, "labels must be positive");
    return static_cast<int>(value);
  }

  void expect(char c, std::size_t token_start) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(DiagramErrorKind::syntax, "malformed token at offset " + std::to_string(token_start) +
                                         " (expected '" + std::string(1, c) + "')");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

EdgeEnd Diagram::other_end(int edge, EdgeEnd end) const {
  const Edge& e = edges_.at(edge);
  return e.tail == end ? e.head : e.tail;
}

bool Diagram::incident(int edge, int crossing) const {
  const Edge& e = edges_.at(edge);
  return e.tail.crossing == crossing || e.head.crossing == crossing;
}

int Diagram::quadrant_face(Quadrant q) const {
  return quadrant_face_.at(static_cast<std::size_t>(4 * q.crossing + q.position));
}

int Diagram::edge_side_face(EdgeSide s) const { return edges_.at(s.edge).faces[index_of(s.side)]; }

bool Diagram::is_prime() const {
  std::map<std::pair<int, int>, int> shared;
  for (const Edge& e : edges_) {
    auto key = std::minmax(e.faces[0], e.faces[1]);
    if (++shared[{key.first, key.second}] > 1) return false;
  }
  return true;
}

bool Diagram::is_two_strand_torus() const {
  const int n = crossing_count();
  if (n < 2 || components_ > 2) return false;
  std::vector<std::size_t> degrees;
  for (const Face& f : faces_) degrees.push_back(f.degree());
  std::sort(degrees.begin(), degrees.end());
  std::vector<std::size_t> expected(static_cast<std::size_t>(n), 2);
  expected.push_back(static_cast<std::size_t>(n));
  expected.push_back(static_cast<std::size_t>(n));
  std::sort(expected.begin(), expected.end());
  return degrees == expected;
}

std::string Diagram::to_pd() const {
  std::string out;
  for (const Crossing& c : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X[";
    for (int i = 0; i < 4; ++i) {
      if (i) out += ',';
      out += std::to_string(edges_[c.edges[i]].label);
    }
    out += ']';
  }
  return out;
}

Diagram parse_pd(std::string_view text) {
  const auto tokens = PdScanner(text).scan();
  const int n = static_cast<int>(tokens.size());
  const int edge_count = 2 * n;

  Diagram d;
  d.crossings_.resize(n);
  d.edges_.resize(edge_count);

  std::vector<std::vector<EdgeEnd>> ends(edge_count);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      const int label = tokens[c][p];
      if (label > edge_count)
        fail(DiagramErrorKind::inconsistent,
             "label " + std::to_string(label) + " outside 1.." + std::to_string(edge_count));
      d.crossings_[c].edges[p] = label - 1;
      ends[label - 1].push_back({c, p});
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    if (ends[e].size() != 2)
      fail(DiagramErrorKind::inconsistent, "label " + std::to_string(e + 1) + " used " +
                                               std::to_string(ends[e].size()) + " times");
  }

  for (int e = 0; e < edge_count; ++e) {
    Edge& edge = d.edges_[e];
    edge.label = e + 1;
    const EdgeEnd a = ends[e][0];
    const EdgeEnd b = ends[e][1];
    if (Crossing::is_over(a.position) == Crossing::is_over(b.position))
      fail(DiagramErrorKind::not_alternating,
           "edge " + std::to_string(e + 1) + " runs " +
               (Crossing::is_over(a.position) ? "over" : "under") + " at both ends");
    edge.over_end = Crossing::is_over(a.position) ? a : b;
    edge.under_end = Crossing::is_over(a.position) ? b : a;
    if (edge.under_end.position == 0) {
      edge.head = edge.under_end;
      edge.tail = edge.over_end;
    } else {
      edge.tail = edge.under_end;
      edge.head = edge.over_end;
    }
  }

  for (int c = 0; c < n; ++c) {
    const Edge& e1 = d.edges_[d.crossings_[c].edges[1]];
    const Edge& e3 = d.edges_[d.crossings_[c].edges[3]];
    const bool in1 = e1.head == EdgeEnd{c, 1};
    const bool in3 = e3.head == EdgeEnd{c, 3};
    if (in1 == in3)
      fail(DiagramErrorKind::inconsistent,
           "overstrand orientation at crossing " + std::to_string(c + 1) + " is inconsistent");
  }

  DisjointSets graph(n);
  for (const Edge& e : d.edges_) graph.unite(e.tail.crossing, e.head.crossing);
  for (int c = 1; c < n; ++c) {
    if (graph.find(c) != graph.find(0)) fail(DiagramErrorKind::split, "diagram is disconnected");
  }

  d.quadrant_face_.assign(static_cast<std::size_t>(4 * n), -1);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      if (d.quadrant_face_[4 * c + p] != -1) continue;
      const int fid = static_cast<int>(d.faces_.size());
      Face face;
      Quadrant q{c, p};
      while (d.quadrant_face_[4 * q.crossing + q.position] == -1) {
        d.quadrant_face_[4 * q.crossing + q.position] = fid;
        const EdgeEnd leave{q.crossing, (q.position + 1) % 4};
        const int e = d.edge_at(leave);
        const Side side = d.edges_[e].tail == leave ? Side::right : Side::left;
        face.corners.push_back(q);
        face.sides.push_back({e, side});
        face.departures.push_back(leave);
        d.edges_[e].faces[index_of(side)] = fid;
        const EdgeEnd arrive = d.other_end(e, leave);
        q = {arrive.crossing, arrive.position};
      }
      d.faces_.push_back(std::move(face));
    }
  }
  if (d.face_count() != n + 2)
    fail(DiagramErrorKind::not_planar, "rotation system has " + std::to_string(d.face_count()) +
                                           " faces, expected " + std::to_string(n + 2));

  for (const Face& f : d.faces_) {
    std::vector<int> seen;
    for (const Quadrant& q : f.corners) {
      if (std::find(seen.begin(), seen.end(), q.crossing) != seen.end())
        fail(DiagramErrorKind::nugatory, "crossing " + std::to_string(q.crossing + 1) + " is nugatory");
      seen.push_back(q.crossing);
    }
  }

  std::vector<int> component(edge_count, -1);
  for (int start = 0; start < edge_count; ++start) {
    if (component[start] != -1) continue;
    int e = start;
    while (component[e] == -1) {
      component[e] = d.components_;
      const EdgeEnd h = d.edges_[e].head;
      e = d.edge_at({h.crossing, (h.position + 2) % 4});
    }
    ++d.components_;
  }
  for (int e = 0; e < edge_count; ++e) d.edges_[e].component = component[e];

  return d;
}

std::vector<KnotTableEntry> read_knot_table(std::istream& in) {
  std::vector<KnotTableEntry> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      fail(DiagramErrorKind::syntax, "knot table line " + std::to_string(number) + ": missing tab");
    KnotTableEntry entry;
    entry.name = line.substr(0, tab);
    entry.pd = line.substr(tab + 1);
    entry.line = number;
    const auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(entry.name);
    trim(entry.pd);
    if (entry.name.empty())
      fail(DiagramErrorKind::syntax, "knot table line " + std::to_string(number) + ": empty name");
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<KnotTableEntry> read_knot_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knot table " + path);
  return read_knot_table(in);
}

}  // namespace altsurf
