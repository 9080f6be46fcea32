#include "b3/traintrack.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace b3 {

SignedEdge reversed(SignedEdge s) { return {s.edge, !s.reversed}; }

EdgePath reversed(const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

namespace {

constexpr int kEdgeCount = 5;

int edge_index(TrackEdge e) { return static_cast<int>(e); }

const char* edge_name(TrackEdge e) {
  switch (e) {
    case TrackEdge::X: return "x";
    case TrackEdge::Y: return "y";
    case TrackEdge::E1: return "e1";
    case TrackEdge::E2: return "e2";
    case TrackEdge::E3: return "e3";
  }
  throw std::logic_error("bad edge");
}

TrackGraph build_graph(int id) {
  TrackGraph g;
  g.id = id;
  // Loops sit at their puncture's vertex on both graphs.
  auto E = [&](TrackEdge e, int init, int term) {
    g.edge_init[edge_index(e)] = init;
    g.edge_term[edge_index(e)] = term;
  };
  E(TrackEdge::E1, 0, 0);
  E(TrackEdge::E2, 1, 1);
  E(TrackEdge::E3, 2, 2);
  if (id == 1) {
    E(TrackEdge::X, 1, 0);  // v2 -> v1
    E(TrackEdge::Y, 2, 1);  // v3 -> v2
    g.gates[0] = {std::vector<SignedEdge>{{TrackEdge::X, true}},
                  std::vector<SignedEdge>{{TrackEdge::E1, false}, {TrackEdge::E1, true}}};
    g.gates[1] = {std::vector<SignedEdge>{{TrackEdge::X, false}, {TrackEdge::Y, true}},
                  std::vector<SignedEdge>{{TrackEdge::E2, false}, {TrackEdge::E2, true}}};
    g.gates[2] = {std::vector<SignedEdge>{{TrackEdge::Y, false}},
                  std::vector<SignedEdge>{{TrackEdge::E3, false}, {TrackEdge::E3, true}}};
  } else if (id == 2) {
    E(TrackEdge::X, 2, 1);  // v3 -> v2
    E(TrackEdge::Y, 1, 0);  // v2 -> v1
    g.gates[0] = {std::vector<SignedEdge>{{TrackEdge::Y, true}},
                  std::vector<SignedEdge>{{TrackEdge::E1, false}, {TrackEdge::E1, true}}};
    g.gates[1] = {std::vector<SignedEdge>{{TrackEdge::Y, false}, {TrackEdge::X, true}},
                  std::vector<SignedEdge>{{TrackEdge::E2, false}, {TrackEdge::E2, true}}};
    g.gates[2] = {std::vector<SignedEdge>{{TrackEdge::X, false}},
                  std::vector<SignedEdge>{{TrackEdge::E3, false}, {TrackEdge::E3, true}}};
  } else {
    throw std::invalid_argument("graph id must be 1 or 2");
  }
  return g;
}

const TrackGraph kGraph1 = build_graph(1);
const TrackGraph kGraph2 = build_graph(2);

int path_start(const TrackGraph& g, SignedEdge s) {
  return s.reversed ? g.edge_term[edge_index(s.edge)] : g.edge_init[edge_index(s.edge)];
}

int path_end(const TrackGraph& g, SignedEdge s) {
  return s.reversed ? g.edge_init[edge_index(s.edge)] : g.edge_term[edge_index(s.edge)];
}

void validate_map(const GraphMap& f) {
  const TrackGraph& g = track_graph(f.graph);
  for (int e = 0; e < kEdgeCount; ++e) {
    const EdgePath& p = f.images[e];
    if (p.empty()) throw std::invalid_argument("graph map: empty edge image");
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (path_end(g, p[j]) != path_start(g, p[j + 1]))
        throw std::invalid_argument("graph map: image path does not compose");
    if (path_start(g, p.front()) != f.vertex_map[g.edge_init[e]] ||
        path_end(g, p.back()) != f.vertex_map[g.edge_term[e]])
      throw std::invalid_argument("graph map: image endpoints disagree with vertex images");
  }
}

void tighten(EdgePath& p, long long& deletions) {
  EdgePath out;
  out.reserve(p.size());
  for (const SignedEdge& s : p) {
    if (!out.empty() && out.back() == reversed(s)) {
      out.pop_back();
      ++deletions;
    } else {
      out.push_back(s);
    }
  }
  p = std::move(out);
}

}  // namespace

const TrackGraph& track_graph(int id) {
  if (id == 1) return kGraph1;
  if (id == 2) return kGraph2;
  throw std::invalid_argument("graph id must be 1 or 2");
}

GraphMap identity_map(int graph) {
  GraphMap f;
  f.graph = track_graph(graph).id;
  for (int e = 0; e < kEdgeCount; ++e)
    f.images[e] = {SignedEdge{static_cast<TrackEdge>(e), false}};
  return f;
}

EdgePath parse_edge_path(std::string_view text) {
  EdgePath p;
  std::string buf(text);
  for (char& c : buf)
    if (c == '(' || c == ')') c = ' ';
  std::istringstream in(buf);
  std::string tok;
  while (in >> tok) {
    bool rev = false;
    if (tok.rfind("-", 0) == 0) {
      rev = true;
      tok = tok.substr(1);
    }
    TrackEdge e;
    if (tok == "x") e = TrackEdge::X;
    else if (tok == "y") e = TrackEdge::Y;
    else if (tok == "e1") e = TrackEdge::E1;
    else if (tok == "e2") e = TrackEdge::E2;
    else if (tok == "e3") e = TrackEdge::E3;
    else throw std::invalid_argument("edge path: unknown edge '" + tok + "'");
    p.push_back({e, rev});
  }
  return p;
}

std::string render_edge_path(const EdgePath& p) {
  std::string out;
  for (const SignedEdge& s : p) {
    if (!out.empty()) out += ' ';
    if (s.reversed) {
      out += "(-";
      out += edge_name(s.edge);
      out += ')';
    } else {
      out += edge_name(s.edge);
    }
  }
  return out;
}

std::vector<std::string> render_graph_map(const GraphMap& f) {
  std::vector<std::string> lines;
  for (int e = 0; e < kEdgeCount; ++e) {
    lines.push_back(std::string(edge_name(static_cast<TrackEdge>(e))) + " -> " +
                    render_edge_path(f.images[e]));
  }
  return lines;
}

GraphMap make_graph_map(int graph, std::array<int, 3> vertex_map,
                        const std::array<std::string, 5>& paths) {
  GraphMap f;
  f.graph = track_graph(graph).id;
  f.vertex_map = vertex_map;
  for (int e = 0; e < kEdgeCount; ++e) f.images[e] = parse_edge_path(paths[e]);
  validate_map(f);
  return f;
}

namespace {

// Frozen generator action tables. Derived from the half-twist action on the
// spine; the inverse-pair, braid-relation and worked-example tests gate any
// change here.
struct GeneratorTable {
  std::array<int, 3> vertex_map;
  std::array<const char*, 5> paths;  // images of x, y, e1, e2, e3
};

const GeneratorTable& generator_table(int letter, int graph) {
  // Graph 1 tables.
  static const GeneratorTable g1_a{{1, 0, 2}, {"-e1 -x", "y e2 x e1", "e2", "e1", "e3"}};
  static const GeneratorTable g1_A{{1, 0, 2}, {"-e1 -x", "y x", "e2", "e1", "e3"}};
  static const GeneratorTable g1_b{{0, 2, 1}, {"-e3 y x", "-e2 -y", "e1", "e3", "e2"}};
  static const GeneratorTable g1_B{{0, 2, 1}, {"y e2 x", "-e2 -y", "e1", "e3", "e2"}};
  // Graph 2 tables.
  static const GeneratorTable g2_a{{1, 0, 2}, {"x y e2", "-y -e1", "e2", "e1", "e3"}};
  static const GeneratorTable g2_A{{1, 0, 2}, {"x y", "-y -e1", "e2", "e1", "e3"}};
  static const GeneratorTable g2_b{{0, 2, 1}, {"-x -e3", "x y", "e1", "e3", "e2"}};
  static const GeneratorTable g2_B{{0, 2, 1}, {"-x -e3", "e2 x y", "e1", "e3", "e2"}};

  if (graph == 1) {
    switch (letter) {
      case +1: return g1_a;
      case -1: return g1_A;
      case +2: return g1_b;
      case -2: return g1_B;
    }
  } else if (graph == 2) {
    switch (letter) {
      case +1: return g2_a;
      case -1: return g2_A;
      case +2: return g2_b;
      case -2: return g2_B;
    }
  }
  throw std::invalid_argument("generator_map: letter must be one of 1,-1,2,-2");
}

}  // namespace

GraphMap generator_map(int letter, int graph) {
  const GeneratorTable& t = generator_table(letter, graph);
  std::array<std::string, 5> paths;
  for (int e = 0; e < kEdgeCount; ++e) paths[e] = t.paths[e];
  return make_graph_map(graph, t.vertex_map, paths);
}

GraphMap compose(const GraphMap& f, const GraphMap& h) {
  if (f.graph != h.graph) throw std::invalid_argument("compose: graph mismatch");
  GraphMap out;
  out.graph = f.graph;
  out.tightened = 0;
  for (int v = 0; v < 3; ++v) out.vertex_map[v] = f.vertex_map[h.vertex_map[v]];
  for (int e = 0; e < kEdgeCount; ++e) {
    EdgePath img;
    for (const SignedEdge& s : h.images[e]) {
      const EdgePath& piece = f.images[edge_index(s.edge)];
      if (s.reversed) {
        for (auto it = piece.rbegin(); it != piece.rend(); ++it) img.push_back(reversed(*it));
      } else {
        img.insert(img.end(), piece.begin(), piece.end());
      }
    }
    tighten(img, out.tightened);
    if (img.empty()) throw std::logic_error("compose: edge image collapsed");
    out.images[e] = std::move(img);
  }
  validate_map(out);
  return out;
}

GraphMap map_of_word(const BraidWord& w, int graph) {
  GraphMap m = identity_map(graph);
  for (int8_t l : w.letters) m = compose(generator_map(l, graph), m);
  return m;
}

std::array<std::array<long long, 2>, 2> transition_counts(const GraphMap& f) {
  std::array<std::array<long long, 2>, 2> m{{{0, 0}, {0, 0}}};
  for (int e = 0; e < 2; ++e)
    for (const SignedEdge& s : f.images[e]) {
      if (s.edge == TrackEdge::X) ++m[e][0];
      if (s.edge == TrackEdge::Y) ++m[e][1];
    }
  return m;
}

SL2Matrix transition_matrix(const GraphMap& f) {
  auto c = transition_counts(f);
  SL2Matrix m;
  m.m11 = c[0][0];
  m.m12 = c[0][1];
  m.m21 = c[1][0];
  m.m22 = c[1][1];
  return m;
}

namespace {

// A direction is a signed edge read as "departing its start vertex".
using Turn = std::pair<SignedEdge, SignedEdge>;

Turn make_turn(SignedEdge a, SignedEdge b) {
  auto key = [](SignedEdge s) { return edge_index(s.edge) * 2 + (s.reversed ? 1 : 0); };
  return key(a) <= key(b) ? Turn{a, b} : Turn{b, a};
}

SignedEdge derivative(const GraphMap& f, SignedEdge d) {
  const EdgePath& img = f.images[edge_index(d.edge)];
  return d.reversed ? reversed(img.back()) : img.front();
}

}  // namespace

EfficiencyVerdict is_efficient(const GraphMap& f, int max_iter) {
  if (max_iter < 1) throw std::invalid_argument("is_efficient: max_iter must be >= 1");
  struct Taken {
    Turn turn;
    TrackEdge edge;
    int position;
  };
  std::vector<Taken> taken;
  for (int e = 0; e < kEdgeCount; ++e) {
    const EdgePath& p = f.images[e];
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      taken.push_back({make_turn(reversed(p[j]), p[j + 1]), static_cast<TrackEdge>(e),
                       static_cast<int>(j)});
  }

  EfficiencyVerdict best;
  best.efficient = true;
  for (const Taken& t : taken) {
    std::set<Turn> seen;
    Turn cur = t.turn;
    for (int step = 1; step <= max_iter; ++step) {
      cur = make_turn(derivative(f, cur.first), derivative(f, cur.second));
      if (cur.first == cur.second) {
        // Degenerate after `step` derivatives: the (step+1)-st power
        // carries the cancellation.
        const int iterate = step + 1;
        if (best.efficient || iterate < best.iterate) {
          best.efficient = false;
          best.iterate = iterate;
          best.edge = t.edge;
          best.position = t.position;
        }
        break;
      }
      if (!seen.insert(cur).second) break;  // periodic orbit, never degenerate
    }
  }
  return best;
}

std::pair<int, SL2Matrix> train_track_of_rigid(const GarsideTuple& t) {
  if (!is_rigid(t)) throw std::invalid_argument("train track: tuple must be rigid");
  if (t.canonical_length() < 1)
    throw std::invalid_argument("train track: canonical length must be at least 1");
  const bool s_even = ((t.s % 2) + 2) % 2 == 0;
  const int graph = (s_even == (t.i == 1)) ? 1 : 2;
  LUWord w;
  w.runs = t.runs;
  return {graph, matrix_of_lu(w)};
}

bool switch_balanced(int graph, double x, double y) {
  if (!(x > 0) || !(y > 0)) return false;
  const TrackGraph& g = track_graph(graph);
  // Loop weights determined by the main-edge weights.
  std::array<double, 5> weight{x, y, 0, 0, 0};
  for (int v = 0; v < 3; ++v) {
    double stems = 0;
    int loops = 0;
    int loop_edge = -1;
    for (int side = 0; side < 2; ++side)
      for (const SignedEdge& s : g.gates[v][side]) {
        int e = edge_index(s.edge);
        if (e >= 2) {
          ++loops;
          loop_edge = e;
        } else if (side == 0) {
          stems += weight[e];
        }
      }
    if (loops != 2 || loop_edge < 0) return false;
    weight[loop_edge] = stems / 2;
  }
  for (int v = 0; v < 3; ++v) {
    double side_sum[2] = {0, 0};
    for (int side = 0; side < 2; ++side)
      for (const SignedEdge& s : g.gates[v][side]) side_sum[side] += weight[edge_index(s.edge)];
    if (std::abs(side_sum[0] - side_sum[1]) > 1e-9 * (side_sum[0] + side_sum[1])) return false;
  }
  return true;
}

}  // namespace b3
