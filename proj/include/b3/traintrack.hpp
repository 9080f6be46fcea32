#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "b3/garside.hpp"
#include "b3/sl2.hpp"
#include "b3/words.hpp"

namespace b3 {

// Edges of the two spine graphs: the main edges x, y and the loop e_i

// around puncture i. Both graphs have three vertices, one per puncture;
// on graph 1 the main edges run v2->v1 and v3->v2, on graph 2 they run
// v3->v2 and v2->v1 with x on the right, mirroring graph 1.
enum class TrackEdge : uint8_t { X, Y, E1, E2, E3 };

struct SignedEdge {
  TrackEdge edge;
  bool reversed = false;
  auto operator<=>(const SignedEdge&) const = default;
};

using EdgePath = std::vector<SignedEdge>;

SignedEdge reversed(SignedEdge s);
EdgePath reversed(const EdgePath& p);

struct TrackGraph {
  int id;                                  // 1 or 2
  std::array<int, 5> edge_init;            // initial vertex per edge
  std::array<int, 5> edge_term;            // terminal vertex per edge
  std::array<std::array<std::vector<SignedEdge>, 2>, 3> gates;  // per vertex
};

const TrackGraph& track_graph(int id);

// Combinatorial self-map: vertex images plus one edge path per edge.
struct GraphMap {
  int graph = 1;
  std::array<int, 3> vertex_map{0, 1, 2};
  std::array<EdgePath, 5> images;
  long long tightened = 0;  // cancellations recorded during composition

  bool operator==(const GraphMap& o) const {
    return graph == o.graph && vertex_map == o.vertex_map && images == o.images;
  }
};

GraphMap identity_map(int graph);

// Builds a map from textual edge paths like "(-x) e2 y"; validates that the
// paths compose and match the vertex images.
GraphMap make_graph_map(int graph, std::array<int, 3> vertex_map,
                        const std::array<std::string, 5>& paths);

EdgePath parse_edge_path(std::string_view text);
std::string render_edge_path(const EdgePath& p);
std::vector<std::string> render_graph_map(const GraphMap& f);  // "x -> ..." lines

// Image of the half-twist generator (letter in {1,-1,2,-2}) as a self-map
// of the chosen graph. The tables are frozen derived data; the identity,
// braid-relation and backtracking-example tests pin them down.
GraphMap generator_map(int letter, int graph);

// f after h (h acts first): substitute h's edge images into f and tighten.
GraphMap compose(const GraphMap& f, const GraphMap& h);

// Leftmost letter acts first.
GraphMap map_of_word(const BraidWord& w, int graph);

std::array<std::array<long long, 2>, 2> transition_counts(const GraphMap& f);
SL2Matrix transition_matrix(const GraphMap& f);

struct EfficiencyVerdict {
  bool efficient = true;
  int iterate = 0;        // least power whose image backtracks
  TrackEdge edge = TrackEdge::X;  // edge whose image carries the bad turn
  int position = 0;       // index of that turn in the image path
};

// Decides backtracking exactly by closing the taken turns under the
// direction derivative; max_iter is only a defensive cap.
EfficiencyVerdict is_efficient(const GraphMap& f, int max_iter = 64);

// Graph choice and transition matrix of a rigid braid: graph 1 when the
// parity of s matches i = 1, graph 2 for the tau-twisted forms; the matrix
// is the run product and does not depend on the graph.
std::pair<int, SL2Matrix> train_track_of_rigid(const GarsideTuple& t);

// Gate bookkeeping: with main-edge weights (x, y) the loop weights are
// determined; true iff every gate balances.
bool switch_balanced(int graph, double x, double y);

}  // namespace b3
