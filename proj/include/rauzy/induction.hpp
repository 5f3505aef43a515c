#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/matrix.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

enum class Side { Top, Bottom };

inline char side_char(Side s) { return s == Side::Top ? 't' : 'b'; }

// A forward Rauzy-Veech word, e.g. "b3 t2 b3 t b2 t b3 t2 b3".
using RauzyWord = std::vector<Side>;

RauzyWord parse_word(const std::string& text);
std::string word_str(const RauzyWord& w);

// Winner and loser letters of the move on the given side (winner is the last
// letter of that row). Throws domain_error when they coincide (reducible
// input).
std::pair<int, int> winner_loser(const GP& pi, Side side);

// One forward induction step.
GP rauzy_move(const GP& pi, Side side);

// Move together with the fate of every linear position: pos_map[p] is the
// new linear position of old position p, or -1 for the loser occurrence that
// was removed; inserted_pos is the new position of the re-inserted loser.
struct MoveDetail {
  GP next;
  std::vector<long> pos_map;
  long inserted_pos = -1;
  long removed_pos = -1;
};
MoveDetail rauzy_move_detail(const GP& pi, Side side);

// Unique forward preimage along `side`, if it exists.
std::optional<GP> backward_move(const GP& pi, Side side);

// d x d elementary matrix E = I + M_{winner,loser}; E x' = x, E^T y = y'.
IMat elementary_matrix(const GP& pi, Side side);

// Product of elementary matrices along the word, in application order, so
// that B_w x_final = x_initial. Returns the matrix and the end permutation.
std::pair<IMat, GP> word_matrix_end(const GP& pi, const RauzyWord& w);
IMat word_matrix(const GP& pi, const RauzyWord& w);

struct RauzyDiagram {
  bool reduced = false;
  bool truncated = false;  // only settable by hand-built test diagrams
  std::vector<GP> vertices;                // BFS order from the root
  std::vector<std::array<int, 2>> edges;   // [top target, bottom target]
  std::map<std::string, int> index;

  size_t size() const { return vertices.size(); }
  int target(int v, Side s) const { return edges[v][s == Side::Top ? 0 : 1]; }
  int vertex_of(const GP& pi) const;
  std::string dot() const;
};

// BFS closure of the permutation under both moves; if reduced, vertices are
// canonical forms. Deterministic vertex order (FIFO, top edge before bottom).
// Throws limit_error beyond max_vertices.
RauzyDiagram build_diagram(const GP& pi, bool reduced, size_t max_vertices = 100000);

// Requires a complete diagram (domain_error on truncated input).
bool is_strongly_connected(const RauzyDiagram& d);

// Shortest directed path base -> v (ties: earlier BFS discovery, top edge
// first). Empty for v == base.
RauzyWord path_from_base(const RauzyDiagram& d, int base, int v);
// Shortest directed path v -> base, deterministic.
RauzyWord path_to_base(const RauzyDiagram& d, int base, int v);

// A step of an undirected edge walk: the edge tail --side--> target(tail,side),
// traversed forward (dir = +1) or backward (dir = -1).
struct WalkStep {
  int tail;
  Side side;
  int dir;
};

struct LoopPiece {
  RauzyWord word;  // directed loop based at `base`
  int sign;        // +-1, exponent of the piece in the decomposition
};

// Decomposes an undirected loop based at `base` into directed loops
// lambda_i = xi(start_i) run_i xi'(end_i), with signs, following the
// loop-decomposition of the Rauzy homomorphism. The product of the pieces is
// freely homotopic (as an edge word) to the input walk.
std::vector<LoopPiece> decompose_loop(const RauzyDiagram& d, int base,
                                      const std::vector<WalkStep>& walk);

}  // namespace rauzy
