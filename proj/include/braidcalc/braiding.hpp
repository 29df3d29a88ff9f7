#pragma once

#include <cstddef>
#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/diagram.hpp"

namespace braidcalc {

enum class Side { over, under };
enum class BraidingAlgorithm { lr, kl };

// A run of upward oriented segments of one strand, listed bottom to top as
// DiagramGraph nodes. A maximal up-arc starts just above a cap and ends just
// below a cup. Pieces produced by split_up_arc may instead end at a cut: the
// middle of a node shared with the neighbouring piece.
struct UpArc {
  std::vector<int> nodes;
  int bottom_level = 0;
  int bottom_column = 1;  // 1-based
  int top_level = 0;
  int top_column = 1;
  bool cut_below = false;  // bottom end is a cut rather than a cap
  bool cut_above = false;  // top end is a cut rather than a cup
  // Over/under for each crossing traversed, bottom to top.
  std::vector<Side> crossing_labels;

  bool free() const { return crossing_labels.empty(); }
  friend bool operator==(const UpArc&, const UpArc&) = default;
};

// Maximal up-arcs ordered by top endpoint: level, then column.
std::vector<UpArc> find_up_arcs(const MorseDiagram& d, const Orientation& o);

// Splits an arc into pieces of constant label. Where the label changes the
// arc is cut in the middle of the node just above the last crossing of the
// lower piece, so consecutive pieces share that node. Free and uniform arcs
// come back unchanged.
std::vector<UpArc> split_up_arc(const MorseDiagram& d, const UpArc& arc);

// A diagram together with a set of up-arc pieces, some of which have been
// braided. Rendering redraws the whole diagram: each braided piece is
// removed and replaced by a strand running from its top end up to the top of
// the diagram and from its bottom end down to the bottom, in its own column
// right of everything else, closed by a side arc. Each replacement lies at a
// constant height, above the diagram for over pieces and below it for under
// ones, and wherever two strands meet the higher one passes over. Heights
// are ordered so that pulling the pieces out one by one is an isotopy;
// rendering throws Error{ContractViolation} if no such order exists.
class BraidingState {
 public:
  // Pieces must be label uniform and pairwise disjoint apart from shared cut
  // nodes. They are kept in the order given; that order fixes the columns.
  BraidingState(OrientedDiagram base, std::vector<UpArc> pieces);

  const OrientedDiagram& base() const { return base_; }
  const std::vector<UpArc>& pieces() const { return pieces_; }
  bool braided(std::size_t piece) const { return side_[piece] != 0; }
  // Unbraided pieces; the termination measure of to_braid.
  std::size_t remaining() const;

  // Throws Error{Precondition} when the piece is already braided or `side`
  // disagrees with its crossing labels.
  void braid(std::size_t piece, Side side);

  OrientedDiagram render() const;

 private:
  OrientedDiagram base_;
  std::vector<UpArc> pieces_;
  std::vector<int> side_;  // 0 unbraided, +1 over, -1 under
};

// One braiding move on a single label-uniform up-arc of d.
OrientedDiagram braiding_move(const OrientedDiagram& d, const UpArc& arc, Side side);

// Replaces the crossing at `event_index` by a rotated copy whose strands both
// point down: one quarter turn (two extra events) when a single strand points
// up, two quarter turns (four extra events) when both do. Throws
// Error{Precondition} for a crossing that already points down, and
// Error{NoMatch} when the event is not a crossing.
OrientedDiagram rotate_crossing(const OrientedDiagram& d, std::size_t event_index);
// Rotates every crossing with an upward strand, in event order.
OrientedDiagram prepare_all_down(const OrientedDiagram& d);

// n nested cups, the crossings of w on columns 1..n, n nested caps.
MorseDiagram closure(const BraidWord& w);
// Inverse of closure on diagrams of exactly that shape (strands must all
// point down inside); throws Error{NoMatch} otherwise.
BraidWord read_closure(const OrientedDiagram& d);

BraidWord to_braid(const OrientedDiagram& d, BraidingAlgorithm algorithm);
BraidWord to_braid(const MorseDiagram& d, BraidingAlgorithm algorithm);

// Free reduction and destabilization, repeated until neither applies.
BraidWord canonicalize(const BraidWord& w);

}  // namespace braidcalc
