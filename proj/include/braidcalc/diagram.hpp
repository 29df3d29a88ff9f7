#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidcalc/laurent.hpp"

namespace braidcalc {

// Events are read top to bottom. A cup is a local maximum of the curve: two
// strands are born at columns c, c+1 (width +2). A cap is a local minimum
// joining columns c, c+1 (width -2). A crossing swaps columns c and c+1.
//
// Sign convention, shared with braid words: in x+ the strand running from the
// top right to the bottom left passes over.
/*
        \   /                \   /
         \ /                  \ /
          /        x+          \       x-
         / \                  / \
        /   \                /   \
*/
// An oriented crossing counts +1 for the writhe when x+ has both strands
// pointing the same vertical way (or x- has them opposed), else -1.
enum class EventKind { cup, cap, cross_pos, cross_neg };

struct Event {
  EventKind kind = EventKind::cup;
  int column = 1;

  bool is_crossing() const { return kind == EventKind::cross_pos || kind == EventKind::cross_neg; }
  int crossing_sign() const { return kind == EventKind::cross_pos ? 1 : -1; }
  friend bool operator==(const Event&, const Event&) = default;
};

struct MorseDiagram {
  std::vector<Event> events;

  std::size_t crossing_count() const;
  friend bool operator==(const MorseDiagram&, const MorseDiagram&) = default;
};

// Throws Error{NegativeWidth|ColumnOutOfRange|NonzeroFinalWidth} naming the
// first offending event (0-based).
void validate(const MorseDiagram& d);
// Width after each event; widths[k] is the width above event k.
std::vector<int> widths(const MorseDiagram& d);

// One flag per component, components ordered by their first cup. +1 keeps
// the default (the left strand leaving that cup heads down), -1 reverses it.
struct Orientation {
  std::vector<int> flags;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

struct OrientedDiagram {
  MorseDiagram diagram;
  Orientation orientation;
};

// Strand segments crossing each horizontal line between events. Level L lies
// below event L-1 and above event L; node (L, p) is the p-th segment (0-based)
// at level L. up(n) is the node reached through the event above: the segment
// one level up, or the partner under the same cup. down(n) likewise.
class DiagramGraph {
 public:
  explicit DiagramGraph(const MorseDiagram& d);

  int level_count() const { return static_cast<int>(offset_.size()) - 1; }
  int width(int level) const { return offset_[level + 1] - offset_[level]; }
  int node(int level, int position) const { return offset_[level] + position; }
  int node_count() const { return offset_.back(); }
  int level_of(int node) const { return level_[node]; }
  int position_of(int node) const { return node - offset_[level_[node]]; }
  int up(int node) const { return up_[node]; }
  int down(int node) const { return down_[node]; }

  int component_count() const { return static_cast<int>(first_node_.size()); }
  int component_of(int node) const { return component_[node]; }
  // The left node under the component's first cup.
  int first_node(int component) const { return first_node_[component]; }

  // +1 for a node oriented downward, -1 upward.
  std::vector<int> directions(const Orientation& o) const;

 private:
  std::vector<int> offset_;
  std::vector<int> level_;
  std::vector<int> up_;
  std::vector<int> down_;
  std::vector<int> component_;
  std::vector<int> first_node_;
};

Orientation orient(const MorseDiagram& d, const std::vector<bool>& flips = {});
int components(const MorseDiagram& d);
int writhe(const MorseDiagram& d, const Orientation& o);

// Orientation of `after` agreeing with `before` outside the rewritten window:
// events [start, start+removed) of `before` became [start, start+inserted) of
// `after`. Throws Error{ContractViolation} if the boundary strands disagree.
Orientation carry_orientation(const MorseDiagram& before, const Orientation& o, const MorseDiagram& after,
                              std::size_t start, std::size_t removed, std::size_t inserted);

// The orientation of d whose node directions match every sample; throws
// Error{ContractViolation} on an inconsistent sample set.
struct DirectionSample {
  int level;
  int position;
  int direction;
};
Orientation orientation_from_samples(const MorseDiagram& d, const std::vector<DirectionSample>& samples);

inline constexpr int kDefaultStateSumCap = 16;

// State sum over all 2^c smoothings, normalized to 1 on the unknot. Throws
// Error{CapExceeded} above `crossing_cap` crossings.
LaurentPoly kauffman_bracket(const MorseDiagram& d, int crossing_cap = kDefaultStateSumCap);
// Same polynomial computed level by level over crossingless matchings of the
// current boundary; no cap, cost grows with the diagram width instead.
LaurentPoly kauffman_bracket_transfer(const MorseDiagram& d);

// (-A^3)^{-writhe} * bracket, in A.
LaurentPoly f_polynomial(const LaurentPoly& bracket, int writhe);
// The Jones polynomial from f by q = A^{-4}, in units of q^{1/2}: the term
// c*q^{k/2} is stored at exponent k. Print with to_string_half("q").
LaurentPoly jones_from_f(const LaurentPoly& f);
LaurentPoly jones(const MorseDiagram& d, const Orientation& o);

// Text form: one event per line ("cup 1", "cap 1", "x+ 2", "x- 2"), '#'
// comments, blank lines ignored, optional first line "orient: +1 -2" listing
// every component with its flag.
std::string format_diagram(const MorseDiagram& d, const std::optional<Orientation>& o = std::nullopt);
struct ParsedDiagram {
  MorseDiagram diagram;
  std::optional<Orientation> orientation;
};
// Validates the result; structural errors are reported as ParseError with
// the line of the offending event.
ParsedDiagram parse_diagram(std::string_view text);

}  // namespace braidcalc
