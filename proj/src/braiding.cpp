#include "braidcalc/braiding.hpp"

#include <algorithm>
#include <optional>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

// Label of the crossing passed when moving up from `lower` to `upper`, or
// nothing when the event between them is not a crossing.
std::optional<Side> crossing_label(const MorseDiagram& d, const DiagramGraph& g, int upper) {
  const Event& e = d.events[static_cast<std::size_t>(g.level_of(upper))];
  const int p = g.position_of(upper);
  if (!e.is_crossing() || (p != e.column - 1 && p != e.column)) return std::nullopt;
  // The strand leaving the top-right corner is the one moving left.
  const bool moves_left = p == e.column;
  const bool over = moves_left == (e.kind == EventKind::cross_pos);
  return over ? Side::over : Side::under;
}

void set_endpoints(const DiagramGraph& g, UpArc& arc) {
  arc.bottom_level = g.level_of(arc.nodes.front());
  arc.bottom_column = g.position_of(arc.nodes.front()) + 1;
  arc.top_level = g.level_of(arc.nodes.back());
  arc.top_column = g.position_of(arc.nodes.back()) + 1;
}

bool top_first(const UpArc& a, const UpArc& b) {
  return std::pair(a.top_level, a.top_column) < std::pair(b.top_level, b.top_column);
}

}  // namespace

std::vector<UpArc> find_up_arcs(const MorseDiagram& d, const Orientation& o) {
  DiagramGraph g(d);
  auto dirs = g.directions(o);
  std::vector<UpArc> arcs;
  for (int n = 0; n < g.node_count(); ++n) {
    // Bottom of an up-arc: heading up, and the cap below joins it to its
    // partner at the same level.
    if (dirs[n] != -1 || g.level_of(g.down(n)) != g.level_of(n)) continue;
    UpArc arc;
    int cur = n;
    while (true) {
      arc.nodes.push_back(cur);
      int next = g.up(cur);
      if (g.level_of(next) == g.level_of(cur)) break;
      if (auto label = crossing_label(d, g, next)) arc.crossing_labels.push_back(*label);
      cur = next;
    }
    set_endpoints(g, arc);
    arcs.push_back(std::move(arc));
  }
  std::sort(arcs.begin(), arcs.end(), top_first);
  return arcs;
}

std::vector<UpArc> split_up_arc(const MorseDiagram& d, const UpArc& arc) {
  DiagramGraph g(d);
  std::vector<std::size_t> cuts;  // indices into arc.nodes
  std::optional<Side> previous;
  std::size_t last_crossing_top = 0;
  for (std::size_t t = 0; t + 1 < arc.nodes.size(); ++t) {
    auto label = crossing_label(d, g, arc.nodes[t + 1]);
    if (!label) continue;
    if (previous && *previous != *label) cuts.push_back(last_crossing_top);
    previous = label;
    last_crossing_top = t + 1;
  }
  if (cuts.empty()) return {arc};

  std::vector<UpArc> pieces;
  std::size_t from = 0;
  cuts.push_back(arc.nodes.size() - 1);
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    UpArc piece;
    piece.nodes.assign(arc.nodes.begin() + static_cast<std::ptrdiff_t>(from),
                       arc.nodes.begin() + static_cast<std::ptrdiff_t>(cuts[c]) + 1);
    piece.cut_below = c == 0 ? arc.cut_below : true;
    piece.cut_above = c + 1 == cuts.size() ? arc.cut_above : true;
    for (std::size_t t = 0; t + 1 < piece.nodes.size(); ++t) {
      if (auto label = crossing_label(d, g, piece.nodes[t + 1])) piece.crossing_labels.push_back(*label);
    }
    set_endpoints(g, piece);
    pieces.push_back(std::move(piece));
    from = cuts[c];
  }
  return pieces;
}

BraidingState::BraidingState(OrientedDiagram base, std::vector<UpArc> pieces)
    : base_(std::move(base)), pieces_(std::move(pieces)) {
  DiagramGraph g(base_.diagram);
  for (const auto& p : pieces_) {
    if (p.nodes.empty()) throw Error(ErrorCode::Precondition, "empty up-arc piece");
    for (int n : p.nodes) {
      if (n < 0 || n >= g.node_count()) throw Error(ErrorCode::Precondition, "up-arc node outside the diagram");
    }
  }
  side_.assign(pieces_.size(), 0);
}

std::size_t BraidingState::remaining() const {
  return static_cast<std::size_t>(std::count(side_.begin(), side_.end(), 0));
}

void BraidingState::braid(std::size_t piece, Side side) {
  if (piece >= pieces_.size()) throw Error(ErrorCode::Precondition, "no such up-arc piece");
  if (side_[piece] != 0) throw Error(ErrorCode::Precondition, "up-arc piece already braided");
  const auto& labels = pieces_[piece].crossing_labels;
  if (std::any_of(labels.begin(), labels.end(), [&](Side s) { return s != side; })) {
    throw Error(ErrorCode::Precondition, "braiding side disagrees with the crossing labels of the up-arc");
  }
  side_[piece] = side == Side::over ? 1 : -1;
}

namespace {

// Heights in doubled units: level L sits at 2L, the event between levels L
// and L+1 at 2L+1.
int top_y(const UpArc& p) { return p.cut_above ? 2 * p.top_level : 2 * p.top_level - 1; }
int bottom_y(const UpArc& p) { return p.cut_below ? 2 * p.bottom_level : 2 * p.bottom_level + 1; }

// Doubled horizontal position of a piece end: a cut sits on its node, a cup
// or cap between its two arms.
int end_x(const MorseDiagram& d, const DiagramGraph& g, const UpArc& p, bool top) {
  const int node = top ? p.nodes.back() : p.nodes.front();
  if (top ? p.cut_above : p.cut_below) return 2 * g.position_of(node);
  const int event = top ? g.level_of(node) - 1 : g.level_of(node);
  return 2 * d.events[static_cast<std::size_t>(event)].column - 1;
}

// Doubled position of the piece at height y, strictly inside its span. At an
// event row the level on the side where the event's arms exist is used.
int piece_x(const MorseDiagram& d, const DiagramGraph& g, const UpArc& p, int y) {
  int level = y / 2;
  if (y % 2 == 1 && d.events[static_cast<std::size_t>(level)].kind == EventKind::cup) ++level;
  return 2 * g.position_of(p.nodes[static_cast<std::size_t>(p.bottom_level - level)]);
}

// Height of every braided piece's replacement strand (0 for the rest). The
// replacements are pulled out one after another in piece order. Pulling
// piece j out sweeps the region right of it, so an earlier replacement whose
// end lies there must sit nearer the diagram than j; an earlier replacement
// whose end lies left of j crosses j's arc and must sit farther out.
std::vector<double> layer_heights(const MorseDiagram& d, const std::vector<UpArc>& pieces,
                                  const std::vector<int>& side) {
  const DiagramGraph g(d);
  const std::size_t m = pieces.size();
  std::vector<std::vector<std::size_t>> inner(m);  // inner[i]: pieces that must lie nearer than i
  std::vector<int> pending(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (side[j] == 0) continue;
    const int lo = top_y(pieces[j]);
    const int hi = bottom_y(pieces[j]);
    for (std::size_t i = 0; i < j; ++i) {
      if (side[i] != side[j]) continue;
      int need = 0;  // +1: i outside j, -1: i inside j
      for (bool top : {true, false}) {
        const int y = top ? top_y(pieces[i]) : bottom_y(pieces[i]);
        // The end's ray runs toward the top or bottom of the diagram. Two cuts
        // on one level tie; count the end when its ray enters j's span.
        if (top ? (y <= lo || y > hi) : (y < lo || y >= hi)) continue;
        const int want = end_x(d, g, pieces[i], top) < piece_x(d, g, pieces[j], y) ? 1 : -1;
        if (need != 0 && need != want) {
          throw Error(ErrorCode::ContractViolation, "up-arc pieces admit no consistent layering");
        }
        need = want;
      }
      if (need > 0) {
        inner[i].push_back(j);
        ++pending[j];
      } else if (need < 0) {
        inner[j].push_back(i);
        ++pending[i];
      }
    }
  }
  // Outermost first; among free choices the later piece goes outside.
  std::vector<double> height(m, 0.0);
  std::vector<bool> placed(m, false);
  for (int s : {1, -1}) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < m; ++j) count += side[j] == s;
    for (std::size_t rank = count; rank > 0; --rank) {
      std::size_t pick = m;
      for (std::size_t j = m; j-- > 0;) {
        if (side[j] == s && !placed[j] && pending[j] == 0) {
          pick = j;
          break;
        }
      }
      if (pick == m) throw Error(ErrorCode::ContractViolation, "up-arc pieces admit no consistent layering");
      placed[pick] = true;
      height[pick] = s * static_cast<double>(rank);
      for (std::size_t k : inner[pick]) --pending[k];
    }
  }
  return height;
}

// One column of the row being drawn: a strand of the original diagram
// (node >= 0) or the replacement strand of a braided piece.
struct Token {
  int node = -1;
  int piece = -1;
  int dir = 1;
};

class Renderer {
 public:
  Renderer(const OrientedDiagram& base, const std::vector<UpArc>& pieces, const std::vector<int>& side)
      : d_(base.diagram), g_(base.diagram), dirs_(g_.directions(base.orientation)), pieces_(pieces), side_(side),
        height_(layer_heights(base.diagram, pieces, side)) {
    owner_top_.assign(static_cast<std::size_t>(g_.node_count()), -1);
    owner_bottom_.assign(static_cast<std::size_t>(g_.node_count()), -1);
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (side[j] == 0) continue;
      const auto& nodes = pieces[j].nodes;
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (!(t == 0 && pieces[j].cut_below)) owner_bottom_[nodes[t]] = static_cast<int>(j);
        if (!(t + 1 == nodes.size() && pieces[j].cut_above)) owner_top_[nodes[t]] = static_cast<int>(j);
      }
    }
  }

  OrientedDiagram run() {
    std::vector<int> braided;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      if (side_[j] != 0) braided.push_back(static_cast<int>(j));
    }
    const int k = static_cast<int>(braided.size());
    for (int t = 0; t < k; ++t) {
      row_.push_back({-1, braided[t], 1});
      emit({EventKind::cup, t + 1});
    }

    for (int L = 0; L + 1 < g_.level_count(); ++L) {
      if (L > 0) cuts(L);
      event(L);
    }

    for (int t = k; t >= 1; --t) {
      row_.pop_back();
      emit({EventKind::cap, t});
    }
    OrientedDiagram out;
    out.diagram.events = std::move(events_);
    out.orientation = orientation_from_samples(out.diagram, samples_);
    return out;
  }

 private:
  double layer_of(const Token& t) const { return t.piece < 0 ? 0.0 : height_[static_cast<std::size_t>(t.piece)]; }

  void emit(Event e) {
    events_.push_back(e);
    const int level = static_cast<int>(events_.size());
    for (std::size_t p = 0; p < row_.size(); ++p) samples_.push_back({level, static_cast<int>(p), row_[p].dir});
  }

  int core_size() const {
    return static_cast<int>(std::count_if(row_.begin(), row_.end(), [](const Token& t) { return t.node >= 0; }));
  }

  int index_of_node(int node) const {
    for (std::size_t p = 0; p < row_.size(); ++p) {
      if (row_[p].node == node) return static_cast<int>(p);
    }
    throw Error(ErrorCode::ContractViolation, "braiding renderer lost a strand");
  }

  int index_of_piece(int piece) const {
    for (std::size_t p = 0; p < row_.size(); ++p) {
      if (row_[p].node < 0 && row_[p].piece == piece) return static_cast<int>(p);
    }
    throw Error(ErrorCode::ContractViolation, "braiding renderer lost a side column");
  }

  // Index at which a core strand at `position` of the current level belongs.
  int core_slot(int position) const {
    int slot = 0;
    for (const auto& t : row_) {
      if (t.node >= 0 && g_.position_of(t.node) < position) ++slot;
    }
    return slot;
  }

  // Where the side column of `piece` sits among the active side columns.
  int side_slot(int piece, int mover) const {
    int slot = 0;
    for (std::size_t p = 0; p < row_.size(); ++p) {
      if (static_cast<int>(p) == mover) continue;
      const auto& t = row_[p];
      if (t.node >= 0 || t.piece < piece) ++slot;
    }
    return slot;
  }

  // Slides the token at `from` to `to`, one crossing per neighbour passed.
  void slide(int from, int to) {
    while (from > to) {
      const bool over = layer_of(row_[from]) > layer_of(row_[from - 1]);
      std::swap(row_[from], row_[from - 1]);
      emit({over ? EventKind::cross_pos : EventKind::cross_neg, from});
      --from;
    }
    while (from < to) {
      const bool over = layer_of(row_[from]) > layer_of(row_[from + 1]);
      std::swap(row_[from], row_[from + 1]);
      emit({over ? EventKind::cross_neg : EventKind::cross_pos, from + 1});
      ++from;
    }
  }

  void send_right(int from, int piece) {
    row_[from] = {-1, piece, 1};
    slide(from, side_slot(piece, from));
  }

  void cuts(int L) {
    for (int p = 0; p < g_.width(L); ++p) {
      const int n = g_.node(L, p);
      const int above = owner_top_[n];
      const int below = owner_bottom_[n];
      if (above == below) continue;
      if (above >= 0 && below >= 0) {
        // Both halves braided: the strand from the top arrives here and
        // leaves again for the lower column.
        int at = index_of_piece(below);
        int slot = core_slot(p);
        slide(at, slot);
        send_right(slot, above);
      } else if (below >= 0) {
        // The piece below ends here; its replacement meets the strand that
        // continues upward and turns into it.
        int at = index_of_piece(below);
        int target = index_of_node(n) + 1;
        slide(at, target);
        row_.erase(row_.begin() + target - 1, row_.begin() + target + 1);
        emit({EventKind::cap, target});
      } else {
        // The piece above starts here: the strand rising from below turns
        // down and heads for the side column.
        int slot = core_slot(p);
        row_.insert(row_.begin() + slot, {Token{n, -1, dirs_[n]}, Token{-1, above, 1}});
        emit({EventKind::cup, slot + 1});
        send_right(slot + 1, above);
      }
    }
  }

  void descend(int L) {
    for (auto& t : row_) {
      if (t.node >= 0 && g_.level_of(t.node) == L) {
        t.node = g_.down(t.node);
        t.dir = dirs_[t.node];
      }
    }
  }

  void event(int L) {
    const Event& e = d_.events[static_cast<std::size_t>(L)];
    const int idx = e.column - 1;
    switch (e.kind) {
      case EventKind::cross_pos:
      case EventKind::cross_neg: {
        const int a = g_.node(L, idx), b = g_.node(L, idx + 1);
        if (owner_bottom_[a] < 0 && owner_bottom_[b] < 0) {
          const int ia = index_of_node(a);
          if (index_of_node(b) != ia + 1) throw Error(ErrorCode::ContractViolation, "crossing strands not adjacent");
          std::swap(row_[ia], row_[ia + 1]);
          descend(L);
          emit({e.kind, ia + 1});
          return;
        }
        descend(L);
        return;
      }
      case EventKind::cup: {
        descend(L);
        const int u = g_.node(L + 1, idx), v = g_.node(L + 1, idx + 1);
        const int up_arm = dirs_[u] < 0 ? u : v;
        const int down_arm = up_arm == u ? v : u;
        const int piece = owner_top_[up_arm];
        if (piece >= 0) {
          const int slot = core_slot(g_.position_of(down_arm));
          slide(index_of_piece(piece), slot);
          row_[slot] = {down_arm, -1, dirs_[down_arm]};
          return;
        }
        const int slot = core_slot(idx);
        row_.insert(row_.begin() + slot, {Token{u, -1, dirs_[u]}, Token{v, -1, dirs_[v]}});
        emit({EventKind::cup, slot + 1});
        return;
      }
      case EventKind::cap: {
        const int a = g_.node(L, idx), b = g_.node(L, idx + 1);
        const int up_arm = dirs_[a] < 0 ? a : b;
        const int down_arm = up_arm == a ? b : a;
        const int piece = owner_bottom_[up_arm];
        if (piece >= 0) {
          send_right(index_of_node(down_arm), piece);
          descend(L);
          return;
        }
        const int ia = index_of_node(a);
        if (index_of_node(b) != ia + 1) throw Error(ErrorCode::ContractViolation, "cap strands not adjacent");
        row_.erase(row_.begin() + ia, row_.begin() + ia + 2);
        descend(L);
        emit({EventKind::cap, ia + 1});
        return;
      }
    }
  }

  const MorseDiagram& d_;
  DiagramGraph g_;
  std::vector<int> dirs_;
  const std::vector<UpArc>& pieces_;
  const std::vector<int>& side_;
  std::vector<double> height_;
  std::vector<int> owner_top_;
  std::vector<int> owner_bottom_;
  std::vector<Token> row_;
  std::vector<Event> events_;
  std::vector<DirectionSample> samples_;
};

}  // namespace

OrientedDiagram BraidingState::render() const { return Renderer(base_, pieces_, side_).run(); }

OrientedDiagram braiding_move(const OrientedDiagram& d, const UpArc& arc, Side side) {
  auto labels = arc.crossing_labels;
  if (std::adjacent_find(labels.begin(), labels.end(), std::not_equal_to<>()) != labels.end()) {
    throw Error(ErrorCode::Precondition, "up-arc has mixed crossing labels; split it first");
  }
  BraidingState state(d, {arc});
  state.braid(0, side);
  return state.render();
}

OrientedDiagram rotate_crossing(const OrientedDiagram& d, std::size_t event_index) {
  const auto& events = d.diagram.events;
  if (event_index >= events.size() || !events[event_index].is_crossing()) {
    throw Error(ErrorCode::NoMatch, "event " + std::to_string(event_index) + " is not a crossing");
  }
  DiagramGraph g(d.diagram);
  auto dirs = g.directions(d.orientation);
  const Event e = events[event_index];
  const int L = static_cast<int>(event_index);
  const int c = e.column;
  const bool a_down = dirs[g.node(L, c - 1)] > 0;  // top left to bottom right
  const bool b_down = dirs[g.node(L, c)] > 0;      // top right to bottom left
  if (a_down && b_down) {
    throw Error(ErrorCode::Precondition, "crossing at event " + std::to_string(event_index) + " already points down");
  }
  const EventKind flipped = e.kind == EventKind::cross_pos ? EventKind::cross_neg : EventKind::cross_pos;
  std::vector<Event> replacement;
  if (!a_down && b_down) {
    replacement = {{EventKind::cup, c + 2}, {flipped, c + 1}, {EventKind::cap, c}};
  } else {
    replacement = {{EventKind::cup, c}, {flipped, c + 1}, {EventKind::cap, c + 2}};
  }
  OrientedDiagram out;
  out.diagram.events.assign(events.begin(), events.begin() + static_cast<std::ptrdiff_t>(event_index));
  out.diagram.events.insert(out.diagram.events.end(), replacement.begin(), replacement.end());
  out.diagram.events.insert(out.diagram.events.end(), events.begin() + static_cast<std::ptrdiff_t>(event_index) + 1,
                            events.end());
  out.orientation = carry_orientation(d.diagram, d.orientation, out.diagram, event_index, 1, 3);
  if (!a_down && !b_down) return rotate_crossing(out, event_index + 1);
  return out;
}

OrientedDiagram prepare_all_down(const OrientedDiagram& d) {
  OrientedDiagram cur = d;
  for (std::size_t k = 0; k < cur.diagram.events.size(); ++k) {
    if (!cur.diagram.events[k].is_crossing()) continue;
    DiagramGraph g(cur.diagram);
    auto dirs = g.directions(cur.orientation);
    const int L = static_cast<int>(k);
    const int c = cur.diagram.events[k].column;
    if (dirs[g.node(L, c - 1)] > 0 && dirs[g.node(L, c)] > 0) continue;
    cur = rotate_crossing(cur, k);
  }
  return cur;
}

MorseDiagram closure(const BraidWord& w) {
  const int n = w.strands();
  MorseDiagram d;
  for (int t = 1; t <= n; ++t) d.events.push_back({EventKind::cup, t});
  for (const auto& l : w.letters()) {
    d.events.push_back({l.exponent > 0 ? EventKind::cross_pos : EventKind::cross_neg, l.generator});
  }
  for (int t = n; t >= 1; --t) d.events.push_back({EventKind::cap, t});
  return d;
}

BraidWord read_closure(const OrientedDiagram& d) {
  const auto& ev = d.diagram.events;
  std::size_t k = 0;
  while (k < ev.size() && ev[k].kind == EventKind::cup && ev[k].column == static_cast<int>(k) + 1) ++k;
  const int n = static_cast<int>(k);
  if (n == 0 || ev.size() < 2 * k) throw Error(ErrorCode::NoMatch, "diagram is not a braid closure");
  for (int t = 0; t < n; ++t) {
    const Event& e = ev[ev.size() - 1 - static_cast<std::size_t>(t)];
    if (e.kind != EventKind::cap || e.column != t + 1) throw Error(ErrorCode::NoMatch, "diagram is not a braid closure");
  }
  std::vector<Letter> letters;
  for (std::size_t i = k; i + k < ev.size(); ++i) {
    if (!ev[i].is_crossing() || ev[i].column > n - 1) {
      throw Error(ErrorCode::NoMatch, "diagram is not a braid closure");
    }
    letters.push_back({ev[i].column, ev[i].crossing_sign()});
  }
  DiagramGraph g(d.diagram);
  auto dirs = g.directions(d.orientation);
  for (int p = 0; p < n; ++p) {
    if (dirs[g.node(n, p)] < 0) throw Error(ErrorCode::NoMatch, "braid strands must point down");
  }
  return BraidWord(n, std::move(letters));
}

BraidWord to_braid(const OrientedDiagram& d, BraidingAlgorithm algorithm) {
  OrientedDiagram prepared = algorithm == BraidingAlgorithm::kl ? prepare_all_down(d) : d;
  std::vector<UpArc> pieces;
  for (const auto& arc : find_up_arcs(prepared.diagram, prepared.orientation)) {
    for (auto& piece : split_up_arc(prepared.diagram, arc)) pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), top_first);
  BraidingState state(prepared, pieces);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const auto& labels = pieces[j].crossing_labels;
    if (algorithm == BraidingAlgorithm::kl && !labels.empty()) {
      throw Error(ErrorCode::ContractViolation, "prepared diagram still has an up-arc through a crossing");
    }
    state.braid(j, labels.empty() ? Side::over : labels.front());
  }
  return read_closure(state.render());
}

BraidWord to_braid(const MorseDiagram& d, BraidingAlgorithm algorithm) {
  return to_braid(OrientedDiagram{d, orient(d)}, algorithm);
}

BraidWord canonicalize(const BraidWord& w) {
  BraidWord cur = free_reduce(w);
  while (auto smaller = destabilize(cur)) cur = free_reduce(*smaller);
  return cur;
}

}  // namespace braidcalc
