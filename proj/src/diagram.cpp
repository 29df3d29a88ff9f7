#include "braidcalc/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

struct Violation {
  ErrorCode code;
  std::size_t event;
  std::string message;
};

std::optional<Violation> find_violation(const MorseDiagram& d) {
  int w = 0;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    const int c = e.column;
    auto where = "event " + std::to_string(k) + ": ";
    switch (e.kind) {
      case EventKind::cup:
        if (c < 1 || c > w + 1) {
          return Violation{ErrorCode::ColumnOutOfRange, k,
                           where + "cup column " + std::to_string(c) + " outside 1.." + std::to_string(w + 1)};
        }
        w += 2;
        break;
      case EventKind::cap:
        if (w < 2) return Violation{ErrorCode::NegativeWidth, k, where + "cap at width " + std::to_string(w)};
        if (c < 1 || c > w - 1) {
          return Violation{ErrorCode::ColumnOutOfRange, k,
                           where + "cap column " + std::to_string(c) + " outside 1.." + std::to_string(w - 1)};
        }
        w -= 2;
        break;
      case EventKind::cross_pos:
      case EventKind::cross_neg:
        if (c < 1 || c > w - 1) {
          return Violation{ErrorCode::ColumnOutOfRange, k,
                           where + "crossing column " + std::to_string(c) + " outside 1.." + std::to_string(w - 1)};
        }
        break;
    }
  }
  if (w != 0) {
    return Violation{ErrorCode::NonzeroFinalWidth, d.events.empty() ? 0 : d.events.size() - 1,
                     "diagram ends at width " + std::to_string(w)};
  }
  return std::nullopt;
}

// Minimal union-find for the state sum.
struct Partition {
  std::vector<int> parent;
  explicit Partition(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int count = 0;
    for (int x = 0; x < static_cast<int>(parent.size()); ++x) count += find(x) == x ? 1 : 0;
    return count;
  }
};

LaurentPoly delta() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

}  // namespace

std::size_t MorseDiagram::crossing_count() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const Event& e) { return e.is_crossing(); }));
}

void validate(const MorseDiagram& d) {
  if (auto v = find_violation(d)) throw Error(v->code, v->message);
}

std::vector<int> widths(const MorseDiagram& d) {
  validate(d);
  std::vector<int> out{0};
  for (const auto& e : d.events) {
    int delta_w = e.kind == EventKind::cup ? 2 : e.kind == EventKind::cap ? -2 : 0;
    out.push_back(out.back() + delta_w);
  }
  return out;
}

DiagramGraph::DiagramGraph(const MorseDiagram& d) {
  const auto w = widths(d);
  offset_.assign(w.size() + 1, 0);
  for (std::size_t L = 0; L < w.size(); ++L) offset_[L + 1] = offset_[L] + w[L];
  level_.resize(static_cast<std::size_t>(offset_.back()));
  for (std::size_t L = 0; L < w.size(); ++L) {
    for (int n = offset_[L]; n < offset_[L + 1]; ++n) level_[n] = static_cast<int>(L);
  }
  up_.assign(level_.size(), -1);
  down_.assign(level_.size(), -1);
  auto link = [&](int above, int below) {
    down_[above] = below;
    up_[below] = above;
  };

  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const int L = static_cast<int>(k);
    const int idx = d.events[k].column - 1;
    switch (d.events[k].kind) {
      case EventKind::cup:
        for (int p = 0; p < width(L); ++p) link(node(L, p), node(L + 1, p < idx ? p : p + 2));
        up_[node(L + 1, idx)] = node(L + 1, idx + 1);
        up_[node(L + 1, idx + 1)] = node(L + 1, idx);
        break;
      case EventKind::cap:
        for (int p = 0; p < width(L); ++p) {
          if (p == idx || p == idx + 1) continue;
          link(node(L, p), node(L + 1, p < idx ? p : p - 2));
        }
        down_[node(L, idx)] = node(L, idx + 1);
        down_[node(L, idx + 1)] = node(L, idx);
        break;
      case EventKind::cross_pos:
      case EventKind::cross_neg:
        for (int p = 0; p < width(L); ++p) {
          int q = p == idx ? idx + 1 : p == idx + 1 ? idx : p;
          link(node(L, p), node(L + 1, q));
        }
        break;
    }
  }

  component_.assign(level_.size(), -1);
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    if (d.events[k].kind != EventKind::cup) continue;
    const int start = node(static_cast<int>(k) + 1, d.events[k].column - 1);
    if (component_[start] >= 0) continue;
    const int id = static_cast<int>(first_node_.size());
    first_node_.push_back(start);
    int cur = start;
    int dir = 1;
    do {
      component_[cur] = id;
      int next = dir > 0 ? down_[cur] : up_[cur];
      if (level_[next] == level_[cur]) dir = -dir;
      cur = next;
    } while (cur != start);
  }
}

std::vector<int> DiagramGraph::directions(const Orientation& o) const {
  if (!o.flags.empty() && static_cast<int>(o.flags.size()) != component_count()) {
    throw Error(ErrorCode::InvalidSpec, "orientation lists " + std::to_string(o.flags.size()) +
                                            " components, diagram has " + std::to_string(component_count()));
  }
  std::vector<int> dirs(level_.size(), 0);
  for (int c = 0; c < component_count(); ++c) {
    const int start = first_node_[c];
    int dir = o.flags.empty() ? 1 : o.flags[c];
    int cur = start;
    do {
      dirs[cur] = dir;
      int next = dir > 0 ? down_[cur] : up_[cur];
      if (level_[next] == level_[cur]) dir = -dir;
      cur = next;
    } while (cur != start);
  }
  return dirs;
}

Orientation orient(const MorseDiagram& d, const std::vector<bool>& flips) {
  DiagramGraph g(d);
  if (!flips.empty() && static_cast<int>(flips.size()) != g.component_count()) {
    throw Error(ErrorCode::InvalidSpec, "expected " + std::to_string(g.component_count()) + " orientation flags");
  }
  Orientation o;
  o.flags.assign(static_cast<std::size_t>(g.component_count()), 1);
  for (std::size_t c = 0; c < flips.size(); ++c) o.flags[c] = flips[c] ? -1 : 1;
  return o;
}

int components(const MorseDiagram& d) { return DiagramGraph(d).component_count(); }

int writhe(const MorseDiagram& d, const Orientation& o) {
  DiagramGraph g(d);
  auto dirs = g.directions(o);
  int total = 0;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    if (!e.is_crossing()) continue;
    const int L = static_cast<int>(k);
    int a = dirs[g.node(L, e.column - 1)];
    int b = dirs[g.node(L, e.column)];
    total += e.crossing_sign() * (a == b ? 1 : -1);
  }
  return total;
}

Orientation orientation_from_samples(const MorseDiagram& d, const std::vector<DirectionSample>& samples) {
  DiagramGraph g(d);
  auto defaults = g.directions(Orientation{});
  Orientation o;
  o.flags.assign(static_cast<std::size_t>(g.component_count()), 0);
  for (const auto& s : samples) {
    if (s.level < 0 || s.level >= g.level_count() || s.position < 0 || s.position >= g.width(s.level)) {
      throw Error(ErrorCode::ContractViolation, "direction sample outside the diagram");
    }
    const int n = g.node(s.level, s.position);
    const int flag = s.direction == defaults[n] ? 1 : -1;
    int& slot = o.flags[g.component_of(n)];
    if (slot == 0) {
      slot = flag;
    } else if (slot != flag) {
      throw Error(ErrorCode::ContractViolation, "inconsistent strand directions at level " +
                                                    std::to_string(s.level) + ", position " +
                                                    std::to_string(s.position));
    }
  }
  for (auto& f : o.flags) f = f == 0 ? 1 : f;
  return o;
}

Orientation carry_orientation(const MorseDiagram& before, const Orientation& o, const MorseDiagram& after,
                              std::size_t start, std::size_t removed, std::size_t inserted) {
  DiagramGraph g(before);
  auto dirs = g.directions(o);
  const int top = static_cast<int>(start);
  const int old_bottom = static_cast<int>(start + removed);
  const int new_bottom = static_cast<int>(start + inserted);
  std::vector<DirectionSample> samples;
  for (int L = 0; L < g.level_count(); ++L) {
    for (int p = 0; p < g.width(L); ++p) {
      if (L <= top) samples.push_back({L, p, dirs[g.node(L, p)]});
      if (L >= old_bottom) samples.push_back({L - old_bottom + new_bottom, p, dirs[g.node(L, p)]});
    }
  }
  return orientation_from_samples(after, samples);
}

LaurentPoly kauffman_bracket(const MorseDiagram& d, int crossing_cap) {
  DiagramGraph g(d);
  if (g.node_count() == 0) throw Error(ErrorCode::Precondition, "the empty diagram has no bracket");
  std::vector<std::size_t> crossings;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    if (d.events[k].is_crossing()) crossings.push_back(k);
  }
  if (static_cast<int>(crossings.size()) > crossing_cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(crossings.size()) + " crossings exceed the state-sum cap of " +
                                            std::to_string(crossing_cap));
  }

  Partition base(g.node_count());
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const int L = static_cast<int>(k);
    const Event& e = d.events[k];
    const int idx = e.column - 1;
    for (int p = 0; p < g.width(L); ++p) {
      const int n = g.node(L, p);
      const int below = g.down(n);
      if (e.is_crossing() && (p == idx || p == idx + 1)) continue;
      base.join(n, below);
    }
    if (e.kind == EventKind::cup) base.join(g.node(L + 1, idx), g.node(L + 1, idx + 1));
  }

  // Loop counts per state are collected first; the polynomial is assembled
  // from the (a - b, loops) histogram.
  std::map<std::pair<int, int>, LaurentPoly::Coefficient> histogram;
  const std::size_t states = std::size_t{1} << crossings.size();
  for (std::size_t s = 0; s < states; ++s) {
    Partition part = base;
    int balance = 0;
    for (std::size_t j = 0; j < crossings.size(); ++j) {
      const Event& e = d.events[crossings[j]];
      const int L = static_cast<int>(crossings[j]);
      const int tl = g.node(L, e.column - 1), tr = g.node(L, e.column);
      const int bl = g.node(L + 1, e.column - 1), br = g.node(L + 1, e.column);
      const bool a_smoothing = ((s >> j) & 1) == 0;
      balance += a_smoothing ? 1 : -1;
      const bool vertical = a_smoothing == (e.kind == EventKind::cross_pos);
      if (vertical) {
        part.join(tl, bl);
        part.join(tr, br);
      } else {
        part.join(tl, tr);
        part.join(bl, br);
      }
    }
    ++histogram[{balance, part.classes()}];
  }

  LaurentPoly result;
  std::map<int, LaurentPoly> delta_powers;
  for (const auto& [key, count] : histogram) {
    const auto [balance, loops] = key;
    auto it = delta_powers.find(loops);
    if (it == delta_powers.end()) it = delta_powers.emplace(loops, delta().pow(loops - 1)).first;
    result.add_scaled(it->second, count, balance);
  }
  return result;
}

namespace {

// Boundary state for the transfer computation: partner[p] is the position
// joined to p through the part of the diagram already processed.
struct Boundary {
  std::vector<signed char> partner;
  bool closed = false;  // a loop has been completed; later loops cost delta
  friend auto operator<=>(const Boundary&, const Boundary&) = default;
};

Boundary with_cup(const Boundary& b, int idx) {
  Boundary out;
  out.closed = b.closed;
  const int w = static_cast<int>(b.partner.size());
  out.partner.resize(static_cast<std::size_t>(w + 2));
  auto shift = [&](int p) { return p < idx ? p : p + 2; };
  for (int p = 0; p < w; ++p) out.partner[shift(p)] = static_cast<signed char>(shift(b.partner[p]));
  out.partner[idx] = static_cast<signed char>(idx + 1);
  out.partner[idx + 1] = static_cast<signed char>(idx);
  return out;
}

// Returns the new boundary and whether a loop was closed.
std::pair<Boundary, bool> with_cap(const Boundary& b, int idx) {
  std::vector<signed char> partner = b.partner;
  bool loop = partner[idx] == idx + 1;
  if (!loop) {
    int x = partner[idx], y = partner[idx + 1];
    partner[x] = static_cast<signed char>(y);
    partner[y] = static_cast<signed char>(x);
  }
  Boundary out;
  out.closed = b.closed || loop;
  const int w = static_cast<int>(partner.size());
  auto shift = [&](int p) { return p < idx ? p : p - 2; };
  for (int p = 0; p < w; ++p) {
    if (p == idx || p == idx + 1) continue;
    out.partner.push_back(static_cast<signed char>(shift(partner[p])));
  }
  return {out, loop};
}

}  // namespace

LaurentPoly kauffman_bracket_transfer(const MorseDiagram& d) {
  validate(d);
  if (d.events.empty()) throw Error(ErrorCode::Precondition, "the empty diagram has no bracket");
  const LaurentPoly dl = delta();
  std::map<Boundary, LaurentPoly> states{{Boundary{}, LaurentPoly(1)}};

  auto add_capped = [&](std::map<Boundary, LaurentPoly>& next, const Boundary& b, const LaurentPoly& value,
                        int idx, int exponent) {
    auto [nb, loop] = with_cap(b, idx);
    LaurentPoly v = value;
    if (loop && b.closed) v = v * dl;
    next[nb].add_scaled(v, 1, exponent);
  };

  for (const auto& e : d.events) {
    std::map<Boundary, LaurentPoly> next;
    const int idx = e.column - 1;
    for (const auto& [b, value] : states) {
      switch (e.kind) {
        case EventKind::cup:
          next[with_cup(b, idx)] += value;
          break;
        case EventKind::cap:
          add_capped(next, b, value, idx, 0);
          break;
        case EventKind::cross_pos:
        case EventKind::cross_neg: {
          const int vertical_exp = e.kind == EventKind::cross_pos ? 1 : -1;
          next[b].add_scaled(value, 1, vertical_exp);
          auto [nb, loop] = with_cap(b, idx);
          LaurentPoly v = value;
          if (loop && b.closed) v = v * dl;
          next[with_cup(nb, idx)].add_scaled(v, 1, -vertical_exp);
          break;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }

  LaurentPoly result;
  for (const auto& [b, value] : states) result += value;
  return result;
}

LaurentPoly f_polynomial(const LaurentPoly& bracket, int writhe) {
  return LaurentPoly::monomial(writhe % 2 == 0 ? 1 : -1, -3 * writhe) * bracket;
}

LaurentPoly jones_from_f(const LaurentPoly& f) {
  // A^e = q^{-e/4} = (q^{1/2})^{-e/2}
  return f.divide_exponents(2).substitute_power(-1);
}

LaurentPoly jones(const MorseDiagram& d, const Orientation& o) {
  return jones_from_f(f_polynomial(kauffman_bracket_transfer(d), writhe(d, o)));
}

std::string format_diagram(const MorseDiagram& d, const std::optional<Orientation>& o) {
  std::string out;
  if (o) {
    out += "orient:";
    for (std::size_t c = 0; c < o->flags.size(); ++c) {
      out += o->flags[c] < 0 ? " -" : " +";
      out += std::to_string(c + 1);
    }
    out += '\n';
  }
  for (const auto& e : d.events) {
    switch (e.kind) {
      case EventKind::cup: out += "cup "; break;
      case EventKind::cap: out += "cap "; break;
      case EventKind::cross_pos: out += "x+ "; break;
      case EventKind::cross_neg: out += "x- "; break;
    }
    out += std::to_string(e.column) + '\n';
  }
  return out;
}

ParsedDiagram parse_diagram(std::string_view text) {
  ParsedDiagram parsed;
  std::vector<int> event_line;
  std::vector<std::pair<int, int>> orient_tokens;  // (component, flag)
  int orient_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;

    if (head == "orient:") {
      if (orient_line != 0) throw ParseError(line_no, "duplicate orient header");
      if (!parsed.diagram.events.empty()) throw ParseError(line_no, "orient header must precede the events");
      orient_line = line_no;
      for (std::string tok; fields >> tok;) {
        int value = 0;
        const char* first = tok.data() + (tok[0] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0 || (tok[0] != '+' && tok[0] != '-')) {
          throw ParseError(line_no, "orient entries look like +1 or -2, got '" + tok + "'");
        }
        orient_tokens.emplace_back(std::abs(value), value > 0 ? 1 : -1);
      }
      continue;
    }

    Event e;
    if (head == "cup") e.kind = EventKind::cup;
    else if (head == "cap") e.kind = EventKind::cap;
    else if (head == "x+") e.kind = EventKind::cross_pos;
    else if (head == "x-") e.kind = EventKind::cross_neg;
    else throw ParseError(line_no, "unknown event '" + head + "'");

    std::string col, extra;
    if (!(fields >> col)) throw ParseError(line_no, "missing column");
    if (fields >> extra) throw ParseError(line_no, "unexpected '" + extra + "'");
    auto [ptr, ec] = std::from_chars(col.data(), col.data() + col.size(), e.column);
    if (ec != std::errc() || ptr != col.data() + col.size()) throw ParseError(line_no, "bad column '" + col + "'");
    parsed.diagram.events.push_back(e);
    event_line.push_back(line_no);
  }

  if (auto v = find_violation(parsed.diagram)) {
    int line = event_line.empty() ? line_no : event_line[v->event];
    throw ParseError(line, v->message);
  }

  if (orient_line != 0) {
    const int count = components(parsed.diagram);
    Orientation o;
    o.flags.assign(static_cast<std::size_t>(count), 0);
    for (const auto& [component, flag] : orient_tokens) {
      if (component > count) {
        throw ParseError(orient_line, "component " + std::to_string(component) + " does not exist");
      }
      if (o.flags[component - 1] != 0) {
        throw ParseError(orient_line, "component " + std::to_string(component) + " listed twice");
      }
      o.flags[component - 1] = flag;
    }
    if (std::count(o.flags.begin(), o.flags.end(), 0) != 0) {
      throw ParseError(orient_line, "orient header must list all " + std::to_string(count) + " components");
    }
    parsed.orientation = std::move(o);
  }
  return parsed;
}

}  // namespace braidcalc
