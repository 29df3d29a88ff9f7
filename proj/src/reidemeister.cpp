#include "braidcalc/reidemeister.hpp"

#include <optional>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

EventKind cross(int sign) { return sign > 0 ? EventKind::cross_pos : EventKind::cross_neg; }

Rewrite splice(const MorseDiagram& d, std::size_t start, std::size_t removed, std::vector<Event> replacement) {
  Rewrite r;
  r.start = start;
  r.removed = removed;
  r.inserted = replacement.size();
  const auto& ev = d.events;
  r.diagram.events.assign(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(start));
  r.diagram.events.insert(r.diagram.events.end(), replacement.begin(), replacement.end());
  r.diagram.events.insert(r.diagram.events.end(), ev.begin() + static_cast<std::ptrdiff_t>(start + removed), ev.end());
  return r;
}

std::optional<Rewrite> remove_r1(const MorseDiagram& d, std::size_t i) {
  const auto& ev = d.events;
  if (i + 3 > ev.size() || ev[i].kind != EventKind::cup || !ev[i + 1].is_crossing() || ev[i + 2].kind != EventKind::cap) {
    return std::nullopt;
  }
  const int c = ev[i].column;
  const bool left = ev[i + 1].column == c + 1 && ev[i + 2].column == c;
  const bool right = c >= 2 && ev[i + 1].column == c - 1 && ev[i + 2].column == c;
  if (!left && !right) return std::nullopt;
  return splice(d, i, 3, {});
}

std::optional<Rewrite> remove_r2(const MorseDiagram& d, std::size_t i) {
  const auto& ev = d.events;
  if (i + 2 <= ev.size() && ev[i].is_crossing() && ev[i + 1].is_crossing() && ev[i].column == ev[i + 1].column &&
      ev[i].kind != ev[i + 1].kind) {
    return splice(d, i, 2, {});
  }
  if (i + 3 > ev.size()) return std::nullopt;
  const Event& x = ev[i];
  const Event& y = ev[i + 1];
  const Event& z = ev[i + 2];
  if (x.is_crossing() && y.is_crossing() && x.kind == y.kind && z.kind == EventKind::cap) {
    if (y.column == x.column + 1 && z.column == x.column) return splice(d, i, 3, {{EventKind::cap, x.column + 1}});
    if (y.column == x.column - 1 && z.column == x.column) return splice(d, i, 3, {{EventKind::cap, y.column}});
  }
  if (x.kind == EventKind::cup && y.is_crossing() && z.is_crossing() && y.kind == z.kind) {
    if (y.column == x.column + 1 && z.column == x.column) return splice(d, i, 3, {{EventKind::cup, x.column + 1}});
    if (x.column >= 2 && y.column == x.column - 1 && z.column == x.column) {
      return splice(d, i, 3, {{EventKind::cup, x.column - 1}});
    }
  }
  return std::nullopt;
}

bool r3_signs_ok(const Event& a, const Event& b, const Event& c) {
  return !(a.kind == c.kind && a.kind != b.kind);
}

std::optional<Rewrite> try_apply(const MorseDiagram& d, const std::vector<int>& w, const RSite& s) {
  const auto& ev = d.events;
  const std::size_t m = ev.size();
  const int c = s.column;
  const int sg = s.sign;
  if (s.sign != 1 && s.sign != -1) return std::nullopt;

  switch (s.variant) {
    case RVariant::kink_left:
    case RVariant::kink_right:
      if (s.move != RMove::r1 || s.index > m || c < 1 || c > w[s.index]) return std::nullopt;
      if (s.variant == RVariant::kink_left) {
        return splice(d, s.index, 0, {{EventKind::cup, c}, {cross(sg), c + 1}, {EventKind::cap, c}});
      }
      return splice(d, s.index, 0, {{EventKind::cup, c + 1}, {cross(sg), c}, {EventKind::cap, c + 1}});
    case RVariant::vertical:
      if (s.move != RMove::r2 || s.index > m || c < 1 || c > w[s.index] - 1) return std::nullopt;
      return splice(d, s.index, 0, {{cross(sg), c}, {cross(-sg), c}});
    case RVariant::cap_left:
    case RVariant::cap_right:
    case RVariant::cup_left:
    case RVariant::cup_right: {
      if (s.move != RMove::r2 || s.index >= m) return std::nullopt;
      const Event& e = ev[s.index];
      const int col = e.column;
      const int above = w[s.index];
      if (s.variant == RVariant::cap_left && e.kind == EventKind::cap && col >= 2) {
        return splice(d, s.index, 1, {{cross(sg), col - 1}, {cross(sg), col}, {EventKind::cap, col - 1}});
      }
      if (s.variant == RVariant::cap_right && e.kind == EventKind::cap && above >= col + 2) {
        return splice(d, s.index, 1, {{cross(sg), col + 1}, {cross(sg), col}, {EventKind::cap, col + 1}});
      }
      if (s.variant == RVariant::cup_left && e.kind == EventKind::cup && col >= 2) {
        return splice(d, s.index, 1, {{EventKind::cup, col - 1}, {cross(sg), col}, {cross(sg), col - 1}});
      }
      if (s.variant == RVariant::cup_right && e.kind == EventKind::cup && above >= col) {
        return splice(d, s.index, 1, {{EventKind::cup, col + 1}, {cross(sg), col}, {cross(sg), col + 1}});
      }
      return std::nullopt;
    }
    case RVariant::forward:
    case RVariant::backward: {
      if (s.move != RMove::r3 || s.index + 3 > m) return std::nullopt;
      const Event& x = ev[s.index];
      const Event& y = ev[s.index + 1];
      const Event& z = ev[s.index + 2];
      if (!x.is_crossing() || !y.is_crossing() || !z.is_crossing() || !r3_signs_ok(x, y, z)) return std::nullopt;
      const int k = x.column;
      const int step = s.variant == RVariant::forward ? 1 : -1;
      if (y.column != k + step || z.column != k) return std::nullopt;
      return splice(d, s.index, 3, {{z.kind, k + step}, {y.kind, k}, {x.kind, k + step}});
    }
    case RVariant::remove:
      if (s.index >= m) return std::nullopt;
      if (s.move == RMove::r1) return remove_r1(d, s.index);
      if (s.move == RMove::r2) return remove_r2(d, s.index);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Rewrite apply_reidemeister(const MorseDiagram& d, const RSite& site) {
  const auto w = widths(d);
  if (site.index > d.events.size()) {
    throw Error(ErrorCode::PositionOutOfRange, "site index " + std::to_string(site.index) + " past the last gap");
  }
  auto r = try_apply(d, w, site);
  if (!r) throw Error(ErrorCode::NoMatch, "Reidemeister template does not match at index " + std::to_string(site.index));
  return *r;
}

MorseDiagram apply_r1(const MorseDiagram& d, const RSite& site) {
  if (site.move != RMove::r1) throw Error(ErrorCode::InvalidSpec, "not an R1 site");
  return apply_reidemeister(d, site).diagram;
}

MorseDiagram apply_r2(const MorseDiagram& d, const RSite& site) {
  if (site.move != RMove::r2) throw Error(ErrorCode::InvalidSpec, "not an R2 site");
  return apply_reidemeister(d, site).diagram;
}

MorseDiagram apply_r3(const MorseDiagram& d, const RSite& site) {
  if (site.move != RMove::r3) throw Error(ErrorCode::InvalidSpec, "not an R3 site");
  return apply_reidemeister(d, site).diagram;
}

std::vector<RSite> reidemeister_sites(const MorseDiagram& d) {
  const auto w = widths(d);
  const std::size_t m = d.events.size();
  std::vector<RSite> sites;
  auto consider = [&](const RSite& s) {
    if (try_apply(d, w, s)) sites.push_back(s);
  };
  auto per_column = [&](RMove move, RVariant v, std::size_t index, int max_column) {
    for (int c = 1; c <= max_column; ++c) {
      for (int sign : {1, -1}) consider({move, v, index, c, sign});
    }
  };

  for (std::size_t i = 0; i <= m; ++i) {
    per_column(RMove::r1, RVariant::kink_left, i, w[i]);
    per_column(RMove::r1, RVariant::kink_right, i, w[i]);
    if (i < m) consider({RMove::r1, RVariant::remove, i, 1, 1});
  }
  for (std::size_t i = 0; i <= m; ++i) {
    per_column(RMove::r2, RVariant::vertical, i, w[i] - 1);
    if (i == m) continue;
    for (auto v : {RVariant::cap_left, RVariant::cap_right, RVariant::cup_left, RVariant::cup_right}) {
      for (int sign : {1, -1}) consider({RMove::r2, v, i, 1, sign});
    }
    consider({RMove::r2, RVariant::remove, i, 1, 1});
  }
  for (std::size_t i = 0; i < m; ++i) {
    consider({RMove::r3, RVariant::forward, i, 1, 1});
    consider({RMove::r3, RVariant::backward, i, 1, 1});
  }
  return sites;
}

}  // namespace braidcalc
