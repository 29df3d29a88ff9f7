#include "braidcalc/lmove.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

int strand_exponent(LMoveKind kind) { return kind == LMoveKind::over ? -1 : 1; }

// Appends sigma_from^e, ..., sigma_to^e stepping by +1 or -1; nothing when
// the range runs the wrong way. `limit` is the largest legal subscript.
void append_run(std::vector<Letter>& out, int from, int to, int step, int e, int limit) {
  for (int g = from; step > 0 ? g <= to : g >= to; g += step) {
    if (g >= 1 && g <= limit) out.push_back({g, e});
  }
}

// Column shift into B_{n+1} with the straddling letter conjugated.
void append_lifted(std::vector<Letter>& out, const std::vector<Letter>& letters, int column, int e) {
  for (const auto& l : letters) {
    if (l.generator >= column) {
      out.push_back({l.generator + 1, l.exponent});
    } else if (l.generator == column - 1) {
      out.push_back({column, e});
      out.push_back(l);
      out.push_back({column, -e});
    } else {
      out.push_back(l);
    }
  }
}

// Inverse of append_lifted on a slice; nullopt when the slice is not in its
// image.
std::optional<std::vector<Letter>> unlift(const std::vector<Letter>& letters, std::size_t from,
                                          std::size_t to, int column, int e) {
  std::vector<Letter> out;
  for (std::size_t t = from; t < to;) {
    const Letter& l = letters[t];
    if (l.generator < column - 1) {
      out.push_back(l);
      ++t;
    } else if (l.generator == column) {
      if (column < 2 || t + 3 > to) return std::nullopt;
      const Letter& mid = letters[t + 1];
      const Letter& last = letters[t + 2];
      if (l.exponent != e || mid.generator != column - 1 || last != Letter{column, -e}) return std::nullopt;
      out.push_back(mid);
      t += 3;
    } else if (l.generator == column - 1) {
      return std::nullopt;
    } else {
      out.push_back({l.generator - 1, l.exponent});
      ++t;
    }
  }
  return out;
}

bool has_prefix(const std::vector<Letter>& w, const std::vector<Letter>& p, std::size_t at) {
  return at + p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace

BraidWord shift_word(const BraidWord& a, int column) {
  if (column < 1 || column > a.strands() + 1) {
    throw Error(ErrorCode::ColumnOutOfRange, "shift column " + std::to_string(column) + " outside 1.." +
                                                 std::to_string(a.strands() + 1));
  }
  std::vector<Letter> letters;
  letters.reserve(a.length());
  for (const auto& l : a.letters()) letters.push_back({l.generator >= column ? l.generator + 1 : l.generator, l.exponent});
  return BraidWord(a.strands() + 1, std::move(letters));
}

bool lmove_spec_valid(const BraidWord& a, const LMoveSpec& spec) {
  return (spec.sign == 1 || spec.sign == -1) && spec.split <= a.length() && spec.column >= 1 &&
         spec.column <= a.strands() + 1;
}

BraidWord apply_lmove(const BraidWord& a, const LMoveSpec& spec) {
  if (!lmove_spec_valid(a, spec)) {
    throw Error(ErrorCode::InvalidSpec, "invalid L-move " + format_lmove_spec(spec) + " for " + format_braid(a));
  }
  const int n = a.strands();
  const int i = spec.column;
  const int e = strand_exponent(spec.kind);
  const auto split = static_cast<std::ptrdiff_t>(spec.split);
  const std::vector<Letter> a1(a.letters().begin(), a.letters().begin() + split);
  const std::vector<Letter> a2(a.letters().begin() + split, a.letters().end());

  std::vector<Letter> out;
  append_run(out, i, n, 1, e, n);
  append_lifted(out, a1, i, e);
  append_run(out, i, n - 1, 1, e, n);
  out.push_back({n, spec.sign});
  append_run(out, n - 1, i, -1, -e, n);
  append_lifted(out, a2, i, e);
  append_run(out, n, i, -1, -e, n);
  return BraidWord(n + 1, std::move(out));
}

std::vector<LMoveSpec> lmove_grid(const BraidWord& a) {
  std::vector<LMoveSpec> grid;
  for (auto kind : {LMoveKind::over, LMoveKind::under}) {
    for (int sign : {1, -1}) {
      for (std::size_t split = 0; split <= a.length(); ++split) {
        for (int column = 1; column <= a.strands() + 1; ++column) grid.push_back({kind, sign, split, column});
      }
    }
  }
  return grid;
}

std::vector<LMoveUndo> detect_lmove(const BraidWord& a) {
  std::vector<LMoveUndo> found;
  if (a.strands() < 2) return found;
  const int n = a.strands() - 1;  // strands of the source word
  const BraidWord target = free_reduce(a);

  for (auto kind : {LMoveKind::over, LMoveKind::under}) {
    const int e = strand_exponent(kind);
    for (int sign : {1, -1}) {
      for (int i = 1; i <= n + 1; ++i) {
        std::vector<Letter> b1, b1_inv, pattern;
        append_run(b1, i, n, 1, e, n);
        append_run(b1_inv, n, i, -1, -e, n);
        append_run(pattern, i, n - 1, 1, e, n);
        pattern.push_back({n, sign});
        append_run(pattern, n - 1, i, -1, -e, n);

        std::vector<std::vector<Letter>> middles;
        const auto& raw = a.letters();
        if (raw.size() >= b1.size() + b1_inv.size() && has_prefix(raw, b1, 0) &&
            has_prefix(raw, b1_inv, raw.size() - b1_inv.size())) {
          middles.emplace_back(raw.begin() + static_cast<std::ptrdiff_t>(b1.size()),
                               raw.end() - static_cast<std::ptrdiff_t>(b1_inv.size()));
        }
        {
          std::vector<Letter> conj;
          for (auto it = b1.rbegin(); it != b1.rend(); ++it) conj.push_back(it->inverse());
          conj.insert(conj.end(), raw.begin(), raw.end());
          for (auto it = b1_inv.rbegin(); it != b1_inv.rend(); ++it) conj.push_back(it->inverse());
          middles.push_back(free_reduce(BraidWord(a.strands(), std::move(conj))).letters());
        }

        std::vector<LMoveUndo> here;
        for (const auto& mid : middles) {
          for (std::size_t p = 0; p + pattern.size() <= mid.size(); ++p) {
            if (!has_prefix(mid, pattern, p)) continue;
            auto head = unlift(mid, 0, p, i, e);
            if (!head) continue;
            auto tail = unlift(mid, p + pattern.size(), mid.size(), i, e);
            if (!tail) continue;
            LMoveSpec spec{kind, sign, head->size(), i};
            std::vector<Letter> letters = *head;
            letters.insert(letters.end(), tail->begin(), tail->end());
            BraidWord source(n, std::move(letters));
            if (free_reduce(apply_lmove(source, spec)) != target) continue;
            bool duplicate = std::any_of(here.begin(), here.end(), [&](const LMoveUndo& u) {
              return u.spec == spec && u.source == source;
            });
            if (!duplicate) here.push_back({spec, std::move(source)});
          }
        }
        std::sort(here.begin(), here.end(), [](const LMoveUndo& x, const LMoveUndo& y) {
          if (x.spec.split != y.spec.split) return x.spec.split < y.spec.split;
          return x.source < y.source;
        });
        found.insert(found.end(), here.begin(), here.end());
      }
    }
  }
  return found;
}

std::string format_lmove_spec(const LMoveSpec& spec) {
  std::ostringstream out;
  out << "lmove " << (spec.kind == LMoveKind::over ? "over" : "under") << ' ' << (spec.sign > 0 ? '+' : '-')
      << " split=" << spec.split << " col=" << spec.column;
  return out.str();
}

LMoveSpec parse_lmove_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (!tokens.empty() && tokens.front() == "lmove") tokens.erase(tokens.begin());
  if (tokens.size() != 4) throw ParseError(0, "expected '<over|under> <+|-> split=<k> col=<i>'");

  LMoveSpec spec;
  if (tokens[0] == "over") spec.kind = LMoveKind::over;
  else if (tokens[0] == "under") spec.kind = LMoveKind::under;
  else throw ParseError(0, "L-move kind must be 'over' or 'under', got '" + tokens[0] + "'");

  if (tokens[1] == "+") spec.sign = 1;
  else if (tokens[1] == "-") spec.sign = -1;
  else throw ParseError(0, "L-move sign must be '+' or '-', got '" + tokens[1] + "'");

  auto number_after = [](const std::string& token, std::string_view key) -> long {
    if (token.rfind(key, 0) != 0 || token.size() == key.size()) {
      throw ParseError(0, "expected '" + std::string(key) + "<number>', got '" + token + "'");
    }
    long value = -1;
    const char* first = token.data() + key.size();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0) throw ParseError(0, "bad number in '" + token + "'");
    return value;
  };
  spec.split = static_cast<std::size_t>(number_after(tokens[2], "split="));
  spec.column = static_cast<int>(number_after(tokens[3], "col="));
  return spec;
}

}  // namespace braidcalc
