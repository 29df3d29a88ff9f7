#include "braidcalc/temperley_lieb.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include "braidcalc/diagram.hpp"
#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

LaurentPoly delta() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

}  // namespace

TLElement TLElement::identity(int n) {
  TLElement t;
  t.n_ = n;
  Matching m(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    m[j] = static_cast<signed char>(n + j);
    m[n + j] = static_cast<signed char>(j);
  }
  t.terms_.emplace(std::move(m), LaurentPoly(1));
  return t;
}

void TLElement::multiply_generator(int i, int exponent) {
  if (i < 1 || i >= n_) throw Error(ErrorCode::IndexOutOfRange, "generator outside TL_" + std::to_string(n_));
  const int p = n_ + i - 1;
  const int q = n_ + i;
  const LaurentPoly dl = delta();
  std::map<Matching, LaurentPoly> next;
  for (const auto& [m, coeff] : terms_) {
    next[m].add_scaled(coeff, 1, exponent);

    Matching joined = m;
    LaurentPoly c = coeff;
    if (joined[p] == q) {
      c = c * dl;
    } else {
      int x = joined[p], y = joined[q];
      joined[x] = static_cast<signed char>(y);
      joined[y] = static_cast<signed char>(x);
      joined[p] = static_cast<signed char>(q);
      joined[q] = static_cast<signed char>(p);
    }
    next[joined].add_scaled(c, 1, -exponent);
  }
  std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
  terms_ = std::move(next);
}

LaurentPoly TLElement::markov_trace() const {
  const LaurentPoly dl = delta();
  LaurentPoly total;
  for (const auto& [m, coeff] : terms_) {
    // Walk the closed curves: inside the diagram via the matching, outside
    // by the closure arc top j <-> bottom n+j.
    std::vector<bool> seen(m.size(), false);
    int loops = 0;
    for (std::size_t start = 0; start < m.size(); ++start) {
      if (seen[start]) continue;
      ++loops;
      int cur = static_cast<int>(start);
      while (!seen[cur]) {
        seen[cur] = true;
        int other = m[cur];
        seen[other] = true;
        cur = other < n_ ? other + n_ : other - n_;
      }
    }
    total += coeff * dl.pow(loops - 1);
  }
  return total;
}

LaurentPoly bracket_via_tl(const BraidWord& w, int strand_cap) {
  if (w.strands() > strand_cap) {
    throw Error(ErrorCode::CapExceeded, "B" + std::to_string(w.strands()) + " exceeds the Temperley-Lieb cap of " +
                                            std::to_string(strand_cap) + " strands");
  }
  TLElement t = TLElement::identity(w.strands());
  for (const auto& l : w.letters()) t.multiply_generator(l.generator, l.exponent);
  return t.markov_trace();
}

namespace {

// Basis diagrams for the trace below, one byte per point: top j is point j
// and the open bottom end of position j is point 2n-1-j. Once a position in
// the middle is closed off the remaining matching can cross in this
// numbering, so it is stored whole rather than as a bracket word.
constexpr int kPackedCap = 32;
constexpr std::uint8_t kGone = 0xff;
// Narrow braids get half-size keys; the trace is memory bound.
template <std::size_t Bytes>
using Points = std::array<std::uint8_t, Bytes>;

struct PointsHash {
  template <std::size_t Bytes>
  std::size_t operator()(const Points<Bytes>& m) const {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < m.size(); i += 8) {
      std::uint64_t v;
      std::memcpy(&v, m.data() + i, 8);
      h = (h ^ v) * 0x9e3779b97f4a7c15ULL;
      h ^= h >> 29;
    }
    return h;
  }
};

using Coefficient = LaurentPoly::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "Laurent coefficient overflow");
  return out;
}

// Basis diagrams with polynomial values in x = A^2. Every value is a window
// of one shared arena, so a step costs a few flat passes instead of one
// allocation per diagram.
template <std::size_t Bytes>
struct Layer {
  std::vector<Points<Bytes>> keys;
  std::vector<int> low;
  std::vector<int> len;
  std::vector<std::size_t> offset;
  std::vector<Coefficient> arena;
};

// value(source) * x^shift, times delta = -x - 1/x when `loop`, lands on target.
struct Contribution {
  std::uint32_t source;
  std::uint32_t target;
  int shift;
  bool loop;
};

template <std::size_t Bytes>
class LayerBuilder {
 public:
  void clear(std::size_t expected) {
    index_.clear();
    index_.reserve(expected);
    keys_.clear();
    contributions_.clear();
  }

  void add(std::uint32_t source, const Points<Bytes>& key, int shift, bool loop) {
    const auto [it, fresh] = index_.try_emplace(key, static_cast<std::uint32_t>(keys_.size()));
    if (fresh) keys_.push_back(key);
    contributions_.push_back({source, it->second, shift, loop});
  }

  // Sizes every target window, accumulates, then drops zero coefficients
  // from the ends and zero diagrams altogether.
  Layer<Bytes> build(const Layer<Bytes>& from) const {
    const std::size_t m = keys_.size();
    std::vector<int> lo(m, std::numeric_limits<int>::max()), hi(m, std::numeric_limits<int>::min());
    for (const auto& c : contributions_) {
      const int first = from.low[c.source] + c.shift - (c.loop ? 1 : 0);
      const int last = from.low[c.source] + from.len[c.source] - 1 + c.shift + (c.loop ? 1 : 0);
      lo[c.target] = std::min(lo[c.target], first);
      hi[c.target] = std::max(hi[c.target], last);
    }
    std::vector<std::size_t> offset(m);
    std::size_t total = 0;
    for (std::size_t t = 0; t < m; ++t) {
      offset[t] = total;
      total += static_cast<std::size_t>(hi[t] - lo[t] + 1);
    }
    std::vector<Coefficient> sums(total, 0);
    for (const auto& c : contributions_) {
      const Coefficient* src = from.arena.data() + from.offset[c.source];
      Coefficient* dst = sums.data() + offset[c.target] + (from.low[c.source] + c.shift - lo[c.target]);
      const int n = from.len[c.source];
      if (c.loop) {
        for (int k = 0; k < n; ++k) {
          dst[k - 1] = checked_add(dst[k - 1], -src[k]);
          dst[k + 1] = checked_add(dst[k + 1], -src[k]);
        }
      } else {
        for (int k = 0; k < n; ++k) dst[k] = checked_add(dst[k], src[k]);
      }
    }

    Layer<Bytes> out;
    out.arena.reserve(total);
    for (std::size_t t = 0; t < m; ++t) {
      const Coefficient* d = sums.data() + offset[t];
      int a = 0, b = hi[t] - lo[t];
      while (a <= b && d[a] == 0) ++a;
      while (b >= a && d[b] == 0) --b;
      if (a > b) continue;
      out.keys.push_back(keys_[t]);
      out.low.push_back(lo[t] + a);
      out.len.push_back(b - a + 1);
      out.offset.push_back(out.arena.size());
      out.arena.insert(out.arena.end(), d + a, d + b + 1);
    }
    return out;
  }

 private:
  absl::flat_hash_map<Points<Bytes>, std::uint32_t, PointsHash> index_;
  std::vector<Points<Bytes>> keys_;
  std::vector<Contribution> contributions_;
};

// Rough cost of tracing w from letter `start` on: positions touched and not
// yet used up make the matchings multiply.
double rotation_cost(const std::vector<Letter>& letters, int n, std::size_t start) {
  std::vector<int> remaining(static_cast<std::size_t>(n), 0);
  for (const auto& l : letters) {
    ++remaining[l.generator - 1];
    ++remaining[l.generator];
  }
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  int active = 0;
  double cost = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter& l = letters[(start + k) % letters.size()];
    for (int p : {l.generator - 1, l.generator}) {
      if (!touched[p]) {
        touched[p] = true;
        ++active;
      }
    }
    cost += std::pow(4.0, active);
    for (int p : {l.generator - 1, l.generator}) active -= --remaining[p] == 0;
  }
  return cost;
}

// Trace of the word read cyclically from `start`.
template <std::size_t Bytes>
LaurentPoly trace_points(const std::vector<Letter>& word, int n, std::size_t start) {
  // Every coefficient after t letters has A-exponents of parity t, so values
  // are stored in x = A^2 and the parity is tracked once for all of them.
  int parity = 0;
  std::vector<int> remaining(static_cast<std::size_t>(n), 0);
  for (const auto& l : word) {
    ++remaining[l.generator - 1];
    ++remaining[l.generator];
  }
  const auto open = [n](int p) { return 2 * n - 1 - p; };
  Points<Bytes> first;
  first.fill(kGone);
  for (int j = 0; j < n; ++j) {
    first[j] = static_cast<std::uint8_t>(open(j));
    first[open(j)] = static_cast<std::uint8_t>(j);
  }
  Layer<Bytes> cur{{first}, {0}, {1}, {0}, {1}};
  LayerBuilder<Bytes> next;

  // No letter touches p again, so its closure arc can be drawn now. The loop
  // closed by the last position is the one normalization discounts.
  int live = n;
  auto retire = [&](int p) {
    const bool last = --live == 0;
    next.clear(cur.keys.size());
    for (std::uint32_t i = 0; i < cur.keys.size(); ++i) {
      Points<Bytes> m = cur.keys[i];
      const bool loop = m[p] == open(p);
      if (!loop) {
        const auto x = m[p], y = m[open(p)];
        m[x] = y;
        m[y] = x;
      }
      m[p] = m[open(p)] = kGone;
      next.add(i, m, 0, loop && !last);
    }
    cur = next.build(cur);
  };
  for (int p = 0; p < n; ++p) {
    if (remaining[p] == 0) retire(p);
  }

  for (std::size_t k = 0; k < word.size(); ++k) {
    const Letter& l = word[(start + k) % word.size()];
    const int u = open(l.generator - 1), v = open(l.generator);
    // A^s in x: the shift that keeps 2k + parity equal to the new exponent.
    const int keep = (2 * parity + l.exponent - 1) / 2;
    const int join = (2 * parity - l.exponent - 1) / 2;
    next.clear(2 * cur.keys.size());
    for (std::uint32_t i = 0; i < cur.keys.size(); ++i) {
      next.add(i, cur.keys[i], keep, false);
      Points<Bytes> m = cur.keys[i];
      const bool loop = m[u] == v;
      if (!loop) {
        const auto x = m[u], y = m[v];
        m[x] = y;
        m[y] = x;
        m[u] = static_cast<std::uint8_t>(v);
        m[v] = static_cast<std::uint8_t>(u);
      }
      next.add(i, m, join, loop);
    }
    cur = next.build(cur);
    parity ^= 1;
    for (int p : {l.generator - 1, l.generator}) {
      if (--remaining[p] == 0) retire(p);
    }
  }

  LaurentPoly result;
  for (std::size_t t = 0; t < cur.keys.size(); ++t) {
    for (int k = 0; k < cur.len[t]; ++k) {
      result += LaurentPoly::monomial(cur.arena[cur.offset[t] + k], 2 * (cur.low[t] + k) + parity);
    }
  }
  return result;
}

}  // namespace

LaurentPoly bracket_via_tl_packed(const BraidWord& w) {
  const int n = w.strands();
  if (n > kPackedCap) {
    throw Error(ErrorCode::CapExceeded,
                "B" + std::to_string(n) + " exceeds the packed trace limit of " + std::to_string(kPackedCap));
  }
  // The trace does not change under cyclic rotation of the word, nor under
  // reading it backwards (the closure turned over about a horizontal axis).
  // Start where the fewest touched positions stay open.
  std::vector<Letter> word = w.letters();
  std::vector<Letter> backwards(word.rbegin(), word.rend());
  std::size_t start = 0;
  double best = 0;
  bool reverse = false;
  for (const auto* candidate : {&word, &backwards}) {
    for (std::size_t r = 0; r < candidate->size(); ++r) {
      const double c = rotation_cost(*candidate, n, r);
      if ((r == 0 && candidate == &word) || c < best) {
        best = c;
        start = r;
        reverse = candidate == &backwards;
      }
    }
  }
  if (reverse) word = std::move(backwards);

  return n <= kPackedCap / 2 ? trace_points<kPackedCap>(word, n, start) : trace_points<2 * kPackedCap>(word, n, start);
}

LaurentPoly normalized_jones(const BraidWord& w, int strand_cap) {
  LaurentPoly bracket = w.strands() <= strand_cap ? bracket_via_tl(w, strand_cap) : bracket_via_tl_packed(w);
  return jones_from_f(f_polynomial(bracket, exponent_sum(w)));
}

}  // namespace braidcalc
