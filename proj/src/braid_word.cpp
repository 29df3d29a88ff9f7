#include "braidcalc/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "braidcalc/error.hpp"

namespace braidcalc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NegativeWidth: return "NegativeWidth";
    case ErrorCode::ColumnOutOfRange: return "ColumnOutOfRange";
    case ErrorCode::NonzeroFinalWidth: return "NonzeroFinalWidth";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::IndexOutOfRange, "strand count must be at least 1");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator > strands_ - 1) {
      throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(l.generator) +
                                                  " out of range for B" + std::to_string(strands_));
    }
    if (l.exponent != 1 && l.exponent != -1) {
      throw Error(ErrorCode::IndexOutOfRange, "letter exponent must be +1 or -1");
    }
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto p = start; !seen[p]; p = static_cast<std::size_t>(images[p])) seen[p] = true;
  }
  return cycles;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw Error(ErrorCode::StrandMismatch, "cannot compose B" + std::to_string(a.strands()) +
                                               " with B" + std::to_string(b.strands()));
  }
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& a) {
  std::vector<Letter> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(a.strands(), std::move(letters));
}

// A stack reduction yields the unique reduced word of the free group, so the
// result does not depend on which cancellations are performed first.
BraidWord free_reduce(const BraidWord& a) {
  std::vector<Letter> stack;
  stack.reserve(a.length());
  for (const auto& l : a.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(a.strands(), std::move(stack));
}

std::vector<std::size_t> free_reduction_steps(const BraidWord& a) {
  std::vector<std::size_t> steps;
  std::vector<Letter> stack;
  // Each cancellation happens in the word "stack + unread suffix", so the
  // pair sits at stack.size() - 1 at the moment it is removed.
  for (const auto& l : a.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      steps.push_back(stack.size() - 1);
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return steps;
}

BraidWord cancel_pair(const BraidWord& a, std::size_t position) {
  const auto& ls = a.letters();
  if (position + 1 >= ls.size() || ls[position] != ls[position + 1].inverse()) {
    throw Error(ErrorCode::NoMatch, "no cancelling pair at position " + std::to_string(position));
  }
  auto letters = ls;
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(position),
                letters.begin() + static_cast<std::ptrdiff_t>(position) + 2);
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord insert_pair(const BraidWord& a, std::size_t position, Letter letter) {
  if (position > a.length()) throw Error(ErrorCode::PositionOutOfRange, "insert position out of range");
  auto letters = a.letters();
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(position), {letter, letter.inverse()});
  return BraidWord(a.strands(), std::move(letters));
}

namespace {

bool yang_baxter_signs_ok(int a, int b, int c) { return !(a == c && a == -b); }

}  // namespace

bool relation_applies(const BraidWord& a, std::size_t position, RelationKind kind,
                      RelationDirection direction) {
  const auto& ls = a.letters();
  if (kind == RelationKind::far_commute) {
    if (position + 2 > ls.size()) return false;
    return std::abs(ls[position].generator - ls[position + 1].generator) > 1;
  }
  if (position + 3 > ls.size()) return false;
  const Letter& x = ls[position];
  const Letter& y = ls[position + 1];
  const Letter& z = ls[position + 2];
  if (x.generator != z.generator) return false;
  int expected = direction == RelationDirection::forward ? x.generator + 1 : x.generator - 1;
  if (y.generator != expected) return false;
  return yang_baxter_signs_ok(x.exponent, y.exponent, z.exponent);
}

BraidWord apply_relation(const BraidWord& a, std::size_t position, RelationKind kind,
                         RelationDirection direction) {
  std::size_t window = kind == RelationKind::far_commute ? 2 : 3;
  if (position + window > a.length()) {
    throw Error(ErrorCode::PositionOutOfRange, "relation window at " + std::to_string(position) +
                                                   " runs past the end of the word");
  }
  if (!relation_applies(a, position, kind, direction)) {
    throw Error(ErrorCode::NoMatch, "relation does not match at position " + std::to_string(position));
  }
  auto letters = a.letters();
  auto* w = letters.data() + position;
  if (kind == RelationKind::far_commute) {
    std::swap(w[0], w[1]);
  } else {
    Letter x = w[0], y = w[1], z = w[2];
    w[0] = {y.generator, z.exponent};
    w[1] = {x.generator, y.exponent};
    w[2] = {y.generator, x.exponent};
  }
  return BraidWord(a.strands(), std::move(letters));
}

std::vector<RelationSite> relation_sites(const BraidWord& a) {
  std::vector<RelationSite> sites;
  for (std::size_t p = 0; p < a.length(); ++p) {
    for (auto kind : {RelationKind::yang_baxter, RelationKind::far_commute}) {
      for (auto dir : {RelationDirection::forward, RelationDirection::backward}) {
        // far_commute is its own inverse; report it once.
        if (kind == RelationKind::far_commute && dir == RelationDirection::backward) continue;
        if (relation_applies(a, p, kind, dir)) sites.push_back({p, kind, dir});
      }
    }
  }
  return sites;
}

Permutation permutation(const BraidWord& a) {
  // slot[q] = top position of the strand currently at q.
  std::vector<int> slot(static_cast<std::size_t>(a.strands()));
  std::iota(slot.begin(), slot.end(), 0);
  for (const auto& l : a.letters()) {
    std::swap(slot[static_cast<std::size_t>(l.generator - 1)], slot[static_cast<std::size_t>(l.generator)]);
  }
  Permutation p;
  p.images.resize(slot.size());
  for (std::size_t q = 0; q < slot.size(); ++q) p.images[static_cast<std::size_t>(slot[q])] = static_cast<int>(q);
  return p;
}

int exponent_sum(const BraidWord& a) {
  int sum = 0;
  for (const auto& l : a.letters()) sum += l.exponent;
  return sum;
}

int closure_components(const BraidWord& a) { return permutation(a).cycle_count(); }

BraidWord conjugate(const BraidWord& a, int generator, int sign) {
  if (generator < 1 || generator > a.strands() - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "conjugating generator out of range");
  }
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidSpec, "sign must be +1 or -1");
  std::vector<Letter> letters;
  letters.reserve(a.length() + 2);
  letters.push_back({generator, -sign});
  letters.insert(letters.end(), a.letters().begin(), a.letters().end());
  letters.push_back({generator, sign});
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord commute_rotate(const BraidWord& a, std::size_t k) {
  if (k > a.length()) throw Error(ErrorCode::PositionOutOfRange, "rotation amount exceeds word length");
  auto letters = a.letters();
  std::rotate(letters.begin(), letters.end() - static_cast<std::ptrdiff_t>(k), letters.end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& a, std::size_t at, int sign) {
  if (at > a.length()) throw Error(ErrorCode::PositionOutOfRange, "stabilization position out of range");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidSpec, "sign must be +1 or -1");
  auto letters = a.letters();
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(at), Letter{a.strands(), sign});
  return BraidWord(a.strands() + 1, std::move(letters));
}

std::optional<Destabilization> destabilize_detail(const BraidWord& a) {
  if (a.strands() < 2) return std::nullopt;
  const int top = a.strands() - 1;
  std::optional<std::size_t> found;
  for (std::size_t p = 0; p < a.length(); ++p) {
    if (a.letters()[p].generator != top) continue;
    if (found) return std::nullopt;
    found = p;
  }
  if (!found) return std::nullopt;
  auto letters = a.letters();
  int sign = letters[*found].exponent;
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(*found));
  return Destabilization{BraidWord(a.strands() - 1, std::move(letters)), *found, sign};
}

std::optional<BraidWord> destabilize(const BraidWord& a) {
  auto d = destabilize_detail(a);
  if (!d) return std::nullopt;
  return d->word;
}

std::string format_braid(const BraidWord& a) {
  std::string out = "B" + std::to_string(a.strands()) + ":";
  for (const auto& l : a.letters()) out += " " + std::to_string(l.generator * l.exponent);
  return out;
}

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos >= text.size() || text[pos] != 'B') throw ParseError(1, "braid word must start with 'B<n>:'");
  ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (digits == pos || pos >= text.size() || text[pos] != ':') {
    throw ParseError(1, "braid word must start with 'B<n>:'");
  }
  int strands = 0;
  if (std::from_chars(text.data() + digits, text.data() + pos, strands).ec != std::errc()) {
    throw ParseError(1, "strand count out of range");
  }
  ++pos;
  std::vector<Letter> letters;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    std::size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    std::size_t number = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (number == pos || (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))) {
      throw ParseError(1, "malformed letter near '" + std::string(text.substr(start, 8)) + "'");
    }
    int value = 0;
    const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
    if (std::from_chars(first, text.data() + pos, value).ec != std::errc()) {
      throw ParseError(1, "generator out of range");
    }
    if (value == 0) throw ParseError(1, "generator 0 does not exist");
    letters.push_back({std::abs(value), value > 0 ? 1 : -1});
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
}

}  // namespace braidcalc
