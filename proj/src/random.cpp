#include "braidcalc/random.hpp"

#include <limits>

#include "braidcalc/error.hpp"

namespace braidcalc {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw Error(ErrorCode::Precondition, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<int>(static_cast<std::int64_t>(lo) + static_cast<std::int64_t>(x % span));
}

BraidWord random_braid(Rng& rng, int strands, std::size_t length) {
  if (length > 0 && strands < 2) throw Error(ErrorCode::Precondition, "letters need at least two strands");
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) letters.push_back({rng.uniform(1, strands - 1), rng.coin() ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

MorseDiagram random_diagram(Rng& rng, const RandomDiagramOptions& options) {
  if (options.max_width < 2) throw Error(ErrorCode::Precondition, "max_width must be at least 2");
  MorseDiagram d;
  int width = 0;
  int crossings = 0;
  while (true) {
    const bool closing = d.events.size() >= options.max_events;
    if (width == 0) {
      if (!d.events.empty() && (closing || rng.uniform(0, 3) == 0)) break;
      d.events.push_back({EventKind::cup, 1});
      width = 2;
      continue;
    }
    if (closing) {
      d.events.push_back({EventKind::cap, rng.uniform(1, width - 1)});
      width -= 2;
      continue;
    }
    const int roll = rng.uniform(0, 9);
    if (roll < 5 && crossings < options.max_crossings) {
      d.events.push_back({rng.coin() ? EventKind::cross_pos : EventKind::cross_neg, rng.uniform(1, width - 1)});
      ++crossings;
    } else if (roll < 7 && width + 2 <= options.max_width) {
      d.events.push_back({EventKind::cup, rng.uniform(1, width + 1)});
      width += 2;
    } else {
      d.events.push_back({EventKind::cap, rng.uniform(1, width - 1)});
      width -= 2;
    }
  }
  return d;
}

}  // namespace braidcalc
