#pragma once

#include <cstdint>
#include <random>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/diagram.hpp"

namespace braidcalc {

// Seeded generator. Integers are drawn by rejection so that sequences are the
// same on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// `length` letters on `strands` strands (strands >= 2 unless length is 0).
BraidWord random_braid(Rng& rng, int strands, std::size_t length);

struct RandomDiagramOptions {
  int max_crossings = 8;
  int max_width = 6;
  std::size_t max_events = 40;
};

// A random walk of cups, caps and crossings that ends at width 0. Always has
// at least one component.
MorseDiagram random_diagram(Rng& rng, const RandomDiagramOptions& options = {});

}  // namespace braidcalc
