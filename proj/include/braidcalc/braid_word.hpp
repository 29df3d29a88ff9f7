#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidcalc {

// sigma_generator^exponent with exponent = +1 or -1.
struct Letter {
  int generator = 1;
  int exponent = 1;

  Letter inverse() const { return {generator, -exponent}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// An element of B_n written as a word in the Artin generators, read top to
// bottom: letters()[0] is the topmost crossing. sigma_i^{+1} is the crossing
// of strands i and i+1 in which the strand moving left (from position i+1 to
// position i going down) passes over.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

// images[p] is the bottom position (0-based) reached by the strand starting
// at top position p.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int cycle_count() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

enum class RelationKind { yang_baxter, far_commute };
enum class RelationDirection { forward, backward };

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
BraidWord free_reduce(const BraidWord& a);

// Deletes the adjacent inverse pair starting at `position`.
BraidWord cancel_pair(const BraidWord& a, std::size_t position);
// Inserts letter·letter^{-1} before `position`.
BraidWord insert_pair(const BraidWord& a, std::size_t position, Letter letter);
// Positions of the single cancellations a full free reduction performs, in
// order; replaying them with cancel_pair yields free_reduce(a).
std::vector<std::size_t> free_reduction_steps(const BraidWord& a);

// Rewrites the window at `position`.
//   yang_baxter forward : s_i^a s_{i+1}^b s_i^c -> s_{i+1}^c s_i^b s_{i+1}^a
//   yang_baxter backward: s_{i+1}^a s_i^b s_{i+1}^c -> s_i^c s_{i+1}^b s_i^a
// valid for every sign triple except a = c = -b. With all signs positive this
// is the defining relation; the five signed forms are its consequences.
//   far_commute (either direction): s_i^a s_j^b -> s_j^b s_i^a, |i-j| > 1.
BraidWord apply_relation(const BraidWord& a, std::size_t position, RelationKind kind,
                         RelationDirection direction);
bool relation_applies(const BraidWord& a, std::size_t position, RelationKind kind,
                      RelationDirection direction);

struct RelationSite {
  std::size_t position;
  RelationKind kind;
  RelationDirection direction;
};
// All windows where apply_relation succeeds, ordered by position then kind.
std::vector<RelationSite> relation_sites(const BraidWord& a);

Permutation permutation(const BraidWord& a);
int exponent_sum(const BraidWord& a);
int closure_components(const BraidWord& a);

// sigma_i^{-sign} · a · sigma_i^{sign}.
BraidWord conjugate(const BraidWord& a, int generator, int sign);
// Moves the last k letters to the front.
BraidWord commute_rotate(const BraidWord& a, std::size_t k);
// Inserts sigma_n^{sign} at letter position `at`; the result lives in B_{n+1}.
BraidWord stabilize(const BraidWord& a, std::size_t at, int sign);

struct Destabilization {
  BraidWord word;           // in B_{n-1}
  std::size_t position;     // where sigma_{n-1} was removed
  int sign;                 // its exponent
};
// Removes the only occurrence of sigma_{n-1}; nullopt when it occurs zero or
// several times. Applied anywhere in the word, this is bottom destabilization
// preceded by commute_rotate.
std::optional<Destabilization> destabilize_detail(const BraidWord& a);
std::optional<BraidWord> destabilize(const BraidWord& a);

// "B3: 1 -2 1"; the identity of B_2 is "B2:".
std::string format_braid(const BraidWord& a);
BraidWord parse_braid(std::string_view text);

}  // namespace braidcalc
