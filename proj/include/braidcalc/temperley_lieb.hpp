#pragma once

#include <map>
#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/laurent.hpp"

namespace braidcalc {

// Element of the Temperley-Lieb algebra TL_n over Z[A, A^-1]. Basis
// diagrams are crossingless matchings of 2n points: tops 0..n-1, bottoms
// n..2n-1, bottom n+j lying under top j. Closed loops are absorbed into
// delta = -A^2 - A^-2 as soon as they appear.
class TLElement {
 public:
  using Matching = std::vector<signed char>;

  static TLElement identity(int n);

  int strands() const { return n_; }
  const std::map<Matching, LaurentPoly>& terms() const { return terms_; }

  // Right multiplication (attaching below) by sigma_i^{exponent}, which maps
  // to A^e + A^-e e_i.
  void multiply_generator(int i, int exponent);
  // Closes top j to bottom n+j; delta^(loops-1) per basis diagram.
  LaurentPoly markov_trace() const;

 private:
  int n_ = 0;
  std::map<Matching, LaurentPoly> terms_;
};

inline constexpr int kDefaultTLStrandCap = 8;

// Bracket of the closure of w, normalized to 1 on the unknot. Throws
// Error{CapExceeded} when w has more than `strand_cap` strands.
LaurentPoly bracket_via_tl(const BraidWord& w, int strand_cap = kDefaultTLStrandCap);

// The same trace for braids too wide for TLElement. Basis diagrams are byte
// arrays in a flat hash table, a strand is closed off as soon as no letter
// touches it again, and the word is read from the rotation (or reversal)
// that looks cheapest. Throws Error{CapExceeded} above 32 strands.
LaurentPoly bracket_via_tl_packed(const BraidWord& w);

// Jones polynomial of the closure of w in q^{1/2} units (see jones_from_f).
// Uses TLElement up to `strand_cap` strands and the packed trace beyond.
LaurentPoly normalized_jones(const BraidWord& w, int strand_cap = kDefaultTLStrandCap);

}  // namespace braidcalc
