#include <doctest.h>

#include "braidcalc/error.hpp"
#include "braidcalc/laurent.hpp"

using braidcalc::Error;
using braidcalc::ErrorCode;
using braidcalc::LaurentPoly;

namespace {
LaurentPoly m(LaurentPoly::Coefficient c, int e) { return LaurentPoly::monomial(c, e); }
}  // namespace

TEST_CASE("representation is canonical after cancellation") {
  LaurentPoly p = m(1, -4) + m(1, 4);
  p -= m(1, 4);
  CHECK(p == m(1, -4));
  CHECK(p.min_exponent() == -4);
  CHECK(p.max_exponent() == -4);
  CHECK((p - p).is_zero());
  CHECK((p - p) == LaurentPoly());
}

TEST_CASE("multiplication and powers") {
  const LaurentPoly a = m(1, 1) + m(1, -1);
  CHECK(a * a == m(1, 2) + LaurentPoly(2) + m(1, -2));
  CHECK(a.pow(0) == LaurentPoly(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK((m(-1, 3)).pow(2) == m(1, 6));
}

TEST_CASE("printing is ascending and parse inverts it") {
  const LaurentPoly hopf = m(-1, -4) - m(1, 4);
  CHECK(hopf.to_string() == "-A^-4 - A^4");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((m(1, 1) - m(2, 3)).to_string() == "A - 2A^3");
  for (const char* text : {"-A^-4 - A^4", "1", "0", "A - 2A^3", "3 + 5A^-2", "-A"}) {
    const LaurentPoly p = LaurentPoly::parse(text);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK(LaurentPoly::parse("-A^-4 - A^4") == hopf);
}

TEST_CASE("half exponents") {
  const LaurentPoly j = m(-1, 5) - m(1, 1);
  CHECK(j.to_string_half("q") == "-q^(1/2) - q^(5/2)");
  CHECK((m(1, 2) + m(1, -4)).to_string_half("q") == "q^-2 + q");
}

TEST_CASE("substitutions") {
  const LaurentPoly p = m(2, 3) + m(-1, -1);
  CHECK(p.substitute_power(-1) == m(2, -3) + m(-1, 1));
  CHECK((m(1, 8) + m(1, -4)).divide_exponents(4) == m(1, 2) + m(1, -1));
  CHECK_THROWS_AS(p.divide_exponents(2), Error);
}

TEST_CASE("overflow is reported, not wrapped") {
  LaurentPoly p(1);
  bool overflowed = false;
  try {
    for (int i = 0; i < 200; ++i) p = p * LaurentPoly(2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
    overflowed = true;
  }
  CHECK(overflowed);
  // 2^100 is representable and prints exactly.
  CHECK(LaurentPoly(2).pow(100).to_string() == "1267650600228229401496703205376");
  CHECK(LaurentPoly::parse("1267650600228229401496703205376") == LaurentPoly(2).pow(100));
  CHECK_THROWS_AS(LaurentPoly::parse("9999999999999999999999999999999999999999999"), Error);
}
