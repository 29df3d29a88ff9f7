#pragma once

#include <string>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/diagram.hpp"

namespace testing_helpers {

inline braidcalc::BraidWord B(const std::string& text) { return braidcalc::parse_braid(text); }

inline braidcalc::MorseDiagram D(const std::string& text) { return braidcalc::parse_diagram(text).diagram; }

inline const char* kUnknot = "cup 1\ncap 1\n";
inline const char* kHopf = "cup 1\ncup 1\nx+ 2\nx+ 2\ncap 1\ncap 1\n";
inline const char* kTrefoil = "cup 1\ncup 1\nx+ 2\nx+ 2\nx+ 2\ncap 1\ncap 1\n";

}  // namespace testing_helpers
