#pragma once

#include <string>

namespace burgersfem {

// Shortest round-trip decimal form with 17 significant digits ("%.17g").
// All CSV output goes through this so reruns are byte-identical.
std::string format_full(double value);

}  // namespace burgersfem
