#include "burgersfem/csv.hpp"

#include <cstdio>

namespace burgersfem {

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace burgersfem
