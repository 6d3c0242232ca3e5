// wrapser: exact filtration values (rationals) and decimal parsing
#pragma once

#include <wrapser/common.hpp>

#include <gmpxx.h>

#include <string>

namespace wrapser {

// Filtration values are exact rationals throughout; doubles only appear at the
// I/O boundary. Radius-based filtrations store *squared* radii.
typedef mpq_class FiltValue;

// parse a decimal literal ("-12.5e-3" etc.) into an exact rational
FiltValue parse_decimal(const std::string& text);

double to_double(const FiltValue& v);

}  // namespace wrapser
