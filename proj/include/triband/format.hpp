#pragma once

#include <string>
#include <string_view>

#include "triband/types.hpp"

namespace triband {

/// Fixed report formatting: 9 significant digits ("%.9g"), locale-free.
std::string format_g9(double v);

/// Rounds through the 9-significant-digit decimal representation, so values
/// embedded in structured reports match the printed form exactly.
double round9(double v);

/// "a", "a+bi" or "a-bi" with 9 significant digits per part; a pure real
/// prints without the imaginary term.
std::string format_complex_g9(Complex z);

/// Parses the complex literal grammar accepted on the command line:
///   RE            e.g.  2, -1.5, 3e-2
///   RE+IMi        e.g.  1+2i, 1.5+0.25i
///   RE-IMi        e.g.  1-2i, -0.5-1e-3i
/// RE and IM are plain decimal literals (exponents allowed); the imaginary
/// unit is a trailing 'i' or 'I'. Anything else is rejected.
Complex parse_complex_literal(std::string_view text);

}  // namespace triband
