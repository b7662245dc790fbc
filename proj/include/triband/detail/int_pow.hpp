#pragma once

#include "triband/types.hpp"

namespace triband::detail {

/// z^e by repeated squaring. The running square is only advanced while bits
/// remain, so intermediate magnitudes never exceed max(1, |z|^e) and the
/// computation is overflow-safe whenever the result is.
inline Complex int_pow(Complex z, std::size_t e) {
    Complex acc{1.0, 0.0};
    Complex b = z;
    while (e > 0) {
        if (e & 1u) acc *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return acc;
}

}  // namespace triband::detail
