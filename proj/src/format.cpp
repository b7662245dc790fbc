#include "triband/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace triband {

std::string format_g9(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

double round9(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_g9(v).c_str(), nullptr);
}

std::string format_complex_g9(Complex z) {
    if (z.imag() == 0.0) return format_g9(z.real());
    std::string out = format_g9(z.real());
    if (!(z.imag() < 0.0)) out += '+';
    out += format_g9(z.imag());
    out += 'i';
    return out;
}

namespace {

double parse_decimal(std::string_view text, const char* what) {
    if (text.empty()) throw std::invalid_argument(what);
    const std::string token(text);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
        throw std::invalid_argument(what);
    }
    return v;
}

}  // namespace

Complex parse_complex_literal(std::string_view text) {
    // trim surrounding spaces
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) {
        throw std::invalid_argument("empty complex literal");
    }

    // locate the separator sign of the imaginary part: a '+'/'-' that is not
    // the leading sign and not part of an exponent
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    if (split == std::string_view::npos) {
        if (text.back() == 'i' || text.back() == 'I') {
            throw std::invalid_argument(
                "complex literal: pure imaginary values must be written 0+bi");
        }
        return Complex{parse_decimal(text, "bad real literal"), 0.0};
    }

    if (text.back() != 'i' && text.back() != 'I') {
        throw std::invalid_argument("complex literal: missing trailing 'i'");
    }
    const double re = parse_decimal(text.substr(0, split), "bad real part");
    std::string_view imag_part = text.substr(split, text.size() - split - 1);
    if (imag_part.size() < 2) {  // just the sign
        throw std::invalid_argument("complex literal: missing imaginary digits");
    }
    const double im = parse_decimal(imag_part, "bad imaginary part");
    return Complex{re, im};
}

}  // namespace triband
