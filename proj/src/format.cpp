#include "mie/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace mie {

std::string format_number(double value)
{
    if (value == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    return std::string(buf.data(), end);
}

double round_significant(double value)
{
    if (!std::isfinite(value)) {
        return value;
    }
    const std::string text = format_number(value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

} // namespace mie
