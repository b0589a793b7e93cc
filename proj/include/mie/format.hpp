#ifndef MIE_FORMAT_HPP
#define MIE_FORMAT_HPP

#include <string>

namespace mie {

// Shortest decimal text with at most 12 significant digits, correctly
// rounded (ties to even on the exact binary value). Locale-independent.
std::string format_number(double value);

// `value` rounded to 12 significant digits, for feeding a JSON writer that
// prints shortest round-trip text.
double round_significant(double value);

} // namespace mie

#endif
