#ifndef ISOTORI_RATIONAL_HPP
#define ISOTORI_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace isotori {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through the helpers
// below; raw two-argument construction does not canonicalize.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" in base 10 with an optional leading minus.
// Anything else (floats, whitespace, signs inside the denominator,
// zero denominator) is rejected.
std::optional<Rat> parse_rat(std::string_view text);

std::string to_string(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace isotori

#endif
