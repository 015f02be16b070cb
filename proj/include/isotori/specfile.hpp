#ifndef ISOTORI_SPECFILE_HPP
#define ISOTORI_SPECFILE_HPP

#include <stdexcept>
#include <string>

#include "isotori/torus.hpp"

namespace isotori {

// Parse or validation failure with the offending field named.
struct SpecFileError : std::runtime_error {
  explicit SpecFileError(const std::string& what) : std::runtime_error(what) {}
};

// JSON document with fields name, n, l, m, r_squared (array of n rational
// strings), E (n arrays of l rational strings), F (n arrays of m rational
// strings). Rational strings only; float literals are rejected.
TorusSpec parse_spec(const std::string& json_text);
TorusSpec load_spec(const std::string& path);

std::string serialize_spec(const TorusSpec& spec);

}  // namespace isotori

#endif
