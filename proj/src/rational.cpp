#include "isotori/rational.hpp"

#include <cctype>

namespace isotori {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  Rat q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    return std::nullopt;
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace isotori
