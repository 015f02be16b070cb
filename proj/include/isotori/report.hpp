#ifndef ISOTORI_REPORT_HPP
#define ISOTORI_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "isotori/certify.hpp"
#include "isotori/oracle.hpp"

namespace isotori {

// Ordered key/value report; renders as "key: value" lines or as a JSON
// object with the same keys in the same order. Byte-identical across runs
// for a fixed seed.
class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, bool value);
  void add(std::string key, double value);
  void add(std::string key, const Rat& value);

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  std::string value_of(const std::string& key) const;  // empty if absent

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_certificate(const Certificate& cert);

// Classification rendered with stable field names, including the nested
// homogeneous projections under "homogeneous_X." / "homogeneous_Y.".
void append_classification(Report& report, const Classification& c,
                           const std::string& prefix = "");

void append_residual(Report& report, const std::string& key,
                     const ResidualReport& r);

Report classification_report(const Classification& c);

}  // namespace isotori

#endif
