#ifndef ISOTORI_CATALOG_HPP
#define ISOTORI_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "isotori/torus.hpp"

namespace isotori {

// Built-in example tori with their expected classifications. The expected
// values are report keys and the exact values the classifier must produce.
struct CatalogEntry {
  std::string name;
  std::string description;
  TorusSpec spec;
  std::vector<std::pair<std::string, std::string>> expected;
};

const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(const std::string& name);

struct CatalogCheckResult {
  bool pass = true;
  std::vector<std::string> mismatches;
};

CatalogCheckResult check_entry(const CatalogEntry& entry);

}  // namespace isotori

#endif
