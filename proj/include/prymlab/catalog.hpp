#pragma once

#include "prymlab/criteria.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prymlab {

// Named permutation groups. The built-in table is used unless the
// PRYMLAB_CATALOG environment variable points at a JSON catalog file.
std::vector<CatalogEntry> catalog_groups();

std::optional<CatalogEntry> catalog_lookup(const std::string &name);

// Parses a catalog JSON document: {"groups": [{"name": ..., "generators": [[...]]}]}
std::vector<CatalogEntry> parse_catalog_json(const std::string &text);

} // namespace prymlab
