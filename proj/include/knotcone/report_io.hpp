#pragma once

#include <string>

#include "knotcone/surgery.hpp"

namespace knotcone {

// Keys sorted; per_s and by_class keyed by integers in ascending numeric order.
std::string report_to_json(const ConeReport& r);

// Header "s\trank\tresidue", one row per nonzero entry, then a footer
// "total=<T> simple=<true|false|none>".
std::string report_to_tsv(const ConeReport& r);

}  // namespace knotcone
