#pragma once

// Knot-complex file format:
//
//   { "name": "T(2,3)",
//     "generators": [ { "id": "x1", "alexander": 1 }, ... ],
//     "arrows": [ [ "x0", "x-1" ], ... ] }
//
// Unknown fields, duplicate arrows and arrows naming unknown ids are parse
// errors. Grading and d^2 violations are left to validate().

#include <filesystem>
#include <string>
#include <string_view>

#include "knotcone/graded_complex.hpp"

namespace knotcone {

GradedComplex parse_complex(std::string_view json_text);
std::string complex_to_json(const GradedComplex& c);

// Reads and parses without validating.
GradedComplex read_complex_file(const std::filesystem::path& path);

// Reads, parses and validates; validation failures are thrown as
// Error(Validation) with one violation per line.
GradedComplex load_complex(const std::filesystem::path& path);

}  // namespace knotcone
