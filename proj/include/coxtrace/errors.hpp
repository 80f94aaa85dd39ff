#pragma once

#include <stdexcept>
#include <string>

namespace coxtrace {

// Bad arguments: size mismatches, malformed labels, out-of-range indices.
struct invalid_input : std::invalid_argument {
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// A request outside the supported desk scale (rank guards, enumeration caps).
struct capability_error : std::runtime_error {
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal identity failed: a constructed model violates its defining
// relations, or a verified quantity came out wrong.  Always a bug or a
// corrupted table, never a user error.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

// Stored table data failed its checksum or one of its verification clauses.
struct data_integrity_error : std::runtime_error {
  explicit data_integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxtrace
