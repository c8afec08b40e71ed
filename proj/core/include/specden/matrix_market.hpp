#pragma once

#include "specden/operator.hpp"

#include <string>

namespace specden {

/// Reads a coordinate-format real symmetric Matrix Market file and
/// materializes the full symmetric pattern (lower triangle mirrored).
/// Non-symmetric headers, out-of-range indices, and parse failures are
/// rejected with descriptive errors.
SparseSymmetric load_matrix_market(const std::string& path);

} // namespace specden
