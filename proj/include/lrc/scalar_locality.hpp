#pragma once

#include "lrc/construction.hpp"
#include "lrc/oracle.hpp"

namespace lrc {

Construction pyramid_construct(size_t k, size_t r, size_t delta, size_t dmin, const Field& field);

Construction parity_split_construct(size_t k, size_t r, size_t delta, const Field& field);

// Locality-only code: block-diagonal Vandermonde parity checks, one block of
// delta-1 rows per group of r+delta-1 coordinates, disjoint evaluation points.
Matrix local_parity_checks(const Field& field, size_t n, size_t r, size_t delta);

Construction random_all_symbol_construct(size_t n, size_t k, size_t r, size_t delta, const Field& field,
                                         uint64_t seed, size_t max_attempts = 10);

// Every k-core of the locality-only code is also a k-core of the code.
bool kcores_preserved(const Matrix& g, const Matrix& g_locality_only);

}  // namespace lrc
