#pragma once

#include "lrc/matrix.hpp"

namespace lrc {

// [n, k] Reed-Solomon generator: Vandermonde rows over the points 0..n-1.
Matrix rs_generator(const Field& f, size_t n, size_t k);
// Same code in systematic form [I_k | P].
Matrix rs_systematic(const Field& f, size_t n, size_t k);
// Bring a generator to [I | P] form on the given columns.
Matrix systematize(const Matrix& g, const std::vector<size_t>& cols);

}  // namespace lrc
