#pragma once

#include "bispectra/mpoly.hpp"
#include "bispectra/partitions.hpp"

#include <vector>

namespace bispectra {

// h_0..h_cap where sum_n h_n z^n = exp(sum_k t_k z^k); this is the complete
// homogeneous basis in the power-sum normalization p_k = k t_k.
std::vector<MPoly> homogeneous_basis(long cap);

// Schur polynomial s_lambda(t) via the Jacobi-Trudi determinant
// det(h_{lambda_i - i + j}), truncated to weight cap.
MPoly schur_poly(const Partition &lam, const std::vector<MPoly> &h, long cap);

// determinant of a small MPoly matrix by Laplace expansion with column-subset
// memoization (the ring has no division)
MPoly det_mpoly(const std::vector<std::vector<MPoly>> &M, long cap);

} // namespace bispectra
