#include "bispectra/schur.hpp"

#include <map>
#include <stdexcept>

namespace bispectra {

std::vector<MPoly> homogeneous_basis(long cap)
{
	// n h_n = sum_{k=1}^{n} k t_k h_{n-k}, from differentiating the generating
	// series in z
	std::vector<MPoly> h(cap + 1);
	h[0] = MPoly::one();
	for (long n = 1; n <= cap; ++n) {
		MPoly acc;
		for (long k = 1; k <= n; ++k)
			acc += h[n - k].mul_var(k, cap) * Rat(k);
		h[n] = acc * Rat(1, n);
	}
	return h;
}

namespace {

// expansion along the last row over a subset of columns
MPoly det_rec(const std::vector<std::vector<MPoly>> &M, long cap, unsigned cols,
              long row, std::map<unsigned, MPoly> &memo)
{
	if (row < 0)
		return MPoly::one();
	auto it = memo.find(cols);
	if (it != memo.end())
		return it->second;
	MPoly acc;
	long n = (long)M.size();
	for (long j = 0, seen = 0; j < n; ++j) {
		if (!(cols & (1u << j)))
			continue;
		MPoly sub = det_rec(M, cap, cols & ~(1u << j), row - 1, memo);
		MPoly term = MPoly::mul(M[row][j], sub, cap);
		acc += (((row + seen) % 2 == 0) ? term : -term);
		++seen;
	}
	memo[cols] = acc;
	return acc;
}

} // namespace

MPoly det_mpoly(const std::vector<std::vector<MPoly>> &M, long cap)
{
	long n = (long)M.size();
	if (n == 0)
		return MPoly::one();
	if (n > 20)
		throw std::invalid_argument("det_mpoly: matrix too large");
	std::map<unsigned, MPoly> memo;
	return det_rec(M, cap, (1u << n) - 1, n - 1, memo);
}

MPoly schur_poly(const Partition &lam, const std::vector<MPoly> &h, long cap)
{
	long l = lam.length();
	if (l == 0)
		return MPoly::one();
	std::vector<std::vector<MPoly>> M(l, std::vector<MPoly>(l));
	for (long i = 0; i < l; ++i)
		for (long j = 0; j < l; ++j) {
			long idx = lam.parts[i] - (i + 1) + (j + 1);
			if (idx < 0)
				M[i][j] = MPoly();
			else if (idx >= (long)h.size())
				throw std::invalid_argument("schur_poly: basis too short");
			else
				M[i][j] = h[idx];
		}
	return det_mpoly(M, cap);
}

} // namespace bispectra
