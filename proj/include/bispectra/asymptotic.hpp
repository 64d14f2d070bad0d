#pragma once

#include "bispectra/family.hpp"
#include "bispectra/rational.hpp"

#include <map>

namespace bispectra {

// Formal large-argument expansion of the second-kind function at the saddle
// z = eps*y after the substitution x = y^d:
//
//   nu(s, y^d) ~ const * exp(eps*(d/(d+1)) y^{d+1}) * y^{-s-1-(d-1)/2} * T(y),
//   T(y) = 1 + sum_{k>=1} tail[-(d+1)k] y^{-(d+1)k}.
//
// eps = -1 is available for even d only (the second real saddle).
struct AsymptoticExpansion {
	long d = 2;
	long s = -1;
	int eps = 1;
	long order = 0;           // tail computed down to offset -(d+1)*order
	Rat exponent_coeff;       // eps * d/(d+1), multiplies y^{d+1}
	Rat power_shift;          // -s-1-(d-1)/2, the prefactor power of y
	std::map<long, Rat> tail; // offset (<= 0) -> coefficient, tail[0] = 1

	Rat tail_at(long offset) const
	{
		auto it = tail.find(offset);
		return it == tail.end() ? Rat(0) : it->second;
	}
};

// Exact rational tail by formal saddle-point expansion (substitute
// z = eps*y + u, expand, integrate formal Gaussian moments).
AsymptoticExpansion asymptotic_expansion(const FamilyConfig &cfg, long s, long order,
                                         int eps);

// eps defaulted: -1 for even d (matches the decaying-solution tails), +1 else.
AsymptoticExpansion asymptotic_expansion(const FamilyConfig &cfg, long s, long order);

enum class PropagateRelation { lowering, recurrence };

// lowering: expansion for s-1 via the formal derivative (1/(d y^{d-1})) d/dy;
// recurrence: expansion for s+1 via nu(s+1) = (x nu(s) - nu(s-d))/(s+1),
// with nu(s-d) obtained by d-fold lowering. Raising at s = -1 is rejected.
AsymptoticExpansion propagate_expansion(const AsymptoticExpansion &e,
                                        PropagateRelation rel);

} // namespace bispectra
