#pragma once

#include "bispectra/rational.hpp"

#include <map>
#include <string>

namespace bispectra {

// Truncated formal Laurent vector: leading exponent plus a tail of strictly
// lower exponents, coefficients tracked down to the floor.
struct FormalLaurentVector {
	long lead = 0;
	long floor = 0;
	std::map<long, Rat> c; // exponent -> coefficient

	Rat coeff(long e) const
	{
		auto it = c.find(e);
		return it == c.end() ? Rat(0) : it->second;
	}

	void set(long e, const Rat &v)
	{
		if (v.is_zero())
			c.erase(e);
		else
			c[e] = v;
	}

	// this -= s * o, on exponents >= floor
	void axpy_sub(const Rat &s, const FormalLaurentVector &o)
	{
		for (auto &[e, v] : o.c) {
			if (e < floor)
				continue;
			auto it = c.find(e);
			if (it == c.end()) {
				Rat nv = -s * v;
				if (!nv.is_zero())
					c[e] = nv;
				continue;
			}
			it->second -= s * v;
			if (it->second.is_zero())
				c.erase(it);
		}
	}

	FormalLaurentVector shifted(long k) const // multiply by y^k
	{
		FormalLaurentVector r;
		r.lead = lead + k;
		r.floor = floor + k;
		for (auto &[e, v] : c)
			r.c[e + k] = v;
		return r;
	}

	std::string str() const
	{
		std::string s;
		for (auto it = c.rbegin(); it != c.rend(); ++it) {
			if (!s.empty())
				s += " + ";
			s += "(" + it->second.str() + ")y^" + std::to_string(it->first);
		}
		return s.empty() ? "0" : s;
	}
};

} // namespace bispectra
