#pragma once

#include "bispectra/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bispectra {

// Univariate polynomial with exact rational coefficients, sparse by degree.
// No zero coefficients are stored.
class XPoly {
  public:
	XPoly() = default;
	explicit XPoly(const Rat &c)
	{
		if (!c.is_zero())
			c_[0] = c;
	}

	static XPoly monomial(long deg, const Rat &c = Rat(1))
	{
		XPoly p;
		if (!c.is_zero())
			p.c_[deg] = c;
		return p;
	}
	static XPoly one() { return XPoly(Rat(1)); }

	const std::map<long, Rat> &coeffs() const { return c_; }

	Rat coeff(long deg) const
	{
		auto it = c_.find(deg);
		return it == c_.end() ? Rat(0) : it->second;
	}

	void set(long deg, const Rat &c)
	{
		if (deg < 0)
			throw std::invalid_argument("XPoly: negative degree");
		if (c.is_zero())
			c_.erase(deg);
		else
			c_[deg] = c;
	}

	void add(long deg, const Rat &c)
	{
		auto it = c_.find(deg);
		if (it == c_.end()) {
			if (!c.is_zero())
				c_[deg] = c;
			return;
		}
		it->second += c;
		if (it->second.is_zero())
			c_.erase(it);
	}

	bool is_zero() const { return c_.empty(); }
	// degree of the zero polynomial reported as -1
	long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
	Rat leading() const { return c_.empty() ? Rat(0) : c_.rbegin()->second; }

	XPoly &operator+=(const XPoly &o)
	{
		for (auto &[d, c] : o.c_)
			add(d, c);
		return *this;
	}
	XPoly &operator-=(const XPoly &o)
	{
		for (auto &[d, c] : o.c_)
			add(d, -c);
		return *this;
	}
	friend XPoly operator+(XPoly a, const XPoly &b) { return a += b; }
	friend XPoly operator-(XPoly a, const XPoly &b) { return a -= b; }
	XPoly operator-() const
	{
		XPoly r;
		for (auto &[d, c] : c_)
			r.c_[d] = -c;
		return r;
	}

	friend XPoly operator*(const XPoly &a, const XPoly &b)
	{
		XPoly r;
		for (auto &[da, ca] : a.c_)
			for (auto &[db, cb] : b.c_)
				r.add(da + db, ca * cb);
		return r;
	}

	XPoly &operator*=(const Rat &s)
	{
		if (s.is_zero()) {
			c_.clear();
			return *this;
		}
		for (auto &[d, c] : c_)
			c *= s;
		return *this;
	}
	friend XPoly operator*(XPoly a, const Rat &s) { return a *= s; }
	friend XPoly operator*(const Rat &s, XPoly a) { return a *= s; }

	friend bool operator==(const XPoly &a, const XPoly &b) { return a.c_ == b.c_; }
	friend bool operator!=(const XPoly &a, const XPoly &b) { return !(a == b); }

	XPoly derivative() const
	{
		XPoly r;
		for (auto &[d, c] : c_)
			if (d > 0)
				r.c_[d - 1] = c * Rat(d);
		return r;
	}

	Rat eval(const Rat &x) const
	{
		// Horner over the dense range
		Rat r(0);
		long prev = -1;
		for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
			if (prev >= 0)
				r *= x.pow(prev - it->first);
			r += it->second;
			prev = it->first;
		}
		if (prev > 0)
			r *= x.pow(prev);
		return r;
	}

	std::string str(const std::string &var = "x") const
	{
		if (c_.empty())
			return "0";
		std::string s;
		for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
			const auto &[d, c] = *it;
			if (!s.empty())
				s += c.sign() < 0 ? " - " : " + ";
			else if (c.sign() < 0)
				s += "-";
			Rat a = c.abs();
			if (d == 0)
				s += a.str();
			else {
				if (a != Rat(1))
					s += a.str() + "*";
				s += var;
				if (d > 1)
					s += "^" + std::to_string(d);
			}
		}
		return s;
	}

  private:
	std::map<long, Rat> c_;
};

} // namespace bispectra
