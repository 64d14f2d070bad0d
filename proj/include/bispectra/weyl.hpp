#pragma once

#include "bispectra/rational.hpp"
#include "bispectra/xpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bispectra {

// Element of the Weyl algebra in one variable: finite sum of terms
// c * x^a * D^b kept in normal order (all x to the left of all D).
class DiffOp {
  public:
	using Key = std::pair<long, long>; // (x power, D power)

	DiffOp() = default;

	static DiffOp one() { return term(0, 0, Rat(1)); }
	static DiffOp x() { return term(1, 0, Rat(1)); }
	static DiffOp dx() { return term(0, 1, Rat(1)); }

	static DiffOp term(long a, long b, const Rat &c)
	{
		DiffOp r;
		r.add_term(a, b, c);
		return r;
	}

	// polynomial p interpreted as p(x)
	static DiffOp in_x(const XPoly &p)
	{
		DiffOp r;
		for (auto &[d, c] : p.coeffs())
			r.add_term(d, 0, c);
		return r;
	}

	// polynomial p interpreted as p(D)
	static DiffOp in_dx(const XPoly &p)
	{
		DiffOp r;
		for (auto &[d, c] : p.coeffs())
			r.add_term(0, d, c);
		return r;
	}

	const std::map<Key, Rat> &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }

	Rat coeff(long a, long b) const
	{
		auto it = t_.find({a, b});
		return it == t_.end() ? Rat(0) : it->second;
	}

	void add_term(long a, long b, const Rat &c)
	{
		if (a < 0 || b < 0)
			throw std::invalid_argument("DiffOp: negative exponent");
		if (c.is_zero())
			return;
		auto key = Key{a, b};
		auto it = t_.find(key);
		if (it == t_.end()) {
			t_[key] = c;
			return;
		}
		it->second += c;
		if (it->second.is_zero())
			t_.erase(it);
	}

	long max_x_degree() const
	{
		long m = -1;
		for (auto &[k, c] : t_)
			m = std::max(m, k.first);
		return m;
	}

	DiffOp &operator+=(const DiffOp &o)
	{
		for (auto &[k, c] : o.t_)
			add_term(k.first, k.second, c);
		return *this;
	}
	DiffOp &operator-=(const DiffOp &o)
	{
		for (auto &[k, c] : o.t_)
			add_term(k.first, k.second, -c);
		return *this;
	}
	friend DiffOp operator+(DiffOp a, const DiffOp &b) { return a += b; }
	friend DiffOp operator-(DiffOp a, const DiffOp &b) { return a -= b; }
	DiffOp operator-() const
	{
		DiffOp r;
		for (auto &[k, c] : t_)
			r.t_[k] = -c;
		return r;
	}
	DiffOp &operator*=(const Rat &s)
	{
		if (s.is_zero()) {
			t_.clear();
			return *this;
		}
		for (auto &[k, c] : t_)
			c *= s;
		return *this;
	}
	friend DiffOp operator*(DiffOp a, const Rat &s) { return a *= s; }
	friend DiffOp operator*(const Rat &s, DiffOp a) { return a *= s; }

	friend bool operator==(const DiffOp &a, const DiffOp &b) { return a.t_ == b.t_; }
	friend bool operator!=(const DiffOp &a, const DiffOp &b) { return !(a == b); }

	std::string str() const
	{
		if (t_.empty())
			return "0";
		std::string s;
		for (auto &[k, c] : t_) {
			if (!s.empty())
				s += c.sign() < 0 ? " - " : " + ";
			else if (c.sign() < 0)
				s += "-";
			Rat a = c.abs();
			std::string mono;
			if (k.first > 0)
				mono += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
			if (k.second > 0)
				mono += std::string(mono.empty() ? "" : "*") + "D" +
				        (k.second > 1 ? "^" + std::to_string(k.second) : "");
			if (mono.empty())
				s += a.str();
			else if (a == Rat(1))
				s += mono;
			else
				s += a.str() + "*" + mono;
		}
		return s;
	}

  private:
	std::map<Key, Rat> t_;
};

// Normal-ordering product. Uses D^b x^a = sum_k C(b,k) a!/(a-k)! x^(a-k) D^(b-k).
inline DiffOp compose(const DiffOp &A, const DiffOp &B)
{
	DiffOp r;
	for (auto &[ka, ca] : A.terms())
		for (auto &[kb, cb] : B.terms()) {
			long b1 = ka.second, a2 = kb.first;
			long kmax = std::min(b1, a2);
			Rat cc = ca * cb;
			for (long k = 0; k <= kmax; ++k) {
				Rat w = cc * Rat(Int(binom(b1, k) * falling(a2, k)));
				r.add_term(ka.first + a2 - k, b1 + kb.second - k, w);
			}
		}
	return r;
}

inline DiffOp commutator(const DiffOp &A, const DiffOp &B)
{
	return compose(A, B) - compose(B, A);
}

// Exact action on polynomials: x^a D^b x^n = n!/(n-b)! x^(n-b+a).
inline XPoly apply(const DiffOp &A, const XPoly &p)
{
	XPoly r;
	for (auto &[k, c] : A.terms())
		for (auto &[n, pc] : p.coeffs()) {
			if (n < k.second)
				continue;
			r.add(n - k.second + k.first, c * pc * Rat(falling(n, k.second)));
		}
	return r;
}

// Formal adjoint: (x)* = x, (D)* = -D, (AB)* = B* A*.
inline DiffOp formal_adjoint(const DiffOp &A)
{
	DiffOp r;
	for (auto &[k, c] : A.terms()) {
		// (x^a D^b)* = (-D)^b x^a, then normal order
		DiffOp m = compose(DiffOp::term(0, k.second, Rat(1)), DiffOp::term(k.first, 0, Rat(1)));
		Rat s = (k.second % 2 == 0) ? c : -c;
		r += m * s;
	}
	return r;
}

// sigma_q(A) = sum_j ad_{q(D)}^j A / j! for q a polynomial in D with no
// constant term. Terminates because ad_{q(D)} strictly lowers the x degree;
// the inverse is obtained by passing -q.
inline DiffOp ad_exp_conjugate(const XPoly &q_in_dx, const DiffOp &A)
{
	if (!q_in_dx.coeff(0).is_zero())
		throw std::invalid_argument("ad_exp_conjugate: q must have no constant term");
	DiffOp q = DiffOp::in_dx(q_in_dx);
	DiffOp result = A;
	DiffOp cur = A;
	long guard = A.max_x_degree() + 2;
	for (long j = 1; !cur.is_zero(); ++j) {
		cur = commutator(q, cur) * Rat(1, j);
		result += cur;
		if (j > guard)
			throw std::logic_error("ad_exp_conjugate: series failed to terminate");
	}
	return result;
}

} // namespace bispectra
