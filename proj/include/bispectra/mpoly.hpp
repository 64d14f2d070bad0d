#pragma once

#include "bispectra/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bispectra {

// Monomial in t_1, t_2, ...: exps[i] is the exponent of t_{i+1}.
// Canonical form has no trailing zeros. Weight grading: deg t_k = k.
using Mono = std::vector<long>;

inline Mono mono_canon(Mono m)
{
	while (!m.empty() && m.back() == 0)
		m.pop_back();
	return m;
}

inline long mono_weight(const Mono &m)
{
	long w = 0;
	for (size_t i = 0; i < m.size(); ++i)
		w += (long)(i + 1) * m[i];
	return w;
}

inline Mono mono_t(long k, long e = 1)
{
	Mono m(k, 0);
	m[k - 1] = e;
	return m;
}

inline std::string mono_str(const Mono &m)
{
	if (m.empty())
		return "1";
	std::string s;
	for (size_t i = 0; i < m.size(); ++i) {
		if (m[i] == 0)
			continue;
		if (!s.empty())
			s += "*";
		s += "t" + std::to_string(i + 1);
		if (m[i] > 1)
			s += "^" + std::to_string(m[i]);
	}
	return s;
}

// Multivariate polynomial in t_1, t_2, ... truncated by total weight.
class MPoly {
  public:
	MPoly() = default;
	explicit MPoly(const Rat &c)
	{
		if (!c.is_zero())
			t_[Mono{}] = c;
	}
	static MPoly one() { return MPoly(Rat(1)); }
	static MPoly var(long k) // t_k
	{
		MPoly p;
		p.t_[mono_t(k)] = Rat(1);
		return p;
	}

	const std::map<Mono, Rat> &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }

	Rat coeff(const Mono &m) const
	{
		auto it = t_.find(mono_canon(m));
		return it == t_.end() ? Rat(0) : it->second;
	}
	Rat constant_term() const { return coeff(Mono{}); }

	void add(const Mono &m, const Rat &c)
	{
		if (c.is_zero())
			return;
		Mono key = mono_canon(m);
		auto it = t_.find(key);
		if (it == t_.end()) {
			t_[key] = c;
			return;
		}
		it->second += c;
		if (it->second.is_zero())
			t_.erase(it);
	}

	long max_weight() const
	{
		long w = 0;
		for (auto &[m, c] : t_)
			w = std::max(w, mono_weight(m));
		return w;
	}

	MPoly &operator+=(const MPoly &o)
	{
		for (auto &[m, c] : o.t_)
			add(m, c);
		return *this;
	}
	MPoly &operator-=(const MPoly &o)
	{
		for (auto &[m, c] : o.t_)
			add(m, -c);
		return *this;
	}
	friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
	friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
	MPoly operator-() const
	{
		MPoly r;
		for (auto &[m, c] : t_)
			r.t_[m] = -c;
		return r;
	}
	MPoly &operator*=(const Rat &s)
	{
		if (s.is_zero()) {
			t_.clear();
			return *this;
		}
		for (auto &[m, c] : t_)
			c *= s;
		return *this;
	}
	friend MPoly operator*(MPoly a, const Rat &s) { return a *= s; }
	friend MPoly operator*(const Rat &s, MPoly a) { return a *= s; }
	friend bool operator==(const MPoly &a, const MPoly &b) { return a.t_ == b.t_; }
	friend bool operator!=(const MPoly &a, const MPoly &b) { return !(a == b); }

	// product truncated to total weight <= cap
	static MPoly mul(const MPoly &a, const MPoly &b, long cap)
	{
		MPoly r;
		for (auto &[ma, ca] : a.t_) {
			long wa = mono_weight(ma);
			if (wa > cap)
				continue;
			for (auto &[mb, cb] : b.t_) {
				if (wa + mono_weight(mb) > cap)
					continue;
				Mono m(std::max(ma.size(), mb.size()), 0);
				for (size_t i = 0; i < ma.size(); ++i)
					m[i] += ma[i];
				for (size_t i = 0; i < mb.size(); ++i)
					m[i] += mb[i];
				r.add(m, ca * cb);
			}
		}
		return r;
	}

	MPoly truncated(long cap) const
	{
		MPoly r;
		for (auto &[m, c] : t_)
			if (mono_weight(m) <= cap)
				r.t_[m] = c;
		return r;
	}

	MPoly weight_component(long w) const
	{
		MPoly r;
		for (auto &[m, c] : t_)
			if (mono_weight(m) == w)
				r.t_[m] = c;
		return r;
	}

	MPoly derivative(long k) const // d/dt_k
	{
		MPoly r;
		for (auto &[m, c] : t_) {
			if ((long)m.size() < k || m[k - 1] == 0)
				continue;
			Mono n = m;
			long e = n[k - 1];
			n[k - 1] -= 1;
			r.add(n, c * Rat(e));
		}
		return r;
	}

	MPoly mul_var(long k, long cap) const // multiply by t_k
	{
		MPoly r;
		for (auto &[m, c] : t_) {
			if (mono_weight(m) + k > cap)
				continue;
			Mono n = m;
			if ((long)n.size() < k)
				n.resize(k, 0);
			n[k - 1] += 1;
			r.add(n, c);
		}
		return r;
	}

	// exp of a series with zero constant term, truncated
	static MPoly exp(const MPoly &a, long cap)
	{
		if (!a.constant_term().is_zero())
			throw std::invalid_argument("MPoly::exp: nonzero constant term");
		MPoly r = MPoly::one(), term = MPoly::one();
		for (long j = 1; j <= cap; ++j) {
			term = mul(term, a, cap) * Rat(1, j);
			if (term.is_zero())
				break;
			r += term;
		}
		return r;
	}

	// log of a series with constant term 1, truncated
	static MPoly log(const MPoly &a, long cap)
	{
		if (a.constant_term() != Rat(1))
			throw std::invalid_argument("MPoly::log: constant term must be 1");
		MPoly u = a;
		u.add(Mono{}, Rat(-1));
		MPoly r, term = MPoly::one();
		for (long j = 1; j <= cap; ++j) {
			term = mul(term, u, cap);
			if (term.is_zero())
				break;
			r += term * Rat((j % 2 == 1) ? 1 : -1, j);
		}
		return r;
	}

	std::string str() const
	{
		if (t_.empty())
			return "0";
		std::string s;
		for (auto &[m, c] : t_) {
			if (!s.empty())
				s += c.sign() < 0 ? " - " : " + ";
			else if (c.sign() < 0)
				s += "-";
			Rat a = c.abs();
			if (m.empty())
				s += a.str();
			else if (a == Rat(1))
				s += mono_str(m);
			else
				s += a.str() + "*" + mono_str(m);
		}
		return s;
	}

  private:
	std::map<Mono, Rat> t_;
};

} // namespace bispectra
