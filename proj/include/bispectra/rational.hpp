#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bispectra {

using Int = mpz_class;

// Exact rational scalar. Always stored reduced with positive denominator.
class Rat {
  public:
	Rat() : v_(0) {}
	Rat(long n) : v_(n) {}
	Rat(int n) : v_(n) {}
	Rat(const Int &n) : v_(n) {}
	Rat(long n, long d) : v_(n, d) { canon(); }
	Rat(const Int &n, const Int &d) : v_(n, d) { canon(); }
	explicit Rat(const mpq_class &q) : v_(q) { v_.canonicalize(); }

	// parses "p" or "p/q"
	static Rat parse(const std::string &s)
	{
		auto pos = s.find('/');
		if (pos == std::string::npos)
			return Rat(Int(s));
		return Rat(Int(s.substr(0, pos)), Int(s.substr(pos + 1)));
	}

	const mpq_class &raw() const { return v_; }
	Int num() const { return v_.get_num(); }
	Int den() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	int sign() const { return sgn(v_); }
	bool is_integer() const { return v_.get_den() == 1; }

	Rat operator-() const { return Rat(mpq_class(-v_)); }
	Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
	Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
	Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
	Rat &operator/=(const Rat &o)
	{
		if (o.is_zero())
			throw std::domain_error("Rat: division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rat operator+(Rat a, const Rat &b) { return a += b; }
	friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
	friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
	friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

	friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rat &a, const Rat &b) { return a.v_ != b.v_; }
	friend bool operator<(const Rat &a, const Rat &b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rat &a, const Rat &b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rat &a, const Rat &b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rat &a, const Rat &b) { return a.v_ >= b.v_; }

	Rat inv() const
	{
		if (is_zero())
			throw std::domain_error("Rat: inverse of zero");
		return Rat(Int(v_.get_den()), Int(v_.get_num()));
	}

	Rat pow(long e) const
	{
		if (e < 0)
			return inv().pow(-e);
		Rat r(1), b = *this;
		while (e) {
			if (e & 1)
				r *= b;
			b *= b;
			e >>= 1;
		}
		return r;
	}

	Rat abs() const { return sign() < 0 ? -*this : *this; }

	double to_double() const { return v_.get_d(); }

	std::string str() const
	{
		if (v_.get_den() == 1)
			return v_.get_num().get_str();
		return v_.get_num().get_str() + "/" + v_.get_den().get_str();
	}
	std::string num_str() const { return v_.get_num().get_str(); }
	std::string den_str() const { return v_.get_den().get_str(); }

  private:
	void canon()
	{
		if (v_.get_den() == 0)
			throw std::domain_error("Rat: zero denominator");
		v_.canonicalize();
	}

	mpq_class v_;
};

inline Int factorial(long n)
{
	Int r = 1;
	for (long i = 2; i <= n; ++i)
		r *= i;
	return r;
}

// n (n-1) ... (n-k+1), k >= 0
inline Int falling(long n, long k)
{
	Int r = 1;
	for (long i = 0; i < k; ++i)
		r *= (n - i);
	return r;
}

inline Int binom(long n, long k)
{
	if (k < 0 || k > n)
		return 0;
	Int r = falling(n, k);
	r /= factorial(k);
	return r;
}

// generalized binomial C(alpha, k) for rational alpha
inline Rat gen_binom(const Rat &alpha, long k)
{
	if (k < 0)
		return Rat(0);
	Rat r(1);
	for (long i = 0; i < k; ++i)
		r *= (alpha - Rat(i));
	return r / Rat(factorial(k));
}

// (2m-1)!! with (-1)!! = 1
inline Int double_factorial_odd(long m)
{
	Int r = 1;
	for (long i = 1; i <= m; ++i)
		r *= (2 * i - 1);
	return r;
}

} // namespace bispectra
