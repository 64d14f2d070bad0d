#pragma once

#include "bispectra/rational.hpp"
#include "bispectra/report.hpp"
#include "bispectra/weyl.hpp"
#include "bispectra/xpoly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace bispectra {

// Configuration of a polynomial system P_n = e^{q(D)} x^n where
// q(D) = sum_{j=1}^{d+1} a_j D^j with a_{d+1} != 0.
struct FamilyConfig {
	long d = 2;
	std::vector<Rat> a; // a[j] for j = 1..d+1; a[0] unused

	FamilyConfig() = default;
	FamilyConfig(long d_, std::vector<Rat> coeffs) : d(d_), a(std::move(coeffs))
	{
		validate();
	}

	// q(D) = -D^{d+1}/(d+1); Hermite at d = 1
	static FamilyConfig gould_hopper(long d)
	{
		FamilyConfig cfg;
		cfg.d = d;
		cfg.a.assign(d + 2, Rat(0));
		cfg.a[d + 1] = Rat(-1, d + 1);
		cfg.validate();
		return cfg;
	}

	void validate() const
	{
		if (d < 1)
			throw std::invalid_argument("FamilyConfig: d must be >= 1");
		if ((long)a.size() != d + 2)
			throw std::invalid_argument("FamilyConfig: need coefficients a_1..a_{d+1}");
		if (a[d + 1].is_zero())
			throw std::invalid_argument("FamilyConfig: a_{d+1} must be nonzero");
	}

	bool is_gould_hopper() const
	{
		if (a[d + 1] != Rat(-1, d + 1))
			return false;
		for (long j = 1; j <= d; ++j)
			if (!a[j].is_zero())
				return false;
		return true;
	}

	XPoly q() const
	{
		XPoly p;
		for (long j = 1; j <= d + 1; ++j)
			p.add(j, a[j]);
		return p;
	}
	XPoly q_prime() const { return q().derivative(); }
};

// P_n = sum_j q(D)^j x^n / j!; the sum is finite since q(D) lowers degree.
inline XPoly generate_polynomial(const FamilyConfig &cfg, long n)
{
	if (n < 0)
		throw std::invalid_argument("generate_polynomial: n must be >= 0");
	DiffOp q = DiffOp::in_dx(cfg.q());
	XPoly term = XPoly::monomial(n);
	XPoly result = term;
	for (long j = 1; !term.is_zero(); ++j) {
		term = apply(q, term) * Rat(1, j);
		result += term;
	}
	return result;
}

inline std::vector<XPoly> polynomial_table(const FamilyConfig &cfg, long n_max)
{
	std::vector<XPoly> t;
	t.reserve(n_max + 1);
	for (long n = 0; n <= n_max; ++n)
		t.push_back(generate_polynomial(cfg, n));
	return t;
}

// L = q'(D) D + x D; satisfies L P_n = n P_n.
inline DiffOp bochner_operator(const FamilyConfig &cfg)
{
	DiffOp L = compose(DiffOp::in_dx(cfg.q_prime()), DiffOp::dx());
	L += compose(DiffOp::x(), DiffOp::dx());
	return L;
}

// q'(-D) + x; annihilates the first weight functional.
inline DiffOp pearson_operator(const FamilyConfig &cfg)
{
	DiffOp r = DiffOp::x();
	XPoly qp = cfg.q_prime();
	for (auto &[j, c] : qp.coeffs())
		r.add_term(0, j, (j % 2 == 0) ? c : -c);
	return r;
}

// Monic d+2-term recurrence row: x P_n = P_{n+1} + sum_{j=0}^{d} gamma_j(n) P_{n-j}.
struct RecurrenceRow {
	long n = 0;
	std::map<long, Rat> gamma; // offset j -> gamma_j(n), zero entries omitted
};

// Computed by exact basis expansion against the monic family, never read off
// a printed formula: repeatedly eliminate the leading term of x P_n - P_{n+1}.
inline RecurrenceRow recurrence_row(const FamilyConfig &cfg, long n,
                                    const std::vector<XPoly> &table)
{
	if ((long)table.size() < n + 2)
		throw std::invalid_argument("recurrence_row: table too short");
	RecurrenceRow row;
	row.n = n;
	XPoly rem = XPoly::monomial(1) * table[n] - table[n + 1];
	while (!rem.is_zero()) {
		long k = rem.degree();
		Rat c = rem.leading();
		rem -= table[k] * c;
		long offset = n - k;
		if (offset < 0)
			throw std::logic_error("recurrence_row: expansion above P_n");
		row.gamma[offset] = c;
	}
	return row;
}

inline RecurrenceRow recurrence_row(const FamilyConfig &cfg, long n)
{
	return recurrence_row(cfg, n, polynomial_table(cfg, n + 1));
}

// Exact checks, for every n <= n_max:
//   L P_n = n P_n,  D P_n = n P_{n-1},  and the computed d+2-term recurrence
// reproduces x P_n with zero remainder and support within offsets 0..d.
inline CheckReport verify_bispectrality(const FamilyConfig &cfg, long n_max)
{
	CheckReport rep;
	rep.name = "bispectrality d=" + std::to_string(cfg.d);
	auto table = polynomial_table(cfg, n_max + 1);
	DiffOp L = bochner_operator(cfg);
	for (long n = 0; n <= n_max; ++n) {
		const XPoly &P = table[n];
		if (P.degree() != n || P.leading() != Rat(1))
			rep.fail("P_" + std::to_string(n) + " not monic of degree n: " + P.str());
		rep.count();
		XPoly eig = apply(L, P) - P * Rat(n);
		if (!eig.is_zero())
			rep.fail("L P_n != n P_n at n=" + std::to_string(n) + ", residual " + eig.str());
		rep.count();
		XPoly low = apply(DiffOp::dx(), P);
		XPoly expect = (n == 0) ? XPoly() : table[n - 1] * Rat(n);
		if (low != expect)
			rep.fail("D P_n != n P_{n-1} at n=" + std::to_string(n) + ", got " + low.str());
		rep.count();
		RecurrenceRow row = recurrence_row(cfg, n, table);
		XPoly rec = table[n + 1];
		bool offsets_ok = true;
		for (auto &[j, g] : row.gamma) {
			if (j > cfg.d)
				offsets_ok = false;
			if (n - j >= 0)
				rec += table[n - j] * g;
		}
		if (!offsets_ok)
			rep.fail("recurrence offset beyond d at n=" + std::to_string(n));
		XPoly res = XPoly::monomial(1) * P - rec;
		if (!res.is_zero())
			rep.fail("recurrence mismatch at n=" + std::to_string(n) + ": " + res.str());
		if (n >= cfg.d) {
			auto it = row.gamma.find(cfg.d);
			if (it == row.gamma.end() || it->second.is_zero())
				rep.fail("gamma_d(n) vanished at n=" + std::to_string(n));
		}
		rep.count();
	}
	return rep;
}

} // namespace bispectra
