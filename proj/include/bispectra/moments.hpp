#pragma once

#include "bispectra/family.hpp"
#include "bispectra/rational.hpp"
#include "bispectra/report.hpp"
#include "bispectra/weyl.hpp"
#include "bispectra/xpoly.hpp"

#include <stdexcept>
#include <vector>

namespace bispectra {

// Exact moments mu_k = <v_0, x^k> of the first weight functional, normalized
// mu_0 = 1. The recursion is derived from the Pearson operator q'(-D) + x by
// pairing with monomials, not hard-coded per family.
struct MomentSequence {
	long d = 0;
	std::vector<Rat> mu;

	long max_k() const { return (long)mu.size() - 1; }
};

inline MomentSequence moment_sequence(const FamilyConfig &cfg, long K)
{
	if (K < 0)
		throw std::invalid_argument("moment_sequence: K must be >= 0");
	DiffOp P = pearson_operator(cfg);
	// validate shape: x plus a pure-D polynomial
	std::vector<Rat> dcoef; // dcoef[b] = coefficient of D^b
	for (auto &[k, c] : P.terms()) {
		if (k.first == 1 && k.second == 0) {
			if (c != Rat(1))
				throw std::logic_error("moment_sequence: x coefficient must be 1");
			continue;
		}
		if (k.first != 0)
			throw std::logic_error("moment_sequence: unexpected x power in Pearson operator");
		if ((long)dcoef.size() <= k.second)
			dcoef.resize(k.second + 1, Rat(0));
		dcoef[k.second] = c;
	}

	MomentSequence ms;
	ms.d = cfg.d;
	ms.mu.assign(K + 1, Rat(0));
	ms.mu[0] = Rat(1);
	// 0 = <(q'(-D)+x) v0, x^k> = mu_{k+1} + sum_b c_b (-1)^b k!/(k-b)! mu_{k-b}
	for (long k = 0; k + 1 <= K; ++k) {
		Rat acc(0);
		for (long b = 0; b < (long)dcoef.size(); ++b) {
			if (dcoef[b].is_zero() || k - b < 0)
				continue;
			Rat w = dcoef[b] * Rat(falling(k, b)) * ms.mu[k - b];
			acc += (b % 2 == 0) ? w : -w;
		}
		ms.mu[k + 1] = -acc;
	}
	return ms;
}

// Dual functional v_j acting by <v_j, p> = <v_0, D^j p> / j!.
struct LinearFunctional {
	long j = 0;
	const MomentSequence *base = nullptr;
};

inline Rat pair_functional(const LinearFunctional &f, const XPoly &p)
{
	XPoly q = p;
	for (long i = 0; i < f.j; ++i)
		q = q.derivative();
	if (q.degree() > f.base->max_k())
		throw std::invalid_argument("pair_functional: insufficient moments for degree " +
		                            std::to_string(p.degree()));
	Rat acc(0);
	for (auto &[deg, c] : q.coeffs())
		acc += c * f.base->mu[deg];
	return acc / Rat(factorial(f.j));
}

// <v_j, P_n> = delta_{jn} for 0 <= j, n <= N, exactly.
inline CheckReport verify_duality(const FamilyConfig &cfg, long N)
{
	CheckReport rep;
	rep.name = "duality d=" + std::to_string(cfg.d);
	auto table = polynomial_table(cfg, N);
	MomentSequence ms = moment_sequence(cfg, N);
	for (long j = 0; j <= N; ++j) {
		LinearFunctional vj{j, &ms};
		for (long n = 0; n <= N; ++n) {
			Rat got = pair_functional(vj, table[n]);
			Rat want = (j == n) ? Rat(1) : Rat(0);
			rep.count();
			if (got != want)
				rep.fail("<v_" + std::to_string(j) + ", P_" + std::to_string(n) + "> = " +
				         got.str());
		}
	}
	return rep;
}

// The d-orthogonality conditions: for j in 0..d-1 and n,m <= N,
// <v_j, P_n P_m> = 0 when m > n d + j, and nonzero when m = n d + j.
inline CheckReport verify_d_orthogonality(const FamilyConfig &cfg, long N)
{
	CheckReport rep;
	rep.name = "d-orthogonality d=" + std::to_string(cfg.d);
	auto table = polynomial_table(cfg, N);
	MomentSequence ms = moment_sequence(cfg, 2 * N);
	for (long j = 0; j < cfg.d; ++j) {
		LinearFunctional vj{j, &ms};
		for (long n = 0; n <= N; ++n)
			for (long m = 0; m <= N; ++m) {
				if (m < n * cfg.d + j)
					continue;
				Rat val = pair_functional(vj, table[n] * table[m]);
				rep.count();
				if (m == n * cfg.d + j) {
					if (val.is_zero())
						rep.fail("degenerate pairing at j=" + std::to_string(j) +
						         " n=" + std::to_string(n) + " m=" + std::to_string(m));
				} else if (!val.is_zero()) {
					rep.fail("nonzero pairing at j=" + std::to_string(j) + " n=" +
					         std::to_string(n) + " m=" + std::to_string(m) + ": " + val.str());
				}
			}
	}
	return rep;
}

// Band structure of M[j][n] = <v_j, x P_n>: the only nonzero entries are
// M[n+1][n] = 1 and M[j][n] = gamma_{n-j}(n) for j <= n <= j+d.
inline CheckReport verify_dual_recurrence_band(const FamilyConfig &cfg, long N)
{
	CheckReport rep;
	rep.name = "dual band d=" + std::to_string(cfg.d);
	auto table = polynomial_table(cfg, N + 1);
	MomentSequence ms = moment_sequence(cfg, N + 2);
	std::vector<RecurrenceRow> rows;
	for (long n = 0; n <= N; ++n)
		rows.push_back(recurrence_row(cfg, n, table));
	for (long j = 0; j <= N; ++j) {
		LinearFunctional vj{j, &ms};
		for (long n = 0; n <= N; ++n) {
			Rat got = pair_functional(vj, XPoly::monomial(1) * table[n]);
			Rat want(0);
			if (j == n + 1)
				want = Rat(1);
			else if (j <= n && n - j <= cfg.d) {
				auto it = rows[n].gamma.find(n - j);
				if (it != rows[n].gamma.end())
					want = it->second;
			}
			rep.count();
			if (got != want)
				rep.fail("M[" + std::to_string(j) + "][" + std::to_string(n) + "] = " +
				         got.str() + ", expected " + want.str());
		}
	}
	return rep;
}

} // namespace bispectra
