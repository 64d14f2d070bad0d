#include "bispectra/asymptotic.hpp"

#include <stdexcept>
#include <vector>

namespace bispectra {

namespace {

// Laurent polynomial in y, keyed by exponent
using YSeries = std::map<long, Rat>;
// polynomial in u with YSeries coefficients, indexed by u power
using USeries = std::vector<YSeries>;

void yadd(YSeries &a, long e, const Rat &c)
{
	if (c.is_zero())
		return;
	auto it = a.find(e);
	if (it == a.end()) {
		a[e] = c;
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		a.erase(it);
}

USeries umul(const USeries &a, const USeries &b, long ucap)
{
	USeries r(ucap + 1);
	for (long i = 0; i < (long)a.size() && i <= ucap; ++i) {
		if (a[i].empty())
			continue;
		for (long j = 0; j < (long)b.size() && i + j <= ucap; ++j) {
			if (b[j].empty())
				continue;
			for (auto &[ea, ca] : a[i])
				for (auto &[eb, cb] : b[j])
					yadd(r[i + j], ea + eb, ca * cb);
		}
	}
	return r;
}

} // namespace

AsymptoticExpansion asymptotic_expansion(const FamilyConfig &cfg, long s, long order,
                                         int eps)
{
	if (!cfg.is_gould_hopper())
		throw std::invalid_argument(
		    "asymptotic_expansion: only the q = -D^{d+1}/(d+1) family has a rational saddle");
	if (eps != 1 && eps != -1)
		throw std::invalid_argument("asymptotic_expansion: eps must be +1 or -1");
	if (eps == -1 && cfg.d % 2 != 0)
		throw std::invalid_argument("asymptotic_expansion: eps = -1 needs even d");
	if (order < 0)
		throw std::invalid_argument("asymptotic_expansion: order must be >= 0");

	const long d = cfg.d;
	const long ucap = 6 * order; // u powers contributing within the requested depth

	// exponent correction: g(eps*y + u) - g(eps*y) + (d/2)(eps y)^{d-1} u^2
	// has the cubic-and-up part sum_{k=3}^{d+1} r_k u^k y^{d+1-k}
	USeries corr(ucap + 1);
	for (long k = 3; k <= d + 1 && k <= ucap; ++k) {
		Rat c = Rat(-binom(d + 1, k), d + 1);
		if (eps == -1 && (d + 1 - k) % 2 != 0)
			c = -c;
		yadd(corr[k], d + 1 - k, c);
	}

	// E = exp(corr), truncated in u
	USeries E(ucap + 1);
	E[0][0] = Rat(1);
	{
		USeries term(ucap + 1);
		term[0][0] = Rat(1);
		for (long p = 1; 3 * p <= ucap; ++p) {
			term = umul(term, corr, ucap);
			bool any = false;
			for (long i = 0; i <= ucap; ++i)
				for (auto &[e, c] : term[i]) {
					yadd(E[i], e, c * Rat(Int(1), factorial(p)));
					any = true;
				}
			if (!any)
				break;
		}
	}

	// binomial factor (1 + u/(eps y))^{-s-1}
	USeries bin(ucap + 1);
	for (long j = 0; j <= ucap; ++j) {
		Rat c = gen_binom(Rat(-s - 1), j);
		if (eps == -1 && j % 2 != 0)
			c = -c;
		yadd(bin[j], -j, c);
	}

	USeries F = umul(E, bin, ucap);

	// Gaussian reduction: <u^{2m}> = (2m-1)!! / (2a)^m with 2a = d (eps y)^{d-1}
	AsymptoticExpansion out;
	out.d = d;
	out.s = s;
	out.eps = eps;
	out.order = order;
	out.exponent_coeff = Rat(eps * d, d + 1);
	out.power_shift = Rat(-2 * s - 2 - (d - 1), 2);

	YSeries tail;
	for (long p = 0; p <= ucap; p += 2) {
		long m = p / 2;
		Rat mom = Rat(double_factorial_odd(m)) / Rat(d).pow(m);
		if (eps == -1 && (m * (d - 1)) % 2 != 0)
			mom = -mom;
		for (auto &[e, c] : F[p])
			yadd(tail, e - m * (d - 1), c * mom);
	}

	for (auto &[e, c] : tail) {
		if (e > 0 || (-e) % (d + 1) != 0)
			throw std::logic_error("asymptotic_expansion: tail support off the lattice");
		if (e < -(d + 1) * order)
			continue;
		out.tail[e] = c;
	}
	if (out.tail_at(0) != Rat(1))
		throw std::logic_error("asymptotic_expansion: leading coefficient is not 1");
	return out;
}

AsymptoticExpansion asymptotic_expansion(const FamilyConfig &cfg, long s, long order)
{
	return asymptotic_expansion(cfg, s, order, cfg.d % 2 == 0 ? -1 : 1);
}

namespace {

AsymptoticExpansion lower_once(const AsymptoticExpansion &e)
{
	// nu(s-1) = (1/(d y^{d-1})) d/dy nu(s); acting on the prefactor gives
	// T_k(s-1) = T_k(s) + eps*(rho(s) - (d+1)(k-1))/d * T_{k-1}(s)
	AsymptoticExpansion r = e;
	r.s = e.s - 1;
	r.power_shift = e.power_shift + Rat(1);
	r.tail.clear();
	Rat rho = e.power_shift;
	Rat sg(e.eps);
	for (long k = 0; k <= e.order; ++k) {
		long off = -(e.d + 1) * k;
		Rat v = e.tail_at(off);
		if (k >= 1)
			v += sg * (rho - Rat((e.d + 1) * (k - 1))) / Rat(e.d) *
			     e.tail_at(off + e.d + 1);
		if (!v.is_zero())
			r.tail[off] = v;
	}
	return r;
}

} // namespace

AsymptoticExpansion propagate_expansion(const AsymptoticExpansion &e,
                                        PropagateRelation rel)
{
	if (rel == PropagateRelation::lowering)
		return lower_once(e);

	// raising step via x nu(s) = (s+1) nu(s+1) + nu(s-d)
	if (e.s == -1)
		throw std::domain_error("propagate_expansion: raising is singular at s = -1");
	if (e.order < 1)
		throw std::invalid_argument("propagate_expansion: raising needs order >= 1");

	AsymptoticExpansion low = e;
	for (long i = 0; i < e.d; ++i)
		low = lower_once(low);

	AsymptoticExpansion r;
	r.d = e.d;
	r.s = e.s + 1;
	r.eps = e.eps;
	r.order = e.order - 1;
	r.exponent_coeff = e.exponent_coeff;
	r.power_shift = e.power_shift - Rat(1);

	// y^d T(s) - T(s-d) must cancel at order 0; the remainder, shifted one
	// lattice step, is (s+1)/eps times the tail of nu(s+1)
	if (e.tail_at(0) != low.tail_at(0))
		throw std::logic_error("propagate_expansion: leading terms fail to cancel");
	Rat scale = Rat(e.eps) / Rat(e.s + 1);
	Rat lead = (e.tail_at(-(e.d + 1)) - low.tail_at(-(e.d + 1))) * scale;
	if (lead != Rat(1))
		throw std::logic_error("propagate_expansion: raising produced leading " + lead.str());
	for (long k = 0; k <= r.order; ++k) {
		long off = -(e.d + 1) * k;
		Rat v = (e.tail_at(off - (e.d + 1)) - low.tail_at(off - (e.d + 1))) * scale;
		if (!v.is_zero())
			r.tail[off] = v;
	}
	return r;
}

} // namespace bispectra
