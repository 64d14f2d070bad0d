#include "bispectra/second_kind.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bispectra {

namespace {

constexpr double kPi = std::numbers::pi;

// 8-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGlx[8] = {-0.9602898564975363, -0.7966664774136267,
                            -0.5255324099163290, -0.1834346424956498,
                            0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGlw[8] = {0.1012285362903763, 0.2223810344533745,
                            0.3137066458778873, 0.3626837833783620,
                            0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

struct Integrand {
	long d;
	Cplx s, x;
	Cplx extra_z_power; // additional integer power of z (for derivatives)

	Cplx operator()(Cplx z) const
	{
		Cplx e = -std::pow(z, (double)(d + 1)) / (double)(d + 1) + x * z;
		Cplx p = (-s - 1.0 + extra_z_power) * std::log(z);
		return std::exp(e + p);
	}
};

// composite Gauss-Legendre along the segment from a to b
Cplx integrate_segment(const Integrand &f, Cplx a, Cplx b, long panels)
{
	Cplx acc = 0;
	Cplx dir = (b - a) / (double)panels;
	for (long p = 0; p < panels; ++p) {
		Cplx mid = a + dir * (p + 0.5);
		for (int g = 0; g < 8; ++g)
			acc += kGlw[g] * f(mid + dir * (0.5 * kGlx[g]));
	}
	return acc * dir * 0.5;
}

double choose_radius(long d, Cplx s, Cplx x)
{
	// want R^{d+1}/(2(d+1)) to dominate |x| R + (|s|+1) log R plus 46 digits
	double R = std::pow(2.0 * (d + 1) * 46.0, 1.0 / (d + 1)) + 1.0;
	for (int it = 0; it < 12; ++it) {
		double need = 2.0 * (d + 1) *
		              (46.0 + std::abs(x) * R + (std::abs(s) + 2.0) * std::log(1.0 + R));
		R = std::max(2.0, std::pow(need, 1.0 / (d + 1)));
	}
	return R;
}

NuValue eval_raw(long d, Cplx s, Cplx x, Cplx extra, const ContourSpec &quad)
{
	if (d < 2)
		throw std::invalid_argument(
		    "eval_nu: rays at +-2*pi/(d+1) degenerate for d < 2; quadrature needs d >= 2");
	if (s.real() + 1.0 + extra.real() > 0 && quad.offset <= 0)
		throw std::invalid_argument(
		    "eval_nu: contour passes through z = 0 while s+1 > 0; supply a positive offset");

	double alpha = quad.ray_angle > 0 ? quad.ray_angle : 2.0 * kPi / (d + 1);
	double R = quad.radius_cap > 0 ? quad.radius_cap : choose_radius(d, s, x);
	double p = std::max(quad.offset, 0.0);

	Integrand f{d, s, x, extra};
	Cplx jun(p, 0.0);
	Cplx up = jun + std::polar(R, alpha);
	Cplx dn = jun + std::polar(R, -alpha);

	auto whole = [&](long panels) {
		// from the upper infinity in, through the junction, out to the lower
		return integrate_segment(f, up, jun, panels) + integrate_segment(f, jun, dn, panels);
	};

	long n = std::max<long>(8, quad.node_count);
	Cplx prev = whole(n);
	double err = INFINITY;
	for (long k = 0; k < quad.max_doublings; ++k) {
		n *= 2;
		Cplx cur = whole(n);
		err = std::abs(cur - prev);
		prev = cur;
		if (err <= quad.tol)
			break;
	}
	if (!(err <= quad.tol * 100))
		throw std::runtime_error("eval_nu: quadrature failed to converge, estimate " +
		                         std::to_string(err));
	NuValue v;
	v.raw = prev;
	v.normalized = prev / (Cplx(0.0, 2.0 * kPi));
	v.err = err;
	v.panels = n;
	v.radius = R;
	return v;
}

} // namespace

ContourSpec ContourSpec::for_family(long d)
{
	ContourSpec c;
	c.d = d;
	c.ray_angle = 2.0 * kPi / (d + 1);
	return c;
}

NuValue eval_nu(const FamilyConfig &cfg, Cplx s, Cplx x, const ContourSpec &quad)
{
	if (!cfg.is_gould_hopper())
		throw std::invalid_argument("eval_nu: quadrature implemented for the Gould-Hopper q");
	return eval_raw(cfg.d, s, x, Cplx(0), quad);
}

ResidualReport residual_checks(const FamilyConfig &cfg, Cplx s, Cplx x,
                               const ContourSpec &quad, double rel_tol)
{
	if (!cfg.is_gould_hopper())
		throw std::invalid_argument("residual_checks: Gould-Hopper only");
	long d = cfg.d;
	ResidualReport rep;

	auto nu = [&](Cplx ss) { return eval_raw(d, ss, x, Cplx(0), quad).raw; };

	// derivatives insert powers of z under the integral
	Cplx nu_s = nu(s);
	Cplx dnu = eval_raw(d, s, x, Cplx(1), quad).raw;          // d/dx
	Cplx dnu_top = eval_raw(d, s, x, Cplx(d + 1), quad).raw;  // (d/dx)^{d+1}

	{
		// -nu^{(d+1)} + x nu' - s nu
		Cplx r = -dnu_top + x * dnu - s * nu_s;
		double scale = std::max({std::abs(dnu_top), std::abs(x * dnu), std::abs(s * nu_s),
		                         std::abs(nu_s), 1e-300});
		rep.entries.push_back({"ode", std::abs(r), scale});
	}
	{
		// x nu(s) = (s+1) nu(s+1) + nu(s-d)
		Cplx up = nu(s + 1.0), dnn = nu(s - (double)d);
		Cplx r = x * nu_s - (s + 1.0) * up - dnn;
		double scale =
		    std::max({std::abs(x * nu_s), std::abs((s + 1.0) * up), std::abs(dnn), 1e-300});
		rep.entries.push_back({"recurrence", std::abs(r), scale});
	}
	{
		// nu'(s) = nu(s-1)
		Cplx low = nu(s - 1.0);
		Cplx r = dnu - low;
		double scale = std::max({std::abs(dnu), std::abs(low), 1e-300});
		rep.entries.push_back({"lowering", std::abs(r), scale});
	}
	for (auto &e : rep.entries)
		if (e.residual > rel_tol * e.scale)
			rep.passed = false;
	return rep;
}

CheckReport polynomial_residue_check(const FamilyConfig &cfg, long n)
{
	CheckReport rep;
	rep.name = "residue n=" + std::to_string(n);
	// series coefficients of exp(q(z) + x z) in z, each an XPoly in x;
	// via E' = A' E, i.e. k E_k = sum_j j A_j E_{k-j}
	std::vector<XPoly> A(n + 2);
	XPoly q = cfg.q();
	for (auto &[j, c] : q.coeffs())
		if (j <= n + 1)
			A[j].add(0, c);
	if (n >= 1)
		A[1].add(1, Rat(1)); // the x z term
	std::vector<XPoly> E(n + 1);
	E[0] = XPoly::one();
	for (long k = 1; k <= n; ++k) {
		XPoly acc;
		for (long j = 1; j <= k; ++j)
			if (!A[j].is_zero())
				acc += A[j] * E[k - j] * Rat(j);
		E[k] = acc * Rat(1, k);
	}
	XPoly via_residue = E[n] * Rat(factorial(n));
	XPoly direct = generate_polynomial(cfg, n);
	rep.count();
	if (via_residue != direct)
		rep.fail("residue " + via_residue.str() + " != " + direct.str());
	return rep;
}

double airy_ai_series(double x)
{
	// Ai = c1 f - c2 g with f, g the two Maclaurin solutions of w'' = x w
	double c1 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
	double c2 = 1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
	double f = 1, g = x, tf = 1, tg = x;
	for (int k = 1; k <= 40; ++k) {
		tf *= x * x * x / ((3.0 * k) * (3.0 * k - 1.0));
		tg *= x * x * x / ((3.0 * k) * (3.0 * k + 1.0));
		f += tf;
		g += tg;
	}
	return c1 * f - c2 * g;
}

double airy_ai_prime_series(double x)
{
	double c1 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
	double c2 = 1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
	// term-by-term derivatives of the two Maclaurin solutions
	double fp = 0, gp = 1;
	double num_f = 1, num_g = 1;
	for (int k = 1; k <= 40; ++k) {
		num_f *= 1.0 / ((3.0 * k) * (3.0 * k - 1.0));
		fp += num_f * 3.0 * k * std::pow(x, 3.0 * k - 1.0);
		num_g *= 1.0 / ((3.0 * k) * (3.0 * k + 1.0));
		gp += num_g * (3.0 * k + 1.0) * std::pow(x, 3.0 * k);
	}
	return c1 * fp - c2 * gp;
}

} // namespace bispectra
