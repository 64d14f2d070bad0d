#pragma once

#include "bispectra/family.hpp"
#include "bispectra/report.hpp"

#include <complex>
#include <string>
#include <vector>

namespace bispectra {

using Cplx = std::complex<double>;

// Contour for nu(s,x): two straight rays from a junction point on the
// positive real axis out to infinity at angles +-2*pi/(d+1), oriented from
// the upper ray through the junction to the lower ray. The junction offset
// keeps the path away from z = 0 (mandatory when Re s + 1 > 0).
struct ContourSpec {
	long d = 2;
	double ray_angle = 0;  // 2*pi/(d+1)
	double radius_cap = 0; // 0 = choose from the decay estimate
	long node_count = 64;  // initial panels per ray; doubled adaptively
	double offset = 0.5;   // junction point on the positive real axis
	double tol = 1e-10;    // absolute tolerance target
	long max_doublings = 8;

	static ContourSpec for_family(long d);
};

struct NuValue {
	Cplx raw;        // the contour integral itself
	Cplx normalized; // raw / (2 pi i); equals Ai(x) at d=2, s=-1
	double err = 0;  // quadrature error estimate
	long panels = 0; // panels per ray actually used
	double radius = 0;
};

// integral over C of z^{-s-1} exp(q(z) + x z) dz for the Gould-Hopper q
NuValue eval_nu(const FamilyConfig &cfg, Cplx s, Cplx x, const ContourSpec &quad);

struct ResidualEntry {
	std::string name;
	double residual = 0;
	double scale = 1;
};

struct ResidualReport {
	bool passed = true;
	std::vector<ResidualEntry> entries;
};

// numeric residuals of the ODE, the recurrence and the lowering identity at
// one point (s, x); rel_tol is measured against the scale of each identity
ResidualReport residual_checks(const FamilyConfig &cfg, Cplx s, Cplx x,
                               const ContourSpec &quad, double rel_tol);

// exact check of P_n = n! [z^n] exp(q(z) + x z) against generate_polynomial
CheckReport polynomial_residue_check(const FamilyConfig &cfg, long n);

// reference Ai(x) by Maclaurin series, for cross-checking the quadrature
double airy_ai_series(double x);
double airy_ai_prime_series(double x);

} // namespace bispectra
