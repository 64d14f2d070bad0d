#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bispectra/family.hpp"

using namespace bispectra;

TEST_CASE("Gould-Hopper polynomials, small cases")
{
	auto g2 = FamilyConfig::gould_hopper(2);
	// P_3 = x^3 - 2
	XPoly p3 = generate_polynomial(g2, 3);
	XPoly want3 = XPoly::monomial(3);
	want3.add(0, Rat(-2));
	CHECK(p3 == want3);
	// P_6 = x^6 - 40 x^3 + 40
	XPoly p6 = generate_polynomial(g2, 6);
	XPoly want6 = XPoly::monomial(6);
	want6.add(3, Rat(-40));
	want6.add(0, Rat(40));
	CHECK(p6 == want6);
	// d=1: probabilists' Hermite He_3 = x^3 - 3x
	auto g1 = FamilyConfig::gould_hopper(1);
	XPoly he3 = generate_polynomial(g1, 3);
	XPoly want1 = XPoly::monomial(3);
	want1.add(1, Rat(-3));
	CHECK(he3 == want1);
}

TEST_CASE("monic of exact degree up to 60")
{
	auto g2 = FamilyConfig::gould_hopper(2);
	for (long n = 0; n <= 60; ++n) {
		XPoly p = generate_polynomial(g2, n);
		CHECK(p.degree() == n);
		CHECK(p.leading() == Rat(1));
	}
}

TEST_CASE("Bochner operator")
{
	CHECK(bochner_operator(FamilyConfig::gould_hopper(2)) ==
	      DiffOp::term(1, 1, 1) - DiffOp::term(0, 3, 1));
	CHECK(bochner_operator(FamilyConfig::gould_hopper(1)) ==
	      DiffOp::term(1, 1, 1) - DiffOp::term(0, 2, 1));
	CHECK(bochner_operator(FamilyConfig::gould_hopper(3)) ==
	      DiffOp::term(1, 1, 1) - DiffOp::term(0, 4, 1));
}

TEST_CASE("recurrence coefficients by basis expansion")
{
	auto g2 = FamilyConfig::gould_hopper(2);
	auto row2 = recurrence_row(g2, 2);
	CHECK(row2.gamma.size() == 1);
	CHECK(row2.gamma.at(2) == Rat(2));
	auto row3 = recurrence_row(g2, 3);
	CHECK(row3.gamma.size() == 1);
	CHECK(row3.gamma.at(2) == Rat(6));
	auto g1 = FamilyConfig::gould_hopper(1);
	auto r1 = recurrence_row(g1, 2);
	CHECK(r1.gamma.size() == 1);
	CHECK(r1.gamma.at(1) == Rat(2));
}

TEST_CASE("Gould-Hopper closed form gamma_d(n) = n(n-1)...(n-d+1)")
{
	for (long d = 1; d <= 4; ++d) {
		auto cfg = FamilyConfig::gould_hopper(d);
		auto table = polynomial_table(cfg, 21);
		for (long n = 0; n <= 20; ++n) {
			auto row = recurrence_row(cfg, n, table);
			for (auto &[j, g] : row.gamma) {
				CHECK(j == d);
				CHECK(g == Rat(falling(n, d)));
			}
			if (n >= d)
				CHECK(row.gamma.count(d) == 1);
		}
	}
}

TEST_CASE("normalized recurrence x p_n = (n+1) p_{n+1} + p_{n-d}, p_n = P_n/n!")
{
	for (long d : {1L, 2L, 3L}) {
		auto cfg = FamilyConfig::gould_hopper(d);
		auto table = polynomial_table(cfg, 16);
		for (long n = 0; n + 1 <= 15; ++n) {
			XPoly lhs = XPoly::monomial(1) * table[n] * Rat(Int(1), factorial(n));
			XPoly rhs = table[n + 1] * Rat(Int(n + 1), factorial(n + 1));
			if (n - d >= 0)
				rhs += table[n - d] * Rat(Int(1), factorial(n - d));
			CHECK(lhs == rhs);
		}
	}
}

TEST_CASE("verify_bispectrality passes")
{
	CHECK(verify_bispectrality(FamilyConfig::gould_hopper(2), 40).passed);
	CHECK(verify_bispectrality(FamilyConfig::gould_hopper(3), 30).passed);
	auto any = verify_bispectrality(FamilyConfig::gould_hopper(4), 0);
	CHECK(any.passed);
}

TEST_CASE("general q config still bispectral")
{
	// q(D) = D^2/2 - D^3/3 (d = 2 with a lower-order term)
	FamilyConfig cfg(2, {Rat(0), Rat(0), Rat(1, 2), Rat(-1, 3)});
	CHECK(!cfg.is_gould_hopper());
	CHECK(verify_bispectrality(cfg, 25).passed);
}
