#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bispectra/moments.hpp"

using namespace bispectra;

TEST_CASE("Pearson operators")
{
	CHECK(pearson_operator(FamilyConfig::gould_hopper(2)) ==
	      DiffOp::x() - DiffOp::term(0, 2, 1));
	CHECK(pearson_operator(FamilyConfig::gould_hopper(3)) ==
	      DiffOp::x() + DiffOp::term(0, 3, 1));
	// d=1, q = -D^2/2: q'(-D) + x = x + D, the Gaussian weight equation
	CHECK(pearson_operator(FamilyConfig::gould_hopper(1)) == DiffOp::x() + DiffOp::dx());
}

TEST_CASE("moment sequences")
{
	auto m2 = moment_sequence(FamilyConfig::gould_hopper(2), 6);
	std::vector<long> want2 = {1, 0, 0, 2, 0, 0, 40};
	for (long k = 0; k <= 6; ++k)
		CHECK(m2.mu[k] == Rat(want2[k]));

	auto m1 = moment_sequence(FamilyConfig::gould_hopper(1), 6);
	std::vector<long> want1 = {1, 0, 1, 0, 3, 0, 15};
	for (long k = 0; k <= 6; ++k)
		CHECK(m1.mu[k] == Rat(want1[k]));

	auto m0 = moment_sequence(FamilyConfig::gould_hopper(3), 0);
	CHECK(m0.mu.size() == 1);
	CHECK(m0.mu[0] == Rat(1));
}

TEST_CASE("moment recursion matches Gould-Hopper closed form")
{
	for (long d : {1L, 2L, 3L, 4L}) {
		auto ms = moment_sequence(FamilyConfig::gould_hopper(d), 30);
		for (long k = 0; k + 1 <= 30; ++k) {
			Rat want = (k - d >= 0) ? Rat(falling(k, d)) * ms.mu[k - d] : Rat(0);
			CHECK(ms.mu[k + 1] == want);
		}
	}
}

TEST_CASE("pair_functional basics")
{
	auto cfg = FamilyConfig::gould_hopper(2);
	auto ms = moment_sequence(cfg, 8);
	LinearFunctional v0{0, &ms}, v1{1, &ms};
	CHECK(pair_functional(v0, XPoly::one()) == Rat(1));
	CHECK(pair_functional(v0, generate_polynomial(cfg, 6)) == Rat(0));
	CHECK(pair_functional(v1, generate_polynomial(cfg, 1)) == Rat(1));
	// <v_0, P_1 P_2> = mu_3 = 2
	CHECK(pair_functional(v0, generate_polynomial(cfg, 1) * generate_polynomial(cfg, 2)) ==
	      Rat(2));
	CHECK_THROWS_AS(pair_functional(v0, XPoly::monomial(9)), std::invalid_argument);
}

TEST_CASE("adjoint identity: <v0, L P_n> = 0 for n >= 1")
{
	for (long d : {1L, 2L, 3L}) {
		auto cfg = FamilyConfig::gould_hopper(d);
		auto ms = moment_sequence(cfg, 20);
		LinearFunctional v0{0, &ms};
		DiffOp L = bochner_operator(cfg);
		for (long n = 1; n <= 20; ++n)
			CHECK(pair_functional(v0, apply(L, generate_polynomial(cfg, n))).is_zero());
	}
}

TEST_CASE("binomial lowering identity <v_j, P_n> = C(n,j) <v_0, P_{n-j}>")
{
	auto cfg = FamilyConfig::gould_hopper(3);
	auto ms = moment_sequence(cfg, 15);
	for (long j = 0; j <= 5; ++j) {
		LinearFunctional vj{j, &ms}, v0{0, &ms};
		for (long n = j; n <= 15; ++n) {
			Rat lhs = pair_functional(vj, generate_polynomial(cfg, n));
			Rat rhs = Rat(binom(n, j)) * pair_functional(v0, generate_polynomial(cfg, n - j));
			CHECK(lhs == rhs);
		}
	}
}

TEST_CASE("duality and d-orthogonality reports")
{
	CHECK(verify_duality(FamilyConfig::gould_hopper(2), 20).passed);
	CHECK(verify_duality(FamilyConfig::gould_hopper(3), 15).passed);
	CHECK(verify_duality(FamilyConfig::gould_hopper(1), 10).passed);
	CHECK(verify_d_orthogonality(FamilyConfig::gould_hopper(2), 16).passed);
	CHECK(verify_d_orthogonality(FamilyConfig::gould_hopper(1), 12).passed);
	CHECK(verify_d_orthogonality(FamilyConfig::gould_hopper(3), 12).passed);
}

TEST_CASE("duality for a non-Gould-Hopper config")
{
	FamilyConfig cfg(2, {Rat(0), Rat(1, 4), Rat(0), Rat(-1, 3)});
	CHECK(verify_duality(cfg, 12).passed);
	CHECK(verify_d_orthogonality(cfg, 10).passed);
}

TEST_CASE("dual recurrence band structure")
{
	CHECK(verify_dual_recurrence_band(FamilyConfig::gould_hopper(2), 12).passed);
	CHECK(verify_dual_recurrence_band(FamilyConfig::gould_hopper(3), 10).passed);
	FamilyConfig cfg(2, {Rat(0), Rat(1, 4), Rat(0), Rat(-1, 3)});
	CHECK(verify_dual_recurrence_band(cfg, 10).passed);
}
