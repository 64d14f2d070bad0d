#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bispectra/weyl.hpp"

#include <random>

using namespace bispectra;

namespace {

DiffOp random_op(std::mt19937 &rng, long max_deg = 3, long max_terms = 4)
{
	std::uniform_int_distribution<long> deg(0, max_deg), cnum(-4, 4), cden(1, 3);
	std::uniform_int_distribution<long> nterms(1, max_terms);
	DiffOp r;
	long k = nterms(rng);
	for (long i = 0; i < k; ++i)
		r.add_term(deg(rng), deg(rng), Rat(cnum(rng), cden(rng)));
	return r;
}

XPoly random_poly(std::mt19937 &rng, long max_deg = 5)
{
	std::uniform_int_distribution<long> deg(0, max_deg), cnum(-5, 5), cden(1, 3);
	XPoly p;
	for (long i = 0; i < 4; ++i)
		p.add(deg(rng), Rat(cnum(rng), cden(rng)));
	return p;
}

} // namespace

TEST_CASE("normal ordering basics")
{
	// D o x = x D + 1
	DiffOp c = compose(DiffOp::dx(), DiffOp::x());
	CHECK(c == DiffOp::term(1, 1, 1) + DiffOp::one());
	// x o D = x D
	CHECK(compose(DiffOp::x(), DiffOp::dx()) == DiffOp::term(1, 1, 1));
	// D^3 o x = x D^3 + 3 D^2
	DiffOp d3x = compose(DiffOp::term(0, 3, 1), DiffOp::x());
	CHECK(d3x == DiffOp::term(1, 3, 1) + DiffOp::term(0, 2, 3));
}

TEST_CASE("commutators")
{
	CHECK(commutator(DiffOp::dx(), DiffOp::x()) == DiffOp::one());
	CHECK(commutator(DiffOp::term(1, 1, 1), DiffOp::x()) == DiffOp::x());
	CHECK(commutator(DiffOp::term(0, 3, 1), DiffOp::x()) == DiffOp::term(0, 2, 3));
}

TEST_CASE("apply")
{
	XPoly x3 = XPoly::monomial(3);
	CHECK(apply(DiffOp::term(1, 1, 1), x3) == x3 * Rat(3));
	// (x D - D^3)(x^3 - 2) = 3x^3 - 6
	DiffOp L = DiffOp::term(1, 1, 1) - DiffOp::term(0, 3, 1);
	XPoly p = XPoly::monomial(3);
	p.add(0, Rat(-2));
	XPoly want = XPoly::monomial(3, Rat(3));
	want.add(0, Rat(-6));
	CHECK(apply(L, p) == want);
	CHECK(apply(DiffOp::dx(), XPoly::one()).is_zero());
}

TEST_CASE("apply is multiplicative over compose")
{
	std::mt19937 rng(12345);
	for (int trial = 0; trial < 40; ++trial) {
		DiffOp A = random_op(rng), B = random_op(rng);
		XPoly p = random_poly(rng);
		CHECK(apply(compose(A, B), p) == apply(A, apply(B, p)));
	}
}

TEST_CASE("compose associativity on random triples")
{
	std::mt19937 rng(777);
	for (int trial = 0; trial < 25; ++trial) {
		DiffOp A = random_op(rng), B = random_op(rng), C = random_op(rng);
		CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
	}
}

TEST_CASE("sigma_q on generators, q = -D^3/3")
{
	XPoly q = XPoly::monomial(3, Rat(-1, 3));
	CHECK(ad_exp_conjugate(q, DiffOp::dx()) == DiffOp::dx());
	// sigma_q(x) = x + q'(D) = x - D^2
	CHECK(ad_exp_conjugate(q, DiffOp::x()) == DiffOp::x() - DiffOp::term(0, 2, 1));
	// sigma_q(x D) = x D - D^3
	CHECK(ad_exp_conjugate(q, DiffOp::term(1, 1, 1)) ==
	      DiffOp::term(1, 1, 1) - DiffOp::term(0, 3, 1));
}

TEST_CASE("sigma_q rejects constant term")
{
	XPoly q = XPoly::monomial(2, Rat(1));
	q.add(0, Rat(1));
	CHECK_THROWS_AS(ad_exp_conjugate(q, DiffOp::x()), std::invalid_argument);
}

TEST_CASE("sigma_q invertibility and homomorphism")
{
	std::mt19937 rng(2024);
	XPoly q;
	q.add(2, Rat(1, 2));
	q.add(3, Rat(-1, 3));
	XPoly mq = -q;
	for (int trial = 0; trial < 20; ++trial) {
		DiffOp A = random_op(rng), B = random_op(rng);
		CHECK(ad_exp_conjugate(mq, ad_exp_conjugate(q, A)) == A);
		CHECK(ad_exp_conjugate(q, commutator(A, B)) ==
		      commutator(ad_exp_conjugate(q, A), ad_exp_conjugate(q, B)));
	}
}

TEST_CASE("formal adjoint")
{
	CHECK(formal_adjoint(DiffOp::dx()) == -DiffOp::dx());
	CHECK(formal_adjoint(DiffOp::x()) == DiffOp::x());
	// (x D)* = -x D - 1
	CHECK(formal_adjoint(DiffOp::term(1, 1, 1)) == -DiffOp::term(1, 1, 1) - DiffOp::one());
	// (x D - D^3)* = -x D - 1 + D^3
	DiffOp L = DiffOp::term(1, 1, 1) - DiffOp::term(0, 3, 1);
	CHECK(formal_adjoint(L) == -DiffOp::term(1, 1, 1) - DiffOp::one() + DiffOp::term(0, 3, 1));
}

TEST_CASE("adjoint is an involutive anti-homomorphism")
{
	std::mt19937 rng(99);
	for (int trial = 0; trial < 25; ++trial) {
		DiffOp A = random_op(rng), B = random_op(rng);
		CHECK(formal_adjoint(formal_adjoint(A)) == A);
		CHECK(formal_adjoint(compose(A, B)) ==
		      compose(formal_adjoint(B), formal_adjoint(A)));
	}
}
