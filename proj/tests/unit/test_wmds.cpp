#include "cubezeta/congruence.hpp"
#include "cubezeta/wmds.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubezeta;

TEST_SUITE("wmds") {

TEST_CASE("prime power coefficients") {
	for (i64 p : {2, 3, 5, 7}) {
		CHECK(a_pp(p, 2, 2) == p);
		CHECK(a_pp(p, 1, 1) == 0);
		for (unsigned l = 0; l <= 6; ++l) {
			CHECK(a_pp(p, 0, l) == 1);
			CHECK(a_pp(p, l, 0) == 1);
		}
		for (unsigned k = 0; k <= 6; ++k)
			for (unsigned l = 0; l <= 6; ++l)
				CHECK(a_pp(p, k, l) == a_pp(p, l, k));
	}
}

TEST_CASE("square root counts at prime powers through a_pp") {
	for (i64 p : {3, 5, 7})
		for (unsigned k = 0; k <= 8; ++k)
			for (unsigned l = 0; l <= 8; ++l) {
				i64 expected = k < l ? a_pp(p, k, l) + a_pp(p, k, l - 1) : checked_pow(p, l / 2);
				CHECK(sqrt_count(checked_pow(p, k), checked_pow(p, l)) == expected);
			}
}

TEST_CASE("a examples") {
	CHECK(a_coeff(25, 25) == 5);
	CHECK(a_coeff(25, 5) == 0);
	CHECK(a_coeff(5, 3) == 1);
	CHECK(a_coeff(-15, 7 * 11 * 2) == 1);
	CHECK(a_coeff3(25, 5, 5) == 5);
	CHECK(a_coeff3(9, 3, 3) == 3);
	for (i64 D : {5, -3, 45, -20})
		CHECK(a_coeff3(D, 1, 1) == 1);
	CHECK(tilde_A(5, 2) == -1);
	CHECK(tilde_A(17, 2) == 1);
	CHECK(tilde_A(-7, 1) == 1);
}

TEST_CASE("a is multiplicative") {
	for (i64 D = -120; D <= 120; ++D) {
		if (D == 0 || !is_discriminant_residue(D))
			continue;
		for (i64 m = 1; m <= 40; ++m) {
			i64 prod = 1;
			for (auto [p, e] : oracle::trial_factor(m))
				prod *= a_pp(p, valuation(D, p), e);
			CHECK(a_coeff(D, m) == prod);
		}
	}
}

TEST_CASE("a(D, m, n) is jointly multiplicative") {
	for (i64 D1 : {1, 3, 5, 9, 15}) {
		for (i64 D2 : {1, 2, 4, 7, 8}) {
			if (std::gcd(D1, D2) != 1)
				continue;
			for (i64 m1 : {1, 3, 5, 9})
				for (i64 m2 : {1, 2, 4, 7})
					for (i64 n1 : {1, 3, 15})
						for (i64 n2 : {1, 2, 8})
							CHECK(a_coeff3(D1 * D2, m1 * m2, n1 * n2) ==
							      a_coeff3(D1, m1, n1) * a_coeff3(D2, m2, n2));
		}
	}
}

} // TEST_SUITE
