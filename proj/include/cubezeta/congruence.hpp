#pragma once

// Integer arithmetic underlying every count in the library: factorization,
// square decomposition of discriminants, the number A(d, a) of square roots
// of d modulo a, the quadratic character of Q(sqrt(D)), and Siegel's
// p-local generating series.

#include "cubezeta/arith.hpp"
#include "cubezeta/local_series.hpp"

#include <utility>
#include <vector>

namespace cubezeta {

struct PrimePower {
	i64 p;
	unsigned e;
	bool operator==(const PrimePower&) const = default;
};

struct Factorization {
	int sign = 1;
	std::vector<PrimePower> primes; // strictly increasing p, e >= 1

	i64 value() const;
	unsigned exponent_of(i64 p) const;
	bool operator==(const Factorization&) const = default;
};

// Primes below a fixed limit, used to speed up repeated factorization.
class PrimeTable {
public:
	explicit PrimeTable(i64 limit);
	const std::vector<i64>& primes() const { return primes_; }
	i64 limit() const { return limit_; }
	bool is_prime(i64 n) const;

private:
	i64 limit_;
	std::vector<i64> primes_;
	std::vector<bool> composite_;
};

// Trial division. Throws std::domain_error for 0 and std::range_error for
// inputs whose magnitude exceeds 2^63 - 1.
Factorization factorize(i64 n);
Factorization factorize(i64 n, const PrimeTable& table);

bool is_prime(i64 n);

struct SquarefreeSplit {
	i64 D0; // signed squarefree part
	i64 D1; // positive, D = D0 * D1^2
	bool operator==(const SquarefreeSplit&) const = default;
};

SquarefreeSplit squarefree_split(i64 D);

// Discriminant of the maximal order of Q(sqrt(D)); 1 when D is a perfect
// square. Throws std::domain_error unless D is nonzero and 0 or 1 mod 4.
i64 fundamental_discriminant(i64 D);

struct DiscriminantData {
	i64 D;
	i64 D0;
	i64 D1;
	i64 dstar;
	// alpha with p^{2 alpha} exactly dividing D / dstar, for primes p | D / dstar.
	std::vector<std::pair<i64, unsigned>> alpha_map;

	unsigned alpha(i64 p) const;
};

DiscriminantData discriminant_data(i64 D);

// A(d, p^l) = #{x mod p^l : x^2 = d mod p^l} from the valuation and Hensel
// case analysis.
i64 sqrt_count_prime_power(i64 d, i64 p, unsigned l);

// A(d, a) for a != 0, multiplicative over the factorization of |a|.
i64 sqrt_count(i64 d, i64 a);

// A(d, a) by running over all residues; O(|a|).
i64 sqrt_count_direct(i64 d, i64 a);

// Kronecker symbol (a / n) for arbitrary integers.
int kronecker(i64 a, i64 n);

// Quadratic character of Q(sqrt(D)) evaluated at n >= 1.
int chi(i64 D, i64 n);

// Largest divisor of m coprime to the squarefree part of D.
i64 hat(i64 m, i64 D);

i64 sigma1(i64 n);

struct SiegelReport {
	i64 d;
	i64 p;
	unsigned alpha;
	int chi_p;
	int truncation;
	LocalSeries lhs;        // from direct counts A(d, p^l)
	LocalSeries rhs;        // closed form
	std::vector<int> mismatched_exponents;
	bool match() const { return mismatched_exponents.empty(); }
};

// Forms both sides of Siegel's identity for the p-local factor of
// sum_a A(d, a) a^{-s} as series in q = p^{-s} and compares them up to
// q^truncation. Requires d to be a nonzero discriminant (0 or 1 mod 4) and
// truncation >= v_p(d) + 4.
SiegelReport siegel_factor_check(i64 d, i64 p, int truncation);

} // namespace cubezeta
