#pragma once

// Oriented quadratic rings R(D), oriented ideals with cyclic quotient, and
// the map from cubes to pairs of such ideals.

#include "cubezeta/cube.hpp"

#include <vector>

namespace cubezeta {

// The ring Z[tau_D] of discriminant D, with tau_D^2 = D/4 (D even) or
// tau_D^2 = (D - 1)/4 + tau_D (D odd).
struct QuadraticRing {
	i64 D = 0;
	bool operator==(const QuadraticRing&) const = default;
};

// The ideal <a, (b - D_parity)/2 + tau> of norm |a|, oriented by the sign
// of a; b is reduced to [0, 2|a|) with b^2 = D mod 4|a|.
struct OrientedIdealClass {
	i64 a = 0;
	i64 b = 0;
	bool operator==(const OrientedIdealClass&) const = default;
	auto operator<=>(const OrientedIdealClass&) const = default;
};

struct IdealClassPair {
	i64 D = 0;
	OrientedIdealClass first;
	OrientedIdealClass second;
	bool operator==(const IdealClassPair&) const = default;
};

struct RingIdeal {
	QuadraticRing ring;
	OrientedIdealClass ideal;
};

// Throws std::domain_error when a = 0 or the discriminant vanishes.
RingIdeal ring_ideal_from_form(const BinaryQuadraticForm& form);

// (a, b, (b^2 - D) / 4a). Throws std::domain_error if the class is invalid.
BinaryQuadraticForm form_from_class(const OrientedIdealClass& cls, i64 D);

bool is_valid_class(const OrientedIdealClass& cls, i64 D);

// Applies ring_ideal_from_form to the first two forms of the cube.
IdealClassPair pair_from_cube(const Cube& cube);

// sigma_1(gcd(D1, |a1|, |a2|)).
i64 fiber_count(i64 D, i64 a1, i64 a2);

// Number of cube orbits mapping to the given pair, from reduction to the
// slice c = 0, a > 0.
i64 exact_fiber_count(const IdealClassPair& pair);

// Every pair with |a_i| = a_i (both orientations), ordered by (a1, b1, a2, b2).
std::vector<IdealClassPair> enumerate_pairs(i64 D, i64 a1, i64 a2);

struct FiberSumReport {
	i64 D = 0, a1 = 0, a2 = 0;
	i64 pairs = 0;
	i64 weighted_sum = 0;     // sum of fiber_count over pairs
	i64 exact_sum = 0;        // sum of exact_fiber_count over pairs
	i64 B_value = 0;
	bool equal() const { return weighted_sum == B_value; }
	bool exact_equal() const { return exact_sum == B_value; }
};

FiberSumReport verify_thm13(i64 D, i64 a1, i64 a2);

} // namespace cubezeta
