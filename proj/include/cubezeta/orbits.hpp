#pragma once

// Constructive classification of semistable cubes: congruence pairs, the
// cube built from a pair, and the closed-form orbit count B(D, m, n).

#include "cubezeta/cube.hpp"

#include <vector>

namespace cubezeta {

struct CongruencePair {
	i64 D = 0, m = 0, n = 0;
	i64 x = 0; // in [0, 2|m|), x^2 = D mod 4m
	i64 y = 0; // in [0, 2|n|), y^2 = D mod 4n
	i64 s = 0; // (x^2 - D) / 4m
	i64 t = 0; // (y^2 - D) / 4n
	bool operator==(const CongruencePair&) const = default;
};

// Residues x in [0, 2|m|) with x^2 = D mod 4m, increasing. m != 0.
std::vector<i64> congruence_roots(i64 D, i64 m);

// All pairs (x, y) in the windows, ordered by x then y. m and n are signed
// and nonzero.
std::vector<CongruencePair> congruence_pairs(i64 D, i64 m, i64 n);

// A cube with c = 0, gcd(d, g, h) = 1, Q1 = (m, x, s) and Q2 = (n, y, t).
// Among the admissible f the smallest nonnegative one is used.
Cube cube_from_invariants(const CongruencePair& pair);

// d * A(D/d^2, 4m/d) * A(D/d^2, 4n/d) when d divides D1, m and n; else 0.
i64 b_term(i64 D, i64 d, i64 m, i64 n);

// Number of orbits of semistable cubes with disc D and |invariants| (m, n),
// m, n >= 1. Zero for D = 2, 3 mod 4.
i64 B(i64 D, i64 m, i64 n);

// Number of orbits whose first two forms are B'_2(Z)-equivalent to
// (m, x, s) and (n, y, t). Obtained by reducing to the slice c = 0, a > 0
// and counting residual orbits there; summing over all pairs and all sign
// choices of (m, n) recovers B.
i64 pair_orbit_count(const CongruencePair& pair);

// B recomputed as the sum of pair_orbit_count over pairs and signs.
i64 B_by_pairs(i64 D, i64 m, i64 n);

} // namespace cubezeta
