#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library beyond the plain data types.

#include "cubezeta/arith.hpp"
#include "cubezeta/cube.hpp"

#include <map>
#include <vector>

namespace oracle {

using cubezeta::i64;

inline std::map<i64, unsigned> trial_factor(i64 n) {
	std::map<i64, unsigned> out;
	if (n < 0)
		n = -n;
	for (i64 p = 2; p * p <= n; ++p)
		while (n % p == 0) {
			++out[p];
			n /= p;
		}
	if (n > 1)
		++out[n];
	return out;
}

inline bool is_prime(i64 n) {
	if (n < 2)
		return false;
	for (i64 p = 2; p * p <= n; ++p)
		if (n % p == 0)
			return false;
	return true;
}

// #{x mod |a| : x^2 = d mod |a|}
inline i64 sqrt_count(i64 d, i64 a) {
	i64 mod = a < 0 ? -a : a;
	i64 count = 0;
	for (i64 x = 0; x < mod; ++x)
		if (((x * x - d) % mod) == 0)
			++count;
	return count;
}

inline i64 pow_mod(i64 b, i64 e, i64 m) {
	i64 r = 1 % m;
	b %= m;
	if (b < 0)
		b += m;
	for (; e > 0; e >>= 1) {
		if (e & 1)
			r = r * b % m;
		b = b * b % m;
	}
	return r;
}

// Legendre symbol by Euler's criterion.
inline int legendre(i64 a, i64 p) {
	i64 r = pow_mod(a, (p - 1) / 2, p);
	return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

inline i64 divisor_sum(i64 n) {
	i64 s = 0;
	for (i64 d = 1; d <= n; ++d)
		if (n % d == 0)
			s += d;
	return s;
}

inline int mobius(i64 n) {
	int mu = 1;
	for (auto [p, e] : trial_factor(n)) {
		if (e > 1)
			return 0;
		mu = -mu;
	}
	return mu;
}

// Discriminant and front/left determinants straight from the cube entries,
// via Cayley's hyperdeterminant.
inline std::array<i64, 3> cube_invariants(const cubezeta::Cube& x) {
	auto [a, b, c, d, e, f, g, h] = x.entries();
	i64 D = a * a * h * h + b * b * g * g + c * c * f * f + d * d * e * e - 2 * (a * b * g * h + a * c * f * h + a * d * e * h + b * c * f * g + b * d * e * g + c * d * e * f) +
	        4 * (a * d * f * g + b * c * e * h);
	return {D, a * d - b * c, a * g - c * e};
}

} // namespace oracle
