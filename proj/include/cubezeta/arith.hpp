#pragma once

// Checked 64-bit integer helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cubezeta {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline i64 checked_add(i64 x, i64 y) {
	i64 r;
	if (__builtin_add_overflow(x, y, &r))
		throw std::range_error("integer overflow in addition");
	return r;
}

inline i64 checked_sub(i64 x, i64 y) {
	i64 r;
	if (__builtin_sub_overflow(x, y, &r))
		throw std::range_error("integer overflow in subtraction");
	return r;
}

inline i64 checked_mul(i64 x, i64 y) {
	i64 r;
	if (__builtin_mul_overflow(x, y, &r))
		throw std::range_error("integer overflow in multiplication");
	return r;
}

// Narrow a 128-bit intermediate back to 64 bits.
inline i64 narrow(i128 x) {
	if (x > i128(INT64_MAX) || x < i128(INT64_MIN))
		throw std::range_error("integer overflow narrowing 128-bit value");
	return static_cast<i64>(x);
}

inline i64 checked_pow(i64 base, unsigned exp) {
	i64 r = 1;
	for (unsigned i = 0; i < exp; ++i)
		r = checked_mul(r, base);
	return r;
}

inline i64 abs64(i64 x) {
	if (x == INT64_MIN)
		throw std::range_error("cannot take |INT64_MIN|");
	return x < 0 ? -x : x;
}

// Least nonnegative residue of x modulo |m|.
inline i64 mod_floor(i64 x, i64 m) {
	i64 mm = abs64(m);
	i64 r = x % mm;
	return r < 0 ? r + mm : r;
}

inline i64 gcd64(i64 x, i64 y) { return std::gcd(abs64(x), abs64(y)); }
inline i64 gcd64(i64 x, i64 y, i64 z) { return gcd64(gcd64(x, y), z); }

// Floor of the square root of a nonnegative integer.
inline i64 isqrt(i64 n) {
	if (n < 0)
		throw std::domain_error("isqrt of negative number");
	u64 r = static_cast<u64>(__builtin_sqrt(static_cast<double>(n)));
	while (r * r > static_cast<u64>(n))
		--r;
	while ((r + 1) * (r + 1) <= static_cast<u64>(n))
		++r;
	return static_cast<i64>(r);
}

inline bool is_square(i64 n) {
	if (n < 0)
		return false;
	i64 r = isqrt(n);
	return r * r == n;
}

// Exponent of p in n (n != 0).
inline unsigned valuation(i64 n, i64 p) {
	if (n == 0)
		throw std::domain_error("valuation of zero");
	unsigned v = 0;
	while (n % p == 0) {
		n /= p;
		++v;
	}
	return v;
}

// True when n is 0 or 1 modulo 4, the residue classes of discriminants.
inline bool is_discriminant_residue(i64 n) {
	i64 r = mod_floor(n, 4);
	return r == 0 || r == 1;
}

inline std::string to_string(i128 x) {
	if (x == 0)
		return "0";
	bool neg = x < 0;
	std::string s;
	while (x != 0) {
		int digit = static_cast<int>(x % 10);
		s.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
		x /= 10;
	}
	if (neg)
		s.push_back('-');
	return {s.rbegin(), s.rend()};
}

} // namespace cubezeta
