#include "cubezeta/orbits.hpp"

#include "cubezeta/congruence.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

namespace cubezeta {

namespace {

i64 exact_div(i128 num, i128 den) {
	if (den == 0 || num % den != 0)
		throw std::logic_error("inexact division in cube construction");
	return narrow(num / den);
}

// Inverse of u modulo mod (> 1), assuming gcd(u, mod) = 1.
i64 inverse_mod(i64 u, i64 mod) {
	i64 r0 = mod, r1 = mod_floor(u, mod), t0 = 0, t1 = 1;
	while (r1 != 0) {
		i64 q = r0 / r1;
		std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
		std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
	}
	if (r0 != 1)
		throw std::logic_error("no modular inverse");
	return mod_floor(t0, mod);
}

} // namespace

std::vector<i64> congruence_roots(i64 D, i64 m) {
	if (m == 0)
		throw std::domain_error("congruence_roots needs m != 0");
	std::vector<i64> out;
	i64 M = abs64(m);
	i64 mod = checked_mul(4, M);
	i64 target = mod_floor(D, mod);
	for (i64 x = 0; x < 2 * M; ++x)
		if (static_cast<i64>((i128(x) * x) % mod) == target)
			out.push_back(x);
	return out;
}

std::vector<CongruencePair> congruence_pairs(i64 D, i64 m, i64 n) {
	if (m == 0 || n == 0)
		throw std::domain_error("congruence_pairs needs nonzero m and n");
	std::vector<CongruencePair> out;
	auto xs = congruence_roots(D, m);
	auto ys = congruence_roots(D, n);
	for (i64 x : xs)
		for (i64 y : ys)
			out.push_back({D, m, n, x, y, exact_div(i128(x) * x - D, i128(4) * m), exact_div(i128(y) * y - D, i128(4) * n)});
	return out;
}

Cube cube_from_invariants(const CongruencePair& p) {
	if ((p.x + p.y) % 2)
		throw std::logic_error("congruence pair with x, y of different parity");
	i64 half_sum = (p.x + p.y) / 2;
	i64 half_diff = (p.x - p.y) / 2;
	i64 a = gcd64(p.m, p.n, half_sum);
	Cube A;
	A.a = a;
	A.c = 0;
	A.d = p.m / a;
	A.g = p.n / a;
	A.h = -half_sum / a;
	if (A.h != 0) {
		i64 H = abs64(A.h);
		bool found = false;
		for (i64 f = 0; f < H && !found; ++f) {
			if (mod_floor(p.s + f * A.g, H) == 0 && mod_floor(p.t + f * A.d, H) == 0) {
				A.f = f;
				found = true;
			}
		}
		if (!found)
			throw std::logic_error("no admissible f in cube construction");
		A.e = exact_div(i128(p.s) + i128(A.f) * A.g, A.h);
		A.b = exact_div(i128(p.t) + i128(A.f) * A.d, A.h);
	} else {
		// x + y = 0: then gcd(d, g) = 1 and (x - y) / 2 = bg - de.
		A.f = A.g != 0 ? -exact_div(p.s, A.g) : -exact_div(p.t, A.d);
		i64 G = abs64(A.g);
		if (G == 1) {
			A.e = 0;
		} else {
			// bg - de = w  =>  -de = w (mod g)
			i64 rhs = mod_floor(-half_diff, G);
			A.e = narrow(i128(rhs) * inverse_mod(A.d, G) % G);
		}
		A.b = exact_div(i128(half_diff) + i128(A.d) * A.e, A.g);
	}
	auto q = forms(A);
	if (q[0] != BinaryQuadraticForm{p.m, p.x, p.s} || q[1] != BinaryQuadraticForm{p.n, p.y, p.t})
		throw std::logic_error("constructed cube has the wrong forms");
	return A;
}

i64 b_term(i64 D, i64 d, i64 m, i64 n) {
	if (d < 1 || m < 1 || n < 1)
		throw std::domain_error("b_term needs positive d, m, n");
	if (m % d || n % d)
		return 0;
	i64 D1 = squarefree_split(D).D1;
	if (D1 % d)
		return 0;
	i64 Dd = D / (d * d);
	return checked_mul(d, checked_mul(sqrt_count(Dd, checked_mul(4, m / d)), sqrt_count(Dd, checked_mul(4, n / d))));
}

i64 B(i64 D, i64 m, i64 n) {
	if (D == 0)
		throw std::domain_error("B needs D != 0");
	if (m < 1 || n < 1)
		throw std::domain_error("B needs m, n >= 1");
	if (!is_discriminant_residue(D))
		return 0;
	i64 D1 = squarefree_split(D).D1;
	i64 g = gcd64(D1, m, n);
	i64 total = 0;
	for (i64 d = 1; d <= g; ++d)
		if (g % d == 0)
			total = checked_add(total, b_term(D, d, m, n));
	return total;
}

i64 pair_orbit_count(const CongruencePair& p) {
	i64 half_sum = (p.x + p.y) / 2;
	i64 half_diff = (p.x - p.y) / 2;
	i64 top = gcd64(p.m, p.n, half_sum);
	i64 total = 0;
	for (i64 a = 1; a <= top; ++a) {
		if (top % a)
			continue;
		i64 G = gcd64(p.m / a, p.n / a, half_sum / a);
		if (p.s % G == 0 && p.t % G == 0 && half_diff % G == 0)
			total = checked_add(total, G);
	}
	return total;
}

i64 B_by_pairs(i64 D, i64 m, i64 n) {
	if (m < 1 || n < 1)
		throw std::domain_error("B_by_pairs needs m, n >= 1");
	i64 total = 0;
	for (i64 sm : {1, -1})
		for (i64 sn : {1, -1})
			for (const auto& p : congruence_pairs(D, sm * m, sn * n))
				total = checked_add(total, pair_orbit_count(p));
	return total;
}

} // namespace cubezeta
