#include "cubezeta/wmds.hpp"

#include "cubezeta/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubezeta {

i64 a_pp(i64 p, unsigned k, unsigned l) {
	unsigned low = std::min(k, l);
	if (low % 2)
		return 0;
	return checked_pow(p, low / 2);
}

i64 a_coeff(i64 D, i64 m) {
	if (D == 0)
		throw std::domain_error("a_coeff needs D != 0");
	if (m < 1)
		throw std::domain_error("a_coeff needs m >= 1");
	// primes not dividing m contribute a(p^k, 1) = 1
	i64 r = 1;
	for (const auto& [p, l] : factorize(m).primes) {
		r = checked_mul(r, a_pp(p, valuation(D, p), l));
		if (r == 0)
			break;
	}
	return r;
}

i64 a_coeff3(i64 D, i64 m, i64 n) {
	if (D == 0)
		throw std::domain_error("a_coeff3 needs D != 0");
	if (m < 1 || n < 1)
		throw std::domain_error("a_coeff3 needs m, n >= 1");
	i64 g = gcd64(squarefree_split(D).D1, m, n);
	i64 total = 0;
	for (i64 d = 1; d <= g; ++d) {
		if (g % d)
			continue;
		i64 Dd = D / (d * d);
		total = checked_add(total, checked_mul(d, checked_mul(a_coeff(Dd, m / d), a_coeff(Dd, n / d))));
	}
	return total;
}

i64 tilde_A(i64 D, i64 m) {
	i64 a = a_coeff(D, m);
	if (a == 0)
		return 0;
	return chi(D, hat(m, D)) * a;
}

} // namespace cubezeta
