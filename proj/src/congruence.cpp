#include "cubezeta/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubezeta {

i64 Factorization::value() const {
	i64 v = sign;
	for (const auto& [p, e] : primes)
		v = checked_mul(v, checked_pow(p, e));
	return v;
}

unsigned Factorization::exponent_of(i64 p) const {
	for (const auto& pp : primes)
		if (pp.p == p)
			return pp.e;
	return 0;
}

PrimeTable::PrimeTable(i64 limit) : limit_(std::max<i64>(limit, 2)), composite_(static_cast<size_t>(limit_ + 1)) {
	composite_[0] = composite_[1] = true;
	for (i64 i = 2; i <= limit_; ++i) {
		if (composite_[static_cast<size_t>(i)])
			continue;
		primes_.push_back(i);
		for (i64 j = i * i; j <= limit_; j += i)
			composite_[static_cast<size_t>(j)] = true;
	}
}

bool PrimeTable::is_prime(i64 n) const {
	if (n < 0 || n > limit_)
		throw std::range_error("prime table lookup out of range");
	return !composite_[static_cast<size_t>(n)];
}

namespace {

void push_factor(Factorization& f, i64 p, unsigned e) {
	if (e > 0)
		f.primes.push_back({p, e});
}

// Divides out every prime factor >= start from n by 6k +- 1 trial division.
void trial_divide_from(Factorization& f, u64 n, u64 start) {
	u64 p = start;
	auto take = [&](u64 q) {
		unsigned e = 0;
		while (n % q == 0) {
			n /= q;
			++e;
		}
		push_factor(f, static_cast<i64>(q), e);
	};
	if (p <= 2) {
		take(2);
		p = 3;
	}
	if (p <= 3) {
		take(3);
		p = 5;
	}
	// align to 6k - 1
	while (p % 6 != 5)
		++p;
	for (; p * p <= n; p += 6) {
		take(p);
		take(p + 2);
	}
	if (n > 1)
		push_factor(f, static_cast<i64>(n), 1);
}

u64 checked_magnitude(i64 n) {
	if (n == 0)
		throw std::domain_error("cannot factorize zero");
	if (n == INT64_MIN)
		throw std::range_error("factorization input exceeds 2^63 - 1 in magnitude");
	return static_cast<u64>(n < 0 ? -n : n);
}

} // namespace

Factorization factorize(i64 n) {
	u64 m = checked_magnitude(n);
	Factorization f;
	f.sign = n < 0 ? -1 : 1;
	trial_divide_from(f, m, 2);
	return f;
}

Factorization factorize(i64 n, const PrimeTable& table) {
	u64 m = checked_magnitude(n);
	Factorization f;
	f.sign = n < 0 ? -1 : 1;
	for (i64 p : table.primes()) {
		u64 q = static_cast<u64>(p);
		if (q * q > m)
			break;
		unsigned e = 0;
		while (m % q == 0) {
			m /= q;
			++e;
		}
		push_factor(f, p, e);
	}
	if (m > 1) {
		u64 next = static_cast<u64>(table.primes().empty() ? 2 : table.primes().back() + 1);
		if (next * next > m)
			push_factor(f, static_cast<i64>(m), 1);
		else
			trial_divide_from(f, m, next);
	}
	return f;
}

bool is_prime(i64 n) {
	if (n < 2)
		return false;
	Factorization f = factorize(n);
	return f.primes.size() == 1 && f.primes[0].e == 1;
}

SquarefreeSplit squarefree_split(i64 D) {
	Factorization f = factorize(D);
	i64 D0 = f.sign;
	i64 D1 = 1;
	for (const auto& [p, e] : f.primes) {
		if (e % 2)
			D0 = checked_mul(D0, p);
		D1 = checked_mul(D1, checked_pow(p, e / 2));
	}
	return {D0, D1};
}

i64 fundamental_discriminant(i64 D) {
	if (D == 0 || !is_discriminant_residue(D))
		throw std::domain_error("fundamental_discriminant needs D != 0 with D = 0 or 1 mod 4");
	i64 D0 = squarefree_split(D).D0;
	if (D0 == 1)
		return 1;
	return mod_floor(D0, 4) == 1 ? D0 : checked_mul(4, D0);
}

unsigned DiscriminantData::alpha(i64 p) const {
	for (const auto& [q, a] : alpha_map)
		if (q == p)
			return a;
	return 0;
}

DiscriminantData discriminant_data(i64 D) {
	DiscriminantData out;
	out.D = D;
	out.dstar = fundamental_discriminant(D);
	auto split = squarefree_split(D);
	out.D0 = split.D0;
	out.D1 = split.D1;
	i64 ratio = D / out.dstar;
	if (ratio <= 0 || !is_square(ratio) || D % out.dstar != 0)
		throw std::logic_error("D / dstar is not a positive square");
	for (const auto& [p, e] : factorize(ratio).primes)
		out.alpha_map.emplace_back(p, e / 2);
	return out;
}

i64 sqrt_count_prime_power(i64 d, i64 p, unsigned l) {
	if (l == 0)
		return 1;
	i64 modulus = checked_pow(p, l);
	i64 r = mod_floor(d, modulus);
	if (r == 0)
		return checked_pow(p, l / 2);
	unsigned v = valuation(r, p);
	if (v % 2)
		return 0;
	i64 unit = r / checked_pow(p, v);
	unsigned j = l - v;
	i64 lifts;
	if (p == 2) {
		if (j == 1)
			lifts = 1;
		else if (j == 2)
			lifts = mod_floor(unit, 4) == 1 ? 2 : 0;
		else
			lifts = mod_floor(unit, 8) == 1 ? 4 : 0;
	} else {
		lifts = kronecker(unit, p) == 1 ? 2 : 0;
	}
	return checked_mul(lifts, checked_pow(p, v / 2));
}

i64 sqrt_count(i64 d, i64 a) {
	if (a == 0)
		throw std::domain_error("sqrt_count needs a nonzero modulus");
	i64 count = 1;
	for (const auto& [p, e] : factorize(a).primes) {
		count = checked_mul(count, sqrt_count_prime_power(d, p, e));
		if (count == 0)
			break;
	}
	return count;
}

i64 sqrt_count_direct(i64 d, i64 a) {
	if (a == 0)
		throw std::domain_error("sqrt_count_direct needs a nonzero modulus");
	i64 mod = abs64(a);
	i64 target = mod_floor(d, mod);
	i64 count = 0;
	for (i64 x = 0; x < mod; ++x)
		if (static_cast<i64>((i128(x) * x) % mod) == target)
			++count;
	return count;
}

namespace {

int jacobi(i64 a, i64 n) {
	// n odd positive
	a = mod_floor(a, n);
	int result = 1;
	while (a != 0) {
		while (a % 2 == 0) {
			a /= 2;
			i64 r = n % 8;
			if (r == 3 || r == 5)
				result = -result;
		}
		std::swap(a, n);
		if (a % 4 == 3 && n % 4 == 3)
			result = -result;
		a %= n;
	}
	return n == 1 ? result : 0;
}

} // namespace

int kronecker(i64 a, i64 n) {
	if (n == 0)
		return (a == 1 || a == -1) ? 1 : 0;
	int result = 1;
	if (n < 0) {
		n = -n;
		if (a < 0)
			result = -result;
	}
	unsigned v = 0;
	while (n % 2 == 0) {
		n /= 2;
		++v;
	}
	if (v > 0) {
		if (a % 2 == 0)
			return 0;
		i64 r = mod_floor(a, 8);
		if (v % 2 == 1 && (r == 3 || r == 5))
			result = -result;
	}
	if (n == 1)
		return result;
	return result * jacobi(a, n);
}

int chi(i64 D, i64 n) {
	if (n < 1)
		throw std::domain_error("chi is evaluated at positive integers");
	return kronecker(fundamental_discriminant(D), n);
}

i64 hat(i64 m, i64 D) {
	if (m < 1)
		throw std::domain_error("hat needs m >= 1");
	i64 D0 = squarefree_split(D).D0;
	i64 g = gcd64(m, D0);
	while (g > 1) {
		m /= g;
		g = gcd64(m, D0);
	}
	return m;
}

i64 sigma1(i64 n) {
	if (n < 1)
		throw std::domain_error("sigma1 needs n >= 1");
	i64 s = 1;
	for (const auto& [p, e] : factorize(n).primes) {
		i64 term = 1;
		i64 pw = 1;
		for (unsigned i = 0; i < e; ++i) {
			pw = checked_mul(pw, p);
			term = checked_add(term, pw);
		}
		s = checked_mul(s, term);
	}
	return s;
}

namespace {

// A(d, p^l) by enumeration while the modulus is small, by Hensel otherwise.
i64 local_count(i64 d, i64 p, unsigned l) {
	i64 modulus = checked_pow(p, l);
	if (modulus <= (i64(1) << 20))
		return sqrt_count_direct(d, modulus);
	return sqrt_count_prime_power(d, p, l);
}

} // namespace

SiegelReport siegel_factor_check(i64 d, i64 p, int truncation) {
	if (d == 0 || !is_discriminant_residue(d))
		throw std::domain_error("siegel_factor_check needs a nonzero discriminant (0 or 1 mod 4)");
	if (!is_prime(p))
		throw std::domain_error("siegel_factor_check needs a prime p");
	int vp = static_cast<int>(valuation(d, p));
	if (truncation < vp + 4)
		throw std::range_error("truncation must be at least v_p(d) + 4");

	DiscriminantData data = discriminant_data(d);
	unsigned alpha = data.alpha(p);
	int chip = chi(d, p);
	// one extra term absorbs the q^{-1} shift in the p = 2 normalisation
	int prec = truncation + 2;

	std::vector<Rational> counts(static_cast<size_t>(prec));
	for (int l = 0; l < prec; ++l)
		counts[static_cast<size_t>(l)] = (p == 2 && l == 0) ? Rational(0) : Rational(local_count(d, p, static_cast<unsigned>(l)));
	LocalSeries count_series = LocalSeries::polynomial(counts, prec);

	LocalSeries twist = LocalSeries::polynomial({1, Rational(-chip)}, prec) * LocalSeries::geometric(1, 2, prec);
	LocalSeries f_p(prec);
	if (p == 2)
		f_p = LocalSeries(-1, prec, {1, -1}) * count_series; // (2^s - 1) sum_{l>=1}
	else
		f_p = LocalSeries::polynomial({1, -1}, prec) * count_series; // (1 - p^{-s}) sum_{l>=0}
	LocalSeries lhs = twist * f_p;

	LocalSeries rhs(prec);
	if (p == 2) {
		rhs = LocalSeries::geometric(-1, 1, prec) * Rational(1 + chip);
		LocalSeries tail(prec);
		for (unsigned l = 0; l <= alpha; ++l)
			tail = tail + LocalSeries::monomial(checked_pow(2, l), static_cast<int>(2 * l), prec);
		rhs = rhs + LocalSeries::polynomial({Rational(-chip), 2}, prec) * tail;
	} else {
		rhs = LocalSeries::monomial(checked_pow(p, alpha), static_cast<int>(2 * alpha), prec);
		LocalSeries tail(prec);
		for (unsigned l = 0; l < alpha; ++l)
			tail = tail + LocalSeries::monomial(checked_pow(p, l), static_cast<int>(2 * l), prec);
		rhs = rhs + LocalSeries::polynomial({1, Rational(-chip)}, prec) * tail;
	}

	SiegelReport report{d, p, alpha, chip, truncation, lhs.truncated(truncation + 1), rhs.truncated(truncation + 1), {}};
	int lowest = std::min(report.lhs.low(), report.rhs.low());
	for (int e = lowest; e <= truncation; ++e)
		if (report.lhs.coeff(e) != report.rhs.coeff(e))
			report.mismatched_exponents.push_back(e);
	return report;
}

} // namespace cubezeta
