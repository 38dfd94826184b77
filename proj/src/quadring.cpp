#include "cubezeta/quadring.hpp"

#include "cubezeta/congruence.hpp"
#include "cubezeta/orbits.hpp"

#include <stdexcept>

namespace cubezeta {

RingIdeal ring_ideal_from_form(const BinaryQuadraticForm& form) {
	if (form.a == 0)
		throw std::domain_error("form with vanishing leading coefficient");
	i64 D = form.disc();
	if (D == 0)
		throw std::domain_error("form with zero discriminant");
	return {{D}, {form.a, mod_floor(form.b, checked_mul(2, form.a))}};
}

bool is_valid_class(const OrientedIdealClass& cls, i64 D) {
	if (cls.a == 0 || D == 0)
		return false;
	i64 A = abs64(cls.a);
	if (cls.b < 0 || cls.b >= 2 * A)
		return false;
	return (i128(cls.b) * cls.b - D) % (i128(4) * A) == 0;
}

BinaryQuadraticForm form_from_class(const OrientedIdealClass& cls, i64 D) {
	if (!is_valid_class(cls, D))
		throw std::domain_error("invalid oriented ideal class");
	return {cls.a, cls.b, narrow((i128(cls.b) * cls.b - D) / (i128(4) * cls.a))};
}

IdealClassPair pair_from_cube(const Cube& cube) {
	auto q = forms(cube);
	RingIdeal first = ring_ideal_from_form(q[0]);
	RingIdeal second = ring_ideal_from_form(q[1]);
	return {first.ring.D, first.ideal, second.ideal};
}

i64 fiber_count(i64 D, i64 a1, i64 a2) {
	return sigma1(gcd64(squarefree_split(D).D1, a1, a2));
}

i64 exact_fiber_count(const IdealClassPair& pair) {
	auto f = form_from_class(pair.first, pair.D);
	auto g = form_from_class(pair.second, pair.D);
	return pair_orbit_count({pair.D, f.a, g.a, f.b, g.b, f.c, g.c});
}

std::vector<IdealClassPair> enumerate_pairs(i64 D, i64 a1, i64 a2) {
	if (a1 < 1 || a2 < 1)
		throw std::domain_error("enumerate_pairs needs positive norms");
	std::vector<IdealClassPair> out;
	auto roots1 = congruence_roots(D, a1);
	auto roots2 = congruence_roots(D, a2);
	for (i64 s1 : {-1, 1})
		for (i64 b1 : roots1)
			for (i64 s2 : {-1, 1})
				for (i64 b2 : roots2)
					out.push_back({D, {s1 * a1, b1}, {s2 * a2, b2}});
	return out;
}

FiberSumReport verify_thm13(i64 D, i64 a1, i64 a2) {
	FiberSumReport rep{D, a1, a2};
	if (!is_discriminant_residue(D) || D == 0)
		throw std::domain_error("verify_thm13 needs a nonzero discriminant (0 or 1 mod 4)");
	i64 fiber = fiber_count(D, a1, a2);
	for (const auto& p : enumerate_pairs(D, a1, a2)) {
		++rep.pairs;
		rep.weighted_sum = checked_add(rep.weighted_sum, fiber);
		rep.exact_sum = checked_add(rep.exact_sum, exact_fiber_count(p));
	}
	rep.B_value = B(D, a1, a2);
	return rep;
}

} // namespace cubezeta
