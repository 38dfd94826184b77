#pragma once

// Truncated Dirichlet series with exact coefficients and the coefficient
// level checks of the series identities relating congruence counts, orbit
// counts and the Weyl group multiple Dirichlet series.

#include "cubezeta/arith.hpp"
#include "cubezeta/local_series.hpp"
#include "cubezeta/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubezeta {

// c[n] for 1 <= n <= M.
class DirichletCoeffs {
public:
	explicit DirichletCoeffs(int M);

	// 1 at n = 1, zero elsewhere.
	static DirichletCoeffs unit(int M);

	int truncation() const { return M_; }
	const Rational& operator[](int n) const;
	Rational& operator[](int n);

	DirichletCoeffs operator+(const DirichletCoeffs& o) const;
	DirichletCoeffs operator-(const DirichletCoeffs& o) const;
	DirichletCoeffs operator*(const Rational& scalar) const;
	bool operator==(const DirichletCoeffs& o) const { return M_ == o.M_ && c_ == o.c_; }

private:
	int M_;
	std::vector<Rational> c_;
};

// c[m][n] for 1 <= m, n <= M.
class BiDirichletCoeffs {
public:
	explicit BiDirichletCoeffs(int M);

	int truncation() const { return M_; }
	const Rational& at(int m, int n) const;
	Rational& at(int m, int n);
	bool operator==(const BiDirichletCoeffs& o) const { return M_ == o.M_ && c_ == o.c_; }

private:
	int M_;
	std::vector<Rational> c_;
};

// (F * G)[n] = sum over d | n of F[d] G[n/d].
DirichletCoeffs convolve(const DirichletCoeffs& F, const DirichletCoeffs& G);
// Convolve with g1 in the first index and g2 in the second.
BiDirichletCoeffs convolve_bi(const BiDirichletCoeffs& H, const DirichletCoeffs& g1, const DirichletCoeffs& g2);

// Dirichlet coefficients of prod_p g_p(p^{-s}) where the listed primes carry
// the given local power series and every other prime carries 1. Throws
// std::domain_error if a local series has a term of negative degree.
DirichletCoeffs from_euler_factors(const std::vector<std::pair<i64, LocalSeries>>& factors, int M);

// Named series:
//   zeta            1
//   zeta2s_inverse  mu(r) at n = r^2, else 0
//   L_chi           chi_d(n)
//   P_siegel        finite Euler product of the Siegel closed forms
//   P_prime         same with the 4a normalisation of the 2-factor
//   P_tilde2        2 (1 - 4^{-s}) for d = 1 mod 4 (odd), 0 otherwise
//   two_factor      2 (1 - 4^{-s})
// d is ignored by the series that do not depend on it. Unknown names and
// P_prime factors with negative powers of 2^{-s} throw std::domain_error.
DirichletCoeffs standard_series(const std::string& name, i64 d, int M);

// 2-local factors in q = 2^{-s}, normalised so that
//   sum_a A(d, a) a^{-s}   = zeta(s) L(s, chi_d) / zeta(2s) * prod_p P_p,
//   sum_a A(d, 4a) a^{-s}  = zeta(s) L(s, chi_d) / zeta(2s) * prod_p P'_p.
// The closed forms are transcribed as stated; the counted forms come from
// A(d, 2^l) directly.
LocalSeries prop21_two_factor_closed(i64 d, int prec);
LocalSeries prop21_two_factor_counted(i64 d, int prec);
LocalSeries cor24_two_factor_closed(i64 d, int prec);
LocalSeries cor24_two_factor_counted(i64 d, int prec);
// Odd-prime closed-form factor p^alpha q^{2 alpha} + (1 - chi q) sum_{l<alpha} p^l q^{2l}.
LocalSeries siegel_odd_factor(i64 d, i64 p, int prec);

struct IdentityReport {
	std::string identity;
	std::vector<std::pair<std::string, std::string>> params;
	bool equal = true;
	std::vector<i64> first_mismatch; // index (n) or (m, n); empty when equal
	std::string lhs_value;
	std::string rhs_value;
	std::vector<std::string> findings;
	// Outcome of the corrected form of the identity, where one is known.
	std::optional<bool> corrected_equal;
	std::string corrected_form;
};

// Sum_a A(d, a) a^{-s} against the closed-form product. Report mode: the
// odd part (n odd) and the 2-local factor are compared separately and any
// disagreement is recorded as a finding.
IdentityReport verify_prop21(i64 d, int M);
// Same for Sum_a A(d, 4a) a^{-s}.
IdentityReport verify_cor24(i64 d, int M);
// Sum_m A(D, 4m) m^{-s} = P~2(D, s) zeta(s) Sum_m chi_D(m^) a(D, m) m^{-s}, D odd.
IdentityReport verify_prop25(i64 D, int M);
// B(D, m, n) grid against the twisted a(D, m, n) grid convolved with
// P~2 zeta in each variable, D odd and 1 mod 4.
IdentityReport verify_thm12(i64 D, int M);

// A(d, 4a) = A(d, -4a) and the count of b in [0, 2|a|) with b^2 = d mod 4a
// equals A(d, 4a) / 2, for 0 < |d|, |a| <= bound.
bool verify_sign_symmetry(i64 bound);

struct PartialSum {
	double value = 0;
	bool convergence_warning = false;
};

// sum over 0 < |D| <= Dmax, D = 0, 1 mod 4, 1 <= m, n <= M of
// B(D, m, n) m^{-s1} n^{-s2} |D|^{-w}, accumulated in a fixed order with
// compensated summation.
PartialSum partial_sum(double s1, double s2, double w, i64 Dmax, i64 M);

} // namespace cubezeta
