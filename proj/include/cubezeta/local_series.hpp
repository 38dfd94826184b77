#pragma once

// Truncated Laurent series in one formal variable q with exact rational
// coefficients. Used for the p-local factors of Dirichlet series, where
// q stands for p^{-s}.

#include "cubezeta/rational.hpp"

#include <string>
#include <vector>

namespace cubezeta {

class LocalSeries {
public:
	// The zero series, known modulo q^prec.
	explicit LocalSeries(int prec);
	// Coefficients of q^low, q^{low+1}, ..., known modulo q^prec.
	LocalSeries(int low, int prec, std::vector<Rational> coeffs);

	static LocalSeries monomial(Rational c, int exponent, int prec);
	// 1 / (1 - c q^step) expanded up to q^prec.
	static LocalSeries geometric(Rational c, int step, int prec);
	// Polynomial given by coefficients of q^0, q^1, ...
	static LocalSeries polynomial(const std::vector<Rational>& coeffs, int prec);

	int precision() const { return prec_; }
	// Lowest exponent that may carry a nonzero coefficient.
	int low() const { return low_; }
	Rational coeff(int exponent) const;
	// Lowest exponent with a nonzero coefficient, or precision() if none.
	int valuation() const;
	bool is_zero() const { return valuation() >= prec_; }

	LocalSeries truncated(int prec) const;

	LocalSeries operator+(const LocalSeries& other) const;
	LocalSeries operator-(const LocalSeries& other) const;
	LocalSeries operator*(const LocalSeries& other) const;
	LocalSeries operator*(const Rational& scalar) const;
	LocalSeries inverse() const;

	std::string to_string() const;

private:
	int low_;
	int prec_;
	std::vector<Rational> c_;
};

} // namespace cubezeta
