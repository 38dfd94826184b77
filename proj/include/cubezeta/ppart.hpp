#pragma once

// Truncated power series in x, y, z whose coefficients are polynomials in a
// formal parameter p, used to compare two constructions of the p-part of
// the A3 series.

#include "cubezeta/arith.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cubezeta {

inline constexpr int kMaxSeriesDegree = 12;

// Polynomial in p with integer coefficients; c[i] multiplies p^i.
class PolyCoeff {
public:
	PolyCoeff() = default;
	PolyCoeff(i64 constant);
	explicit PolyCoeff(std::vector<i64> coeffs);

	static PolyCoeff p_power(unsigned e);

	const std::vector<i64>& coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	int degree() const { return static_cast<int>(c_.size()) - 1; }

	PolyCoeff operator+(const PolyCoeff& o) const;
	PolyCoeff operator-(const PolyCoeff& o) const;
	PolyCoeff operator*(const PolyCoeff& o) const;
	PolyCoeff& operator+=(const PolyCoeff& o) { return *this = *this + o; }
	PolyCoeff operator-() const;
	bool operator==(const PolyCoeff& o) const { return c_ == o.c_; }

	i64 evaluate(i64 p) const;
	// "c0+c1*p+c2*p^2", zero terms omitted, "0" for the zero polynomial.
	std::string to_string() const;

private:
	void trim();
	std::vector<i64> c_;
};

// Coefficients c[l][k][t] of x^l y^k z^t for 0 <= l, k, t <= K.
class TriSeries {
public:
	explicit TriSeries(int K);

	static TriSeries one(int K);
	// c * x^l y^k z^t
	static TriSeries monomial(int K, const PolyCoeff& c, int l, int k, int t);

	int degree() const { return K_; }
	const PolyCoeff& at(int l, int k, int t) const;
	PolyCoeff& at(int l, int k, int t);

	TriSeries operator+(const TriSeries& o) const;
	TriSeries operator-(const TriSeries& o) const;
	TriSeries operator*(const TriSeries& o) const;
	TriSeries operator*(const PolyCoeff& scalar) const;
	bool operator==(const TriSeries& o) const { return K_ == o.K_ && c_ == o.c_; }

	// Multiplicative inverse; requires constant term 1.
	TriSeries inverse() const;
	// Substitute an integer for p.
	TriSeries specialized(i64 p) const;

private:
	size_t index(int l, int k, int t) const;
	void check_same(const TriSeries& o) const;
	int K_;
	std::vector<PolyCoeff> c_;
};

// a(p^k, p^l) with p symbolic (or substituted when p is given).
PolyCoeff a_pp_poly(unsigned k, unsigned l, std::optional<i64> p = std::nullopt);

// Coefficients f[k][l] of x1^k x2^l of the A2 p-part, 0 <= k, l <= K.
std::vector<std::vector<PolyCoeff>> f_A2_series(int K, std::optional<i64> p = std::nullopt);

// Expansion of the rational function for the A3 p-part.
TriSeries f_A3_expand(int K, std::optional<i64> p = std::nullopt);

// Diagonal pairing of two A2 p-parts on the y index, times
// 1 / (1 - p x y^2 z).
TriSeries f_A3_convolution(int K, std::optional<i64> p = std::nullopt);

struct PPartReport {
	int K = 0;
	bool equal = true;
	std::array<int, 3> first_mismatch{-1, -1, -1}; // (l, k, t)
	PolyCoeff expand_value;
	PolyCoeff convolution_value;
};

PPartReport thm44_check(int K, std::optional<i64> p = std::nullopt);

// Compares the convolution coefficients at integer p with
// a_coeff3(p^k, p^l, p^t) for k, l, t <= K. Returns the first differing
// (l, k, t), or nullopt when all agree.
std::optional<std::array<int, 3>> compare_with_wmds(i64 p, int K);

} // namespace cubezeta
