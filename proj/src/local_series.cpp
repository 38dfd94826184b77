#include "cubezeta/local_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubezeta {

LocalSeries::LocalSeries(int prec) : low_(0), prec_(prec) {}

LocalSeries::LocalSeries(int low, int prec, std::vector<Rational> coeffs)
	: low_(low), prec_(prec), c_(std::move(coeffs)) {
	if (low_ + static_cast<int>(c_.size()) > prec_)
		c_.resize(static_cast<size_t>(std::max(0, prec_ - low_)));
}

LocalSeries LocalSeries::monomial(Rational c, int exponent, int prec) {
	if (exponent >= prec)
		return LocalSeries(prec);
	return LocalSeries(exponent, prec, {std::move(c)});
}

LocalSeries LocalSeries::geometric(Rational c, int step, int prec) {
	if (step <= 0)
		throw std::domain_error("geometric series needs a positive step");
	std::vector<Rational> coeffs(static_cast<size_t>(std::max(prec, 0)));
	Rational power = 1;
	for (int e = 0; e < prec; e += step) {
		coeffs[static_cast<size_t>(e)] = power;
		power *= c;
	}
	return LocalSeries(0, prec, std::move(coeffs));
}

LocalSeries LocalSeries::polynomial(const std::vector<Rational>& coeffs, int prec) {
	return LocalSeries(0, prec, coeffs);
}

Rational LocalSeries::coeff(int exponent) const {
	if (exponent >= prec_)
		throw std::range_error("coefficient beyond series precision");
	int i = exponent - low_;
	if (i < 0 || i >= static_cast<int>(c_.size()))
		return 0;
	return c_[static_cast<size_t>(i)];
}

int LocalSeries::valuation() const {
	for (size_t i = 0; i < c_.size(); ++i)
		if (c_[i] != 0)
			return low_ + static_cast<int>(i);
	return prec_;
}

LocalSeries LocalSeries::truncated(int prec) const {
	return LocalSeries(low_, std::min(prec, prec_), c_);
}

LocalSeries LocalSeries::operator+(const LocalSeries& other) const {
	int prec = std::min(prec_, other.prec_);
	int low = std::min(low_, other.low_);
	std::vector<Rational> out(static_cast<size_t>(std::max(0, prec - low)));
	for (int e = low; e < prec; ++e) {
		Rational v = 0;
		int i = e - low_;
		if (i >= 0 && i < static_cast<int>(c_.size()))
			v += c_[static_cast<size_t>(i)];
		int j = e - other.low_;
		if (j >= 0 && j < static_cast<int>(other.c_.size()))
			v += other.c_[static_cast<size_t>(j)];
		out[static_cast<size_t>(e - low)] = v;
	}
	return LocalSeries(low, prec, std::move(out));
}

LocalSeries LocalSeries::operator*(const Rational& scalar) const {
	std::vector<Rational> out = c_;
	for (auto& v : out)
		v *= scalar;
	return LocalSeries(low_, prec_, std::move(out));
}

LocalSeries LocalSeries::operator-(const LocalSeries& other) const {
	return *this + other * Rational(-1);
}

LocalSeries LocalSeries::operator*(const LocalSeries& other) const {
	int va = valuation();
	int vb = other.valuation();
	// Precision of a product is limited by each factor's precision shifted
	// by the other factor's valuation.
	int prec = std::min(prec_ + std::min(vb, other.prec_), other.prec_ + std::min(va, prec_));
	int low = low_ + other.low_;
	std::vector<Rational> out(static_cast<size_t>(std::max(0, prec - low)));
	for (size_t i = 0; i < c_.size(); ++i) {
		if (c_[i] == 0)
			continue;
		for (size_t j = 0; j < other.c_.size(); ++j) {
			int e = low_ + static_cast<int>(i) + other.low_ + static_cast<int>(j);
			if (e >= prec)
				break;
			out[static_cast<size_t>(e - low)] += c_[i] * other.c_[j];
		}
	}
	return LocalSeries(low, prec, std::move(out));
}

LocalSeries LocalSeries::inverse() const {
	int v = valuation();
	if (v >= prec_)
		throw std::domain_error("cannot invert a series that vanishes to its precision");
	Rational lead = coeff(v);
	int n = prec_ - v; // number of known coefficients after normalising
	std::vector<Rational> u(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i)
		u[static_cast<size_t>(i)] = coeff(v + i) / lead;
	std::vector<Rational> inv(static_cast<size_t>(n));
	if (n > 0)
		inv[0] = 1;
	for (int k = 1; k < n; ++k) {
		Rational acc = 0;
		for (int i = 1; i <= k; ++i)
			acc += u[static_cast<size_t>(i)] * inv[static_cast<size_t>(k - i)];
		inv[static_cast<size_t>(k)] = -acc;
	}
	for (auto& x : inv)
		x /= lead;
	return LocalSeries(-v, n - v, std::move(inv));
}

std::string LocalSeries::to_string() const {
	std::ostringstream os;
	bool first = true;
	for (size_t i = 0; i < c_.size(); ++i) {
		if (c_[i] == 0)
			continue;
		if (!first)
			os << " + ";
		os << c_[i] << "*q^" << (low_ + static_cast<int>(i));
		first = false;
	}
	if (first)
		os << "0";
	os << " + O(q^" << prec_ << ")";
	return os.str();
}

} // namespace cubezeta
