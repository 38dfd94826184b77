#include "cubezeta/ppart.hpp"

#include "cubezeta/wmds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubezeta {

PolyCoeff::PolyCoeff(i64 constant) : c_{constant} { trim(); }

PolyCoeff::PolyCoeff(std::vector<i64> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyCoeff PolyCoeff::p_power(unsigned e) {
	std::vector<i64> c(e + 1, 0);
	c[e] = 1;
	return PolyCoeff(std::move(c));
}

void PolyCoeff::trim() {
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

PolyCoeff PolyCoeff::operator+(const PolyCoeff& o) const {
	std::vector<i64> r(std::max(c_.size(), o.c_.size()), 0);
	for (size_t i = 0; i < c_.size(); ++i)
		r[i] = c_[i];
	for (size_t i = 0; i < o.c_.size(); ++i)
		r[i] = checked_add(r[i], o.c_[i]);
	return PolyCoeff(std::move(r));
}

PolyCoeff PolyCoeff::operator-() const {
	std::vector<i64> r = c_;
	for (auto& v : r)
		v = checked_sub(0, v);
	return PolyCoeff(std::move(r));
}

PolyCoeff PolyCoeff::operator-(const PolyCoeff& o) const {
	return *this + (-o);
}

PolyCoeff PolyCoeff::operator*(const PolyCoeff& o) const {
	if (is_zero() || o.is_zero())
		return {};
	std::vector<i64> r(c_.size() + o.c_.size() - 1, 0);
	for (size_t i = 0; i < c_.size(); ++i)
		for (size_t j = 0; j < o.c_.size(); ++j)
			r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
	return PolyCoeff(std::move(r));
}

i64 PolyCoeff::evaluate(i64 p) const {
	i64 r = 0;
	for (size_t i = c_.size(); i-- > 0;)
		r = checked_add(checked_mul(r, p), c_[i]);
	return r;
}

std::string PolyCoeff::to_string() const {
	if (c_.empty())
		return "0";
	std::string s;
	for (size_t i = 0; i < c_.size(); ++i) {
		if (c_[i] == 0)
			continue;
		if (!s.empty() && c_[i] > 0)
			s += '+';
		s += std::to_string(c_[i]);
		if (i >= 1)
			s += "*p";
		if (i >= 2)
			s += "^" + std::to_string(i);
	}
	return s;
}

TriSeries::TriSeries(int K) : K_(K) {
	if (K < 0 || K > kMaxSeriesDegree)
		throw std::domain_error("series degree must be in [0, " + std::to_string(kMaxSeriesDegree) + "]");
	size_t n = static_cast<size_t>(K + 1);
	c_.resize(n * n * n);
}

TriSeries TriSeries::one(int K) {
	TriSeries s(K);
	s.at(0, 0, 0) = 1;
	return s;
}

TriSeries TriSeries::monomial(int K, const PolyCoeff& c, int l, int k, int t) {
	TriSeries s(K);
	if (l <= K && k <= K && t <= K)
		s.at(l, k, t) = c;
	return s;
}

size_t TriSeries::index(int l, int k, int t) const {
	if (l < 0 || k < 0 || t < 0 || l > K_ || k > K_ || t > K_)
		throw std::range_error("series index beyond truncation");
	size_t n = static_cast<size_t>(K_ + 1);
	return (static_cast<size_t>(l) * n + static_cast<size_t>(k)) * n + static_cast<size_t>(t);
}

const PolyCoeff& TriSeries::at(int l, int k, int t) const { return c_[index(l, k, t)]; }
PolyCoeff& TriSeries::at(int l, int k, int t) { return c_[index(l, k, t)]; }

void TriSeries::check_same(const TriSeries& o) const {
	if (K_ != o.K_)
		throw std::domain_error("series truncations differ");
}

TriSeries TriSeries::operator+(const TriSeries& o) const {
	check_same(o);
	TriSeries r(K_);
	for (size_t i = 0; i < c_.size(); ++i)
		r.c_[i] = c_[i] + o.c_[i];
	return r;
}

TriSeries TriSeries::operator-(const TriSeries& o) const {
	return *this + o * PolyCoeff(-1);
}

TriSeries TriSeries::operator*(const PolyCoeff& scalar) const {
	TriSeries r(K_);
	for (size_t i = 0; i < c_.size(); ++i)
		r.c_[i] = c_[i] * scalar;
	return r;
}

TriSeries TriSeries::operator*(const TriSeries& o) const {
	check_same(o);
	TriSeries r(K_);
	for (int l1 = 0; l1 <= K_; ++l1)
		for (int k1 = 0; k1 <= K_; ++k1)
			for (int t1 = 0; t1 <= K_; ++t1) {
				const PolyCoeff& u = at(l1, k1, t1);
				if (u.is_zero())
					continue;
				for (int l2 = 0; l1 + l2 <= K_; ++l2)
					for (int k2 = 0; k1 + k2 <= K_; ++k2)
						for (int t2 = 0; t1 + t2 <= K_; ++t2) {
							const PolyCoeff& v = o.at(l2, k2, t2);
							if (!v.is_zero())
								r.at(l1 + l2, k1 + k2, t1 + t2) += u * v;
						}
			}
	return r;
}

TriSeries TriSeries::inverse() const {
	if (!(at(0, 0, 0) == PolyCoeff(1)))
		throw std::domain_error("series inverse needs constant term 1");
	// Solve S * R = 1 index by index; every strictly smaller index (in the
	// componentwise order) is visited first in lexicographic order.
	TriSeries r(K_);
	for (int l = 0; l <= K_; ++l)
		for (int k = 0; k <= K_; ++k)
			for (int t = 0; t <= K_; ++t) {
				if (l == 0 && k == 0 && t == 0) {
					r.at(0, 0, 0) = 1;
					continue;
				}
				PolyCoeff acc;
				for (int l1 = 0; l1 <= l; ++l1)
					for (int k1 = 0; k1 <= k; ++k1)
						for (int t1 = 0; t1 <= t; ++t1) {
							if (l1 == 0 && k1 == 0 && t1 == 0)
								continue;
							const PolyCoeff& u = at(l1, k1, t1);
							if (!u.is_zero())
								acc += u * r.at(l - l1, k - k1, t - t1);
						}
				r.at(l, k, t) = -acc;
			}
	return r;
}

TriSeries TriSeries::specialized(i64 p) const {
	TriSeries r(K_);
	for (size_t i = 0; i < c_.size(); ++i)
		r.c_[i] = c_[i].evaluate(p);
	return r;
}

namespace {

PolyCoeff p_to(unsigned e, std::optional<i64> p) {
	return p ? PolyCoeff(checked_pow(*p, e)) : PolyCoeff::p_power(e);
}

} // namespace

PolyCoeff a_pp_poly(unsigned k, unsigned l, std::optional<i64> p) {
	unsigned low = std::min(k, l);
	if (low % 2)
		return {};
	return p_to(low / 2, p);
}

std::vector<std::vector<PolyCoeff>> f_A2_series(int K, std::optional<i64> p) {
	if (K < 0)
		throw std::domain_error("series degree must be nonnegative");
	std::vector<std::vector<PolyCoeff>> f(static_cast<size_t>(K + 1), std::vector<PolyCoeff>(static_cast<size_t>(K + 1)));
	for (int k = 0; k <= K; ++k)
		for (int l = 0; l <= K; ++l)
			f[static_cast<size_t>(k)][static_cast<size_t>(l)] = a_pp_poly(static_cast<unsigned>(k), static_cast<unsigned>(l), p);
	return f;
}

TriSeries f_A3_expand(int K, std::optional<i64> p) {
	auto term = [&](i64 c, unsigned pe, int l, int k, int t) {
		return TriSeries::monomial(K, p_to(pe, p) * PolyCoeff(c), l, k, t);
	};
	TriSeries num = term(1, 0, 0, 0, 0) + term(-1, 0, 1, 1, 0) + term(-1, 0, 0, 1, 1) + term(1, 0, 1, 1, 1) +
	                term(1, 1, 1, 2, 1) + term(-1, 1, 2, 2, 1) + term(-1, 1, 1, 2, 2) + term(1, 1, 2, 3, 2);
	TriSeries one = TriSeries::one(K);
	TriSeries den = (one - term(1, 0, 1, 0, 0)) * (one - term(1, 0, 0, 1, 0)) * (one - term(1, 0, 0, 0, 1)) *
	                (one - term(1, 1, 0, 2, 2)) * (one - term(1, 1, 2, 2, 0)) * (one - term(1, 2, 2, 2, 2));
	return num * den.inverse();
}

TriSeries f_A3_convolution(int K, std::optional<i64> p) {
	auto f = f_A2_series(K, p);
	TriSeries paired(K);
	for (int l = 0; l <= K; ++l)
		for (int k = 0; k <= K; ++k)
			for (int t = 0; t <= K; ++t)
				paired.at(l, k, t) = f[static_cast<size_t>(k)][static_cast<size_t>(l)] * f[static_cast<size_t>(k)][static_cast<size_t>(t)];
	TriSeries shift = TriSeries::one(K) - TriSeries::monomial(K, p_to(1, p), 1, 2, 1);
	return paired * shift.inverse();
}

PPartReport thm44_check(int K, std::optional<i64> p) {
	TriSeries lhs = f_A3_expand(K, p);
	TriSeries rhs = f_A3_convolution(K, p);
	PPartReport rep;
	rep.K = K;
	for (int l = 0; l <= K && rep.equal; ++l)
		for (int k = 0; k <= K && rep.equal; ++k)
			for (int t = 0; t <= K && rep.equal; ++t)
				if (!(lhs.at(l, k, t) == rhs.at(l, k, t))) {
					rep.equal = false;
					rep.first_mismatch = {l, k, t};
					rep.expand_value = lhs.at(l, k, t);
					rep.convolution_value = rhs.at(l, k, t);
				}
	return rep;
}

std::optional<std::array<int, 3>> compare_with_wmds(i64 p, int K) {
	TriSeries conv = f_A3_convolution(K, p);
	for (int l = 0; l <= K; ++l)
		for (int k = 0; k <= K; ++k)
			for (int t = 0; t <= K; ++t) {
				i64 expected = a_coeff3(checked_pow(p, static_cast<unsigned>(k)), checked_pow(p, static_cast<unsigned>(l)),
				                        checked_pow(p, static_cast<unsigned>(t)));
				if (conv.at(l, k, t).evaluate(p) != expected)
					return std::array<int, 3>{l, k, t};
			}
	return std::nullopt;
}

} // namespace cubezeta
