#include "cubezeta/cube.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cubezeta {

i64 Cube::max_abs_entry() const {
	i64 r = 0;
	for (i64 v : entries())
		r = std::max(r, abs64(v));
	return r;
}

Cube Cube::scaled(i64 k) const {
	auto v = entries();
	for (auto& x : v)
		x = checked_mul(x, k);
	return from_entries(v);
}

std::ostream& operator<<(std::ostream& os, const Cube& cube) {
	return os << to_json_array(cube);
}

std::string to_json_array(const Cube& cube) {
	std::string s = "[";
	auto v = cube.entries();
	for (size_t i = 0; i < v.size(); ++i) {
		if (i)
			s += ',';
		s += std::to_string(v[i]);
	}
	return s + "]";
}

std::string to_text_line(const Cube& cube) {
	std::string s;
	auto v = cube.entries();
	for (size_t i = 0; i < v.size(); ++i) {
		if (i)
			s += ' ';
		s += std::to_string(v[i]);
	}
	return s;
}

Cube cube_from_text_line(const std::string& line) {
	std::istringstream in(line);
	std::array<i64, 8> v{};
	for (auto& x : v)
		if (!(in >> x))
			throw std::invalid_argument("expected eight integers: " + line);
	std::string rest;
	if (in >> rest)
		throw std::invalid_argument("trailing input after eight integers: " + line);
	return Cube::from_entries(v);
}

size_t CubeHash::operator()(const Cube& cube) const noexcept {
	u64 h = 0x9e3779b97f4a7c15ull;
	for (i64 v : cube.entries()) {
		h ^= static_cast<u64>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
	}
	return static_cast<size_t>(h);
}

i64 BinaryQuadraticForm::disc() const {
	return narrow(i128(b) * b - i128(4) * a * c);
}

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q) {
	return os << '(' << q.a << ", " << q.b << ", " << q.c << ')';
}

namespace {

i64 det2(i64 p, i64 q, i64 r, i64 s) {
	return narrow(i128(p) * s - i128(q) * r);
}

i64 sum4(i128 w, i128 x, i128 y, i128 z) {
	return narrow(w + x + y + z);
}

} // namespace

std::array<BinaryQuadraticForm, 3> forms(const Cube& A) {
	auto [a, b, c, d, e, f, g, h] = A;
	i128 ah = i128(a) * h, bg = i128(b) * g, cf = i128(c) * f, de = i128(d) * e;
	return {{
		{det2(a, b, c, d), sum4(-ah, bg, cf, -de), det2(e, f, g, h)},
		{det2(a, c, e, g), sum4(-ah, -bg, cf, de), det2(b, d, f, h)},
		{det2(a, e, b, f), sum4(-ah, bg, -cf, de), det2(c, g, d, h)},
	}};
}

InvariantTriple invariants(const Cube& A) {
	auto q = forms(A);
	return {q[0].disc(), q[0].a, q[1].a};
}

bool is_semistable(const Cube& A) {
	auto inv = invariants(A);
	return inv.D != 0 && inv.m != 0 && inv.n != 0;
}

bool is_projective(const Cube& A) {
	for (const auto& q : forms(A))
		if (!q.is_primitive())
			return false;
	return true;
}

i64 Mat2::det() const {
	return det2(a, b, c, d);
}

Mat2 Mat2::operator*(const Mat2& o) const {
	return {
		narrow(i128(a) * o.a + i128(b) * o.c),
		narrow(i128(a) * o.b + i128(b) * o.d),
		narrow(i128(c) * o.a + i128(d) * o.c),
		narrow(i128(c) * o.b + i128(d) * o.d),
	};
}

Mat2 sl2_S() { return {0, -1, 1, 0}; }
Mat2 sl2_T() { return {1, 1, 0, 1}; }

namespace {

i64 lin(i64 x, i64 p, i64 y, i64 q) {
	return narrow(i128(x) * p + i128(y) * q);
}

struct Actor {
	const Cube& A;

	Cube operator()(const Factor1Shift& s) const {
		// back face += k * front face
		return {A.a, A.b, A.c, A.d,
		        lin(A.e, 1, A.a, s.k), lin(A.f, 1, A.b, s.k), lin(A.g, 1, A.c, s.k), lin(A.h, 1, A.d, s.k)};
	}

	Cube operator()(const Factor2Shift& s) const {
		// right face (b, d, f, h) += k * left face (a, c, e, g)
		return {A.a, lin(A.b, 1, A.a, s.k), A.c, lin(A.d, 1, A.c, s.k),
		        A.e, lin(A.f, 1, A.e, s.k), A.g, lin(A.h, 1, A.g, s.k)};
	}

	Cube operator()(const Factor3Matrix& s) const {
		const Mat2& m = s.m;
		if (m.det() != 1)
			throw std::domain_error("third factor needs a determinant-one matrix");
		// up face (a, e, b, f) and down face (c, g, d, h)
		Cube r;
		r.a = lin(A.a, m.a, A.c, m.b);
		r.e = lin(A.e, m.a, A.g, m.b);
		r.b = lin(A.b, m.a, A.d, m.b);
		r.f = lin(A.f, m.a, A.h, m.b);
		r.c = lin(A.a, m.c, A.c, m.d);
		r.g = lin(A.e, m.c, A.g, m.d);
		r.d = lin(A.b, m.c, A.d, m.d);
		r.h = lin(A.f, m.c, A.h, m.d);
		return r;
	}
};

} // namespace

Cube act(const GroupElement& g, const Cube& cube) {
	return std::visit(Actor{cube}, g);
}

Cube act(const GroupWord& word, const Cube& cube) {
	Cube r = cube;
	for (const auto& g : word)
		r = act(g, r);
	return r;
}

namespace {

class DisjointSets {
public:
	explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t(0)); }

	size_t find(size_t x) {
		while (parent_[x] != x) {
			parent_[x] = parent_[parent_[x]];
			x = parent_[x];
		}
		return x;
	}

	void unite(size_t x, size_t y) {
		x = find(x);
		y = find(y);
		if (x != y)
			parent_[std::max(x, y)] = std::min(x, y);
	}

private:
	std::vector<size_t> parent_;
};

bool in_box(const Cube& A, i64 R) {
	return A.max_abs_entry() <= R;
}

// Components of the graph on `cubes` (edges from `moves`) that contain a
// cube within the inner box.
template <class Moves>
i64 count_components(const std::vector<Cube>& cubes, i64 inner, Moves moves) {
	std::unordered_map<Cube, size_t, CubeHash> index;
	index.reserve(cubes.size() * 2);
	for (size_t i = 0; i < cubes.size(); ++i)
		index.emplace(cubes[i], i);
	DisjointSets sets(cubes.size());
	for (size_t i = 0; i < cubes.size(); ++i) {
		moves(cubes[i], [&](const Cube& B) {
			auto it = index.find(B);
			if (it != index.end())
				sets.unite(i, it->second);
		});
	}
	std::set<size_t> roots;
	for (size_t i = 0; i < cubes.size(); ++i)
		if (in_box(cubes[i], inner))
			roots.insert(sets.find(i));
	return static_cast<i64>(roots.size());
}

void check_oracle_args(i64 D, i64 m, i64 n, i64 entry_bound, i64 slack) {
	if (D == 0 || m == 0 || n == 0)
		throw std::domain_error("orbit oracle needs nonzero D, m, n");
	if (entry_bound < 1 || slack < 1)
		throw std::domain_error("orbit oracle needs positive entry bound and slack");
}

// Cubes with c = 0, a > 0, all entries in [-R, R] and invariants
// (D, +-M, +-N).
std::vector<Cube> slice_cubes(i64 D, i64 M, i64 N, i64 R) {
	std::vector<Cube> out;
	i64 G = std::gcd(M, N);
	for (i64 a = 1; a <= std::min(G, R); ++a) {
		if (G % a)
			continue;
		for (i64 sm : {1, -1}) {
			for (i64 sn : {1, -1}) {
				i64 m = sm * M, n = sn * N;
				i64 d = m / a, g = n / a;
				if (abs64(d) > R || abs64(g) > R)
					continue;
				i128 four_m = i128(4) * m;
				for (i64 b = -R; b <= R; ++b) {
					for (i64 e = -R; e <= R; ++e) {
						for (i64 h = -R; h <= R; ++h) {
							i128 x = -i128(a) * h + i128(b) * g - i128(d) * e;
							i128 num = x * x - D;
							if (num % four_m)
								continue;
							i128 s = num / four_m; // s = eh - fg
							i128 fg = i128(e) * h - s;
							if (fg % g)
								continue;
							i128 f = fg / g;
							if (f > R || f < -R)
								continue;
							out.push_back({a, b, 0, d, e, static_cast<i64>(f), g, h});
						}
					}
				}
			}
		}
	}
	return out;
}

i64 slice_count(i64 D, i64 M, i64 N, i64 inner, i64 R, i64& enumerated) {
	std::vector<Cube> cubes = slice_cubes(D, M, N, R);
	enumerated += static_cast<i64>(cubes.size());
	return count_components(cubes, inner, [](const Cube& A, auto&& visit) {
		// lower shift, first factor: (e, f, h) += (a, b, d)
		visit(Cube{A.a, A.b, 0, A.d, A.e + A.a, A.f + A.b, A.g, A.h + A.d});
		// lower shift, second factor: (b, f, h) += (a, e, g)
		visit(Cube{A.a, A.b + A.a, 0, A.d, A.e, A.f + A.e, A.g, A.h + A.g});
		// upper shear, third factor: (b, e, f) += (d, g, h)
		visit(Cube{A.a, A.b + A.d, 0, A.d, A.e + A.g, A.f + A.h, A.g, A.h});
	});
}

std::vector<Cube> box_cubes(i64 D, i64 M, i64 N, i64 R) {
	std::vector<Cube> out;
	for (i64 a = -R; a <= R; ++a)
		for (i64 b = -R; b <= R; ++b)
			for (i64 c = -R; c <= R; ++c)
				for (i64 d = -R; d <= R; ++d) {
					i64 m = a * d - b * c;
					if (m != M && m != -M)
						continue;
					for (i64 e = -R; e <= R; ++e)
						for (i64 g = -R; g <= R; ++g) {
							i64 n = a * g - c * e;
							if (n != N && n != -N)
								continue;
							for (i64 f = -R; f <= R; ++f)
								for (i64 h = -R; h <= R; ++h) {
									Cube A{a, b, c, d, e, f, g, h};
									if (forms(A)[0].disc() == D)
										out.push_back(A);
								}
						}
				}
	return out;
}

i64 box_count(i64 D, i64 M, i64 N, i64 inner, i64 R, i64& enumerated) {
	std::vector<Cube> cubes = box_cubes(D, M, N, R);
	enumerated += static_cast<i64>(cubes.size());
	const GroupElement gens[] = {Factor1Shift{1}, Factor2Shift{1}, Factor3Matrix{sl2_S()}, Factor3Matrix{sl2_T()}};
	return count_components(cubes, inner, [&](const Cube& A, auto&& visit) {
		for (const auto& g : gens)
			visit(act(g, A));
	});
}

} // namespace

OracleResult orbit_count_oracle(i64 D, i64 m, i64 n, i64 entry_bound, i64 slack) {
	check_oracle_args(D, m, n, entry_bound, slack);
	i64 M = abs64(m), N = abs64(n);
	OracleResult r;
	r.count = slice_count(D, M, N, entry_bound, checked_add(entry_bound, slack), r.cubes_enumerated);
	r.count_wider = slice_count(D, M, N, entry_bound, checked_add(entry_bound, slack + 1), r.cubes_enumerated);
	r.stable = r.count == r.count_wider;
	return r;
}

OracleResult orbit_count_oracle_full(i64 D, i64 m, i64 n, i64 entry_bound, i64 slack) {
	check_oracle_args(D, m, n, entry_bound, slack);
	i64 M = abs64(m), N = abs64(n);
	OracleResult r;
	r.count = box_count(D, M, N, entry_bound, checked_add(entry_bound, slack), r.cubes_enumerated);
	r.count_wider = box_count(D, M, N, entry_bound, checked_add(entry_bound, slack + 1), r.cubes_enumerated);
	r.stable = r.count == r.count_wider;
	return r;
}

i64 default_oracle_bound(i64 D, i64 m, i64 n) {
	// Slice reduction puts x in (-M, M], y in (-N, N] and e in [0, |g|), which
	// bounds |h| by (M + N) / 2, |b| by that plus M, and |f| by that plus
	// (M^2 + |D|) / 4M.
	i64 M = abs64(m), N = abs64(n);
	i64 mid = (M + N + 1) / 2;
	i64 s = (M * M + abs64(D) + 4 * M - 1) / (4 * M);
	return std::max({M + mid, mid + s, N}) + 1;
}

bool stabilizer_trivial(const Cube& cube, int word_length) {
	if (word_length < 0)
		throw std::domain_error("word length must be nonnegative");
	std::set<std::array<i64, 4>> seen{{1, 0, 0, 1}};
	std::vector<Mat2> frontier{Mat2{}};
	const Mat2 S = sl2_S(), T = sl2_T();
	const Mat2 third_gens[] = {S, Mat2{0, 1, -1, 0}, T, Mat2{1, -1, 0, 1}};
	std::vector<Mat2> all{Mat2{}};
	for (int step = 0; step < word_length; ++step) {
		std::vector<Mat2> next;
		for (const Mat2& x : frontier)
			for (const Mat2& s : third_gens) {
				Mat2 y = x * s;
				if (seen.insert({y.a, y.b, y.c, y.d}).second) {
					next.push_back(y);
					all.push_back(y);
				}
			}
		frontier = std::move(next);
	}
	const i64 L = word_length;
	for (i64 k1 = -L; k1 <= L; ++k1) {
		Cube A1 = act(Factor1Shift{k1}, cube);
		for (i64 k2 = -L; k2 <= L; ++k2) {
			Cube A2 = act(Factor2Shift{k2}, A1);
			for (const Mat2& g : all) {
				if (k1 == 0 && k2 == 0 && g.is_identity())
					continue;
				if (act(Factor3Matrix{g}, A2) == cube)
					return false;
			}
		}
	}
	return true;
}

} // namespace cubezeta
