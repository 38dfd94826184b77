#pragma once

// 2x2x2 integer cubes under B'_2(Z) x B'_2(Z) x SL_2(Z).
//
// A cube is stored by its front face [[a, b], [c, d]] and back face
// [[e, f], [g, h]]. The three slicings pair (front, back), (left, right)
// and (up, down); the k-th factor of the group acts on the k-th pair.

#include "cubezeta/arith.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace cubezeta {

struct Cube {
	i64 a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0, h = 0;

	std::array<i64, 8> entries() const { return {a, b, c, d, e, f, g, h}; }
	static Cube from_entries(const std::array<i64, 8>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]}; }
	i64 max_abs_entry() const;
	Cube scaled(i64 k) const;

	bool operator==(const Cube&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Cube& cube);

// "[a,b,c,d,e,f,g,h]"
std::string to_json_array(const Cube& cube);
// "a b c d e f g h"
std::string to_text_line(const Cube& cube);
Cube cube_from_text_line(const std::string& line);

struct CubeHash {
	size_t operator()(const Cube& cube) const noexcept;
};

// a u^2 + b u v + c v^2
struct BinaryQuadraticForm {
	i64 a = 0, b = 0, c = 0;

	i64 disc() const;
	i64 content() const { return gcd64(a, b, c); }
	bool is_primitive() const { return content() == 1; }
	bool operator==(const BinaryQuadraticForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const BinaryQuadraticForm& q);

struct InvariantTriple {
	i64 D = 0; // discriminant
	i64 m = 0; // det of the front face
	i64 n = 0; // det of the left face
	bool operator==(const InvariantTriple&) const = default;
};

// Q_i(u, v) = det(M_i u - N_i v) for the three slicings.
std::array<BinaryQuadraticForm, 3> forms(const Cube& cube);
InvariantTriple invariants(const Cube& cube);

bool is_semistable(const Cube& cube);
bool is_projective(const Cube& cube);

struct Mat2 {
	i64 a = 1, b = 0, c = 0, d = 1; // [[a, b], [c, d]]

	i64 det() const;
	Mat2 operator*(const Mat2& o) const;
	bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
	bool operator==(const Mat2&) const = default;
};

// [[1, 0], [k, 1]] in the first factor.
struct Factor1Shift {
	i64 k = 0;
};
// [[1, 0], [k, 1]] in the second factor.
struct Factor2Shift {
	i64 k = 0;
};
// Any determinant-one matrix in the third factor.
struct Factor3Matrix {
	Mat2 m;
};

using GroupElement = std::variant<Factor1Shift, Factor2Shift, Factor3Matrix>;
// Applied left to right: word[0] acts first.
using GroupWord = std::vector<GroupElement>;

Cube act(const GroupElement& g, const Cube& cube);
Cube act(const GroupWord& word, const Cube& cube);

// Standard generators of SL_2(Z): S = [[0, -1], [1, 0]] and T = [[1, 1], [0, 1]].
Mat2 sl2_S();
Mat2 sl2_T();

struct OracleResult {
	i64 count = 0;           // components meeting the inner box
	i64 count_wider = 0;     // same with slack + 1
	bool stable = false;     // count == count_wider
	i64 cubes_enumerated = 0;
};

// Number of group orbits of cubes with disc = D, |det front| = m and
// |det left| = n, found by bounded-box orbit closure.
//
// Every orbit meets the slice {c = 0, a > 0} (move the column (a, c) to
// (gcd, 0) with the third factor); the part of the group preserving the
// slice is generated by the two lower shifts and the upper shear in the
// third factor. The oracle enumerates slice cubes with entries in
// [-entry_bound - slack, entry_bound + slack], joins cubes related by a
// single generator move that stays in that box, and counts the components
// that contain a cube inside [-entry_bound, entry_bound]. The computation is
// repeated with slack + 1 and the result is flagged stable when both agree.
OracleResult orbit_count_oracle(i64 D, i64 m, i64 n, i64 entry_bound, i64 slack);

// The same closure over the whole box [-R, R]^8 (R = entry_bound + slack)
// with the full generator set: lower shifts +-1 in the first two factors and
// S^{+-1}, T^{+-1} in the third. Cost grows like R^5, so this is for small
// invariants only.
OracleResult orbit_count_oracle_full(i64 D, i64 m, i64 n, i64 entry_bound, i64 slack);

// Default inner box used by the CLI and the acceptance run.
i64 default_oracle_bound(i64 D, i64 m, i64 n);

// True iff no group element other than the identity that is reachable by a
// word of at most word_length generators fixes the cube. Precondition: the
// cube is semistable.
bool stabilizer_trivial(const Cube& cube, int word_length);

} // namespace cubezeta
