// Acceptance run: one PASS/FAIL line per criterion.
//
//   cubezeta_acceptance            all criteria
//   cubezeta_acceptance 3 5        selected criteria
//
// Exit status is 0 iff every selected criterion passed. All comparisons are
// exact integer or rational equality.

#include "cubezeta/congruence.hpp"
#include "cubezeta/cube.hpp"
#include "cubezeta/identities.hpp"
#include "cubezeta/orbits.hpp"
#include "cubezeta/parallel.hpp"
#include "cubezeta/ppart.hpp"
#include "cubezeta/quadring.hpp"
#include "cubezeta/wmds.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cubezeta;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;
	std::vector<std::string> info;
};

std::string join_index(std::initializer_list<i64> xs) {
	std::ostringstream os;
	os << '(';
	bool first = true;
	for (i64 x : xs) {
		if (!first)
			os << ',';
		os << x;
		first = false;
	}
	os << ')';
	return os.str();
}

// Keeps the lexicographically first failing index from parallel workers.
class FirstFailure {
public:
	void record(size_t index, std::string what) {
		std::lock_guard lock(mu_);
		++count_;
		if (index < index_) {
			index_ = index;
			what_ = std::move(what);
		}
	}
	size_t count() const { return count_; }
	const std::string& what() const { return what_; }

private:
	std::mutex mu_;
	size_t index_ = SIZE_MAX;
	size_t count_ = 0;
	std::string what_;
};

std::vector<i64> discriminants_up_to(i64 bound) {
	std::vector<i64> out;
	for (i64 D = -bound; D <= bound; ++D)
		if (D != 0 && is_discriminant_residue(D))
			out.push_back(D);
	return out;
}

Outcome criterion1() {
	struct Cell {
		i64 D, m, n;
	};
	std::vector<Cell> cells;
	for (i64 D : discriminants_up_to(60))
		for (i64 m = 1; m <= 5; ++m)
			for (i64 n = 1; n <= 5; ++n)
				cells.push_back({D, m, n});
	FirstFailure fail;
	std::atomic<size_t> unstable{0};
	parallel_for(cells.size(), default_thread_count(), [&](size_t i) {
		auto [D, m, n] = cells[i];
		OracleResult r;
		for (i64 slack = 2; slack <= 8; ++slack) {
			r = orbit_count_oracle(D, m, n, default_oracle_bound(D, m, n), slack);
			if (r.stable)
				break;
		}
		i64 b = B(D, m, n);
		if (!r.stable)
			++unstable;
		if (!r.stable || r.count != b)
			fail.record(i, "B" + join_index({D, m, n}) + "=" + std::to_string(b) + " oracle=" + std::to_string(r.count) +
			                   (r.stable ? "" : " (unstable)"));
	});
	Outcome o;
	o.pass = fail.count() == 0;
	o.detail = std::to_string(cells.size()) + " triples, 0<|D|<=60, m,n<=5, slack 2..8; " + std::to_string(fail.count()) + " mismatches, " +
	           std::to_string(unstable.load()) + " unstable";
	if (!o.pass)
		o.detail += "; first: " + fail.what();
	return o;
}

Outcome criterion2() {
	std::vector<i64> Ds;
	for (i64 D : discriminants_up_to(200))
		if (D != 1 && fundamental_discriminant(D) == D)
			Ds.push_back(D);
	FirstFailure fail;
	parallel_for(Ds.size(), default_thread_count(), [&](size_t i) {
		i64 D = Ds[i];
		for (i64 m = 1; m <= 40; ++m)
			for (i64 n = 1; n <= 40; ++n) {
				i64 lhs = B(D, m, n);
				i64 rhs = sqrt_count(D, 4 * m) * sqrt_count(D, 4 * n);
				if (lhs != rhs) {
					fail.record(i, "B" + join_index({D, m, n}) + "=" + std::to_string(lhs) + " vs " + std::to_string(rhs));
					return;
				}
			}
	});
	Outcome o;
	o.pass = fail.count() == 0;
	o.detail = std::to_string(Ds.size()) + " fundamental D, |D|<=200, m,n<=40; " + std::to_string(fail.count()) + " failing D";
	if (!o.pass)
		o.detail += "; first: " + fail.what();
	return o;
}

std::vector<i64> odd_discriminants(i64 bound, bool one_mod_four) {
	std::vector<i64> out;
	for (i64 D = -bound; D <= bound; ++D)
		if (D % 2 != 0 && (!one_mod_four || mod_floor(D, 4) == 1))
			out.push_back(D);
	return out;
}

std::string mismatch_text(i64 D, const IdentityReport& r) {
	std::ostringstream os;
	os << "D=" << D << " at (";
	for (size_t k = 0; k < r.first_mismatch.size(); ++k)
		os << (k ? "," : "") << r.first_mismatch[k];
	os << ") direct=" << r.lhs_value << " stated=" << r.rhs_value;
	return os.str();
}

Outcome criterion3() {
	auto Ds = odd_discriminants(297, true);
	std::vector<IdentityReport> reps(Ds.size());
	parallel_for(Ds.size(), default_thread_count(), [&](size_t i) { reps[i] = verify_thm12(Ds[i], 64); });
	size_t failing = 0, corrected_failing = 0;
	std::string first;
	for (size_t i = 0; i < Ds.size(); ++i) {
		if (!reps[i].equal && failing++ == 0)
			first = mismatch_text(Ds[i], reps[i]);
		if (!reps[i].corrected_equal.value_or(false))
			++corrected_failing;
	}
	Outcome o;
	o.pass = failing == 0;
	o.detail = std::to_string(Ds.size()) + " odd D = 1 mod 4, |D|<=297, m,n<=64; " + std::to_string(failing) + " failing D";
	if (!o.pass)
		o.detail += "; first: " + first;
	o.info.push_back("with 2 zeta(s)/zeta(2s) per variable in place of P~2 zeta: " + std::to_string(Ds.size() - corrected_failing) +
	                 "/" + std::to_string(Ds.size()) + " D agree");
	return o;
}

Outcome criterion4() {
	Outcome o;
	PPartReport r = thm44_check(8);
	if (!r.equal) {
		o.pass = false;
		auto [l, k, t] = r.first_mismatch;
		o.detail = "expansion differs from convolution at (l,k,t)=" + join_index({l, k, t}) + ": " + r.expand_value.to_string() + " vs " +
		           r.convolution_value.to_string();
		return o;
	}
	for (i64 p : {2, 3, 5}) {
		if (auto bad = compare_with_wmds(p, 6)) {
			o.pass = false;
			o.detail = "p=" + std::to_string(p) + " differs from a(p^k,p^l,p^t) at (l,k,t)=" + join_index({(*bad)[0], (*bad)[1], (*bad)[2]});
			return o;
		}
		if (!(f_A3_expand(8).specialized(p) == f_A3_expand(8, p))) {
			o.pass = false;
			o.detail = "specialising at p=" + std::to_string(p) + " does not commute with the expansion";
			return o;
		}
	}
	o.detail = "polynomial identity for l,k,t<=8; p=2,3,5 match a(p^k,p^l,p^t) for k,l,t<=6";
	return o;
}

Outcome criterion5() {
	struct Cell {
		i64 D, a1, a2;
	};
	std::vector<Cell> cells;
	for (i64 D : discriminants_up_to(500))
		for (i64 a1 = 1; a1 <= 30; ++a1)
			for (i64 a2 = 1; a2 <= 30; ++a2)
				cells.push_back({D, a1, a2});
	FirstFailure fail;
	std::atomic<size_t> exact_fail{0};
	parallel_for(cells.size(), default_thread_count(), [&](size_t i) {
		auto [D, a1, a2] = cells[i];
		FiberSumReport r = verify_thm13(D, a1, a2);
		if (!r.equal())
			fail.record(i, join_index({D, a1, a2}) + ": " + std::to_string(r.pairs) + " pairs, sigma_1 sum " + std::to_string(r.weighted_sum) +
			                   ", B=" + std::to_string(r.B_value));
		if (!r.exact_equal())
			++exact_fail;
	});
	FiberSumReport worked = verify_thm13(45, 3, 3);
	Outcome o;
	bool worked_ok = worked.pairs == 4 && worked.weighted_sum == 16 && worked.B_value == 16;
	o.pass = fail.count() == 0 && worked_ok;
	o.detail = std::to_string(cells.size()) + " triples, |D|<=500, a1,a2<=30; " + std::to_string(fail.count()) + " mismatches";
	if (fail.count())
		o.detail += "; first: " + fail.what();
	o.detail += std::string("; (45,3,3): ") + std::to_string(worked.pairs) + " pairs, sum " + std::to_string(worked.weighted_sum) +
	            ", B=" + std::to_string(worked.B_value);
	o.info.push_back("orbit-count fiber from slice reduction: " + std::to_string(cells.size() - exact_fail.load()) + "/" +
	                 std::to_string(cells.size()) + " triples sum to B");
	return o;
}

Outcome criterion6() {
	FirstFailure fail;
	std::vector<i64> ds;
	for (i64 d = -100; d <= 100; ++d)
		ds.push_back(d);
	parallel_for(ds.size(), default_thread_count(), [&](size_t i) {
		i64 d = ds[i];
		for (i64 a = 1; a <= 256; ++a) {
			i64 fast = sqrt_count(d, a), slow = sqrt_count_direct(d, a);
			if (fast != slow) {
				fail.record(i, "A(" + std::to_string(d) + "," + std::to_string(a) + ")=" + std::to_string(fast) + " direct " + std::to_string(slow));
				return;
			}
		}
	});
	FirstFailure mult;
	std::vector<i64> ds2;
	for (i64 d = -200; d <= 200; ++d)
		ds2.push_back(d);
	parallel_for(ds2.size(), default_thread_count(), [&](size_t i) {
		i64 d = ds2[i];
		for (i64 a = 1; a <= 200; ++a)
			for (i64 b = a; b <= 200; ++b)
				if (std::gcd(a, b) == 1 && sqrt_count(d, a * b) != sqrt_count(d, a) * sqrt_count(d, b)) {
					mult.record(i, "d=" + std::to_string(d) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
					return;
				}
	});
	Outcome o;
	o.pass = fail.count() == 0 && mult.count() == 0;
	o.detail = "closed form vs enumeration for |d|<=100, a<=256: " + std::to_string(fail.count()) + " failing d; multiplicativity for |d|<=200, coprime a,b<=200: " +
	           std::to_string(mult.count()) + " failing d";
	if (fail.count())
		o.detail += "; first: " + fail.what();
	if (mult.count())
		o.detail += "; first: " + mult.what();
	return o;
}

Outcome criterion7() {
	Outcome o;
	// the A(D, 4m) series identity as stated, every odd D
	auto Ds = odd_discriminants(297, false);
	std::vector<IdentityReport> reps(Ds.size());
	parallel_for(Ds.size(), default_thread_count(), [&](size_t i) { reps[i] = verify_prop25(Ds[i], 100); });
	size_t failing = 0, corrected_failing = 0;
	std::string first;
	for (size_t i = 0; i < Ds.size(); ++i) {
		if (!reps[i].equal && failing++ == 0)
			first = mismatch_text(Ds[i], reps[i]);
		if (!reps[i].corrected_equal.value_or(false))
			++corrected_failing;
	}
	bool prop25_ok = failing == 0;
	o.info.push_back("prop25 with 2 zeta(s)/zeta(2s) in place of P~2 zeta: " + std::to_string(Ds.size() - corrected_failing) + "/" +
	                 std::to_string(Ds.size()) + " D agree");

	// Report mode: the odd part must agree with direct counts; any
	// disagreement must be confined to a documented 2-factor finding.
	auto ds = discriminants_up_to(200);
	std::vector<IdentityReport> r21(ds.size()), r24(ds.size());
	parallel_for(ds.size(), default_thread_count(), [&](size_t i) {
		r21[i] = verify_prop21(ds[i], 200);
		r24[i] = verify_cor24(ds[i], 200);
	});
	size_t unexplained = 0, findings21 = 0, findings24 = 0, fixed21 = 0, fixed24 = 0;
	auto audit = [&](const IdentityReport& r, size_t& findings, size_t& fixed) {
		bool odd_bad = false, two_finding = false;
		for (const auto& f : r.findings) {
			if (f.rfind("odd part", 0) == 0)
				odd_bad = true;
			else
				two_finding = true;
		}
		if (odd_bad || (!r.equal && !two_finding))
			++unexplained;
		if (!r.equal)
			++findings;
		if (r.corrected_equal.value_or(false))
			++fixed;
	};
	for (size_t i = 0; i < ds.size(); ++i) {
		audit(r21[i], findings21, fixed21);
		audit(r24[i], findings24, fixed24);
	}
	bool report_ok = unexplained == 0;
	o.pass = prop25_ok && report_ok;
	o.detail = "prop25 stated, " + std::to_string(Ds.size()) + " odd D, |D|<=297, M=100: " + std::to_string(failing) + " failing D";
	if (!prop25_ok)
		o.detail += " (first: " + first + ")";
	o.detail += "; report mode, " + std::to_string(ds.size()) + " d, M=200: " + std::to_string(unexplained) + " unexplained";
	o.info.push_back("prop21 2-factor findings: " + std::to_string(findings21) + "/" + std::to_string(ds.size()) +
	                 " d; corrected form agrees for " + std::to_string(fixed21));
	o.info.push_back("cor24 2-factor findings: " + std::to_string(findings24) + "/" + std::to_string(ds.size()) +
	                 " d; corrected form agrees for " + std::to_string(fixed24));
	return o;
}

Cube random_cube(std::mt19937_64& rng, i64 R) {
	std::uniform_int_distribution<i64> U(-R, R);
	std::array<i64, 8> v;
	for (auto& x : v)
		x = U(rng);
	return Cube::from_entries(v);
}

Mat2 random_sl2(std::mt19937_64& rng, i64 R) {
	std::uniform_int_distribution<i64> U(-R, R);
	for (;;) {
		Mat2 g{U(rng), U(rng), U(rng), U(rng)};
		if (g.det() == 1)
			return g;
	}
}

GroupWord random_word(std::mt19937_64& rng, int max_len, i64 R) {
	std::uniform_int_distribution<int> len(0, max_len), kind(0, 2);
	std::uniform_int_distribution<i64> U(-R, R);
	GroupWord w;
	int L = len(rng);
	for (int i = 0; i < L; ++i) {
		switch (kind(rng)) {
		case 0: w.push_back(Factor1Shift{U(rng)}); break;
		case 1: w.push_back(Factor2Shift{U(rng)}); break;
		default: w.push_back(Factor3Matrix{random_sl2(rng, R)}); break;
		}
	}
	return w;
}

Outcome criterion8() {
	std::mt19937_64 rng(20240611);
	Outcome o;
	int stab_checked = 0, stab_fail = 0;
	while (stab_checked < 100) {
		Cube A = random_cube(rng, 5);
		if (!is_semistable(A))
			continue;
		++stab_checked;
		if (!stabilizer_trivial(A, 4))
			++stab_fail;
	}
	int disc_fail = 0;
	for (int i = 0; i < 10000; ++i) {
		Cube A = random_cube(rng, 20);
		auto q = forms(A);
		i64 D = q[0].disc();
		if (q[1].disc() != D || q[2].disc() != D || !is_discriminant_residue(D))
			++disc_fail;
	}
	int pair_checked = 0, pair_fail = 0;
	while (pair_checked < 1000) {
		Cube A = random_cube(rng, 6);
		if (!is_semistable(A))
			continue;
		++pair_checked;
		Cube B2 = act(random_word(rng, 4, 3), A);
		if (!(pair_from_cube(A) == pair_from_cube(B2)))
			++pair_fail;
	}
	o.pass = stab_fail == 0 && disc_fail == 0 && pair_fail == 0;
	o.detail = "stabilizer: " + std::to_string(stab_fail) + "/100 nontrivial; discriminants: " + std::to_string(disc_fail) +
	           "/10000 bad; pair invariance: " + std::to_string(pair_fail) + "/1000 bad";
	return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
	static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
		{"orbit count formula vs bounded orbit-closure oracle", criterion1},
		{"fundamental discriminants: B = A(D,4m) A(D,4n)", criterion2},
		{"B grid = 4 (1-4^-s) zeta convolved with twisted a(D,m,n), per variable", criterion3},
		{"A3 p-part: rational function expansion = convolution", criterion4},
		{"ideal-class pairs weighted by sigma_1(gcd(D1,a1,a2)) sum to B", criterion5},
		{"square-root counting core", criterion6},
		{"Dirichlet series identities for A(D,4m) and A(d,a)", criterion7},
		{"structural properties of cubes", criterion8},
	};
	return list;
}

} // namespace

int main(int argc, char** argv) {
	std::vector<int> selected;
	for (int i = 1; i < argc; ++i) {
		try {
			selected.push_back(std::stoi(argv[i]));
		} catch (const std::exception&) {
			std::cerr << "usage: cubezeta_acceptance [criterion ...]\n";
			return 2;
		}
	}
	if (selected.empty())
		for (int i = 1; i <= static_cast<int>(criteria().size()); ++i)
			selected.push_back(i);
	bool all = true;
	for (int id : selected) {
		if (id < 1 || id > static_cast<int>(criteria().size())) {
			std::cerr << "unknown criterion " << id << "\n";
			return 2;
		}
		const auto& [name, fn] = criteria()[static_cast<size_t>(id - 1)];
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = fn();
		} catch (const std::exception& e) {
			o.pass = false;
			o.detail = std::string("exception: ") + e.what();
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		char timing[32];
		std::snprintf(timing, sizeof timing, "%.1fs", secs);
		std::cout << (o.pass ? "PASS" : "FAIL") << " C" << id << " " << name << " [" << timing << "]: " << o.detail << "\n";
		for (const auto& line : o.info)
			std::cout << "     info: " << line << "\n";
		all = all && o.pass;
	}
	return all ? 0 : 1;
}
