// Command-line front end for the cubezeta library.

#include "cubezeta/congruence.hpp"
#include "cubezeta/cube.hpp"
#include "cubezeta/identities.hpp"
#include "cubezeta/orbits.hpp"
#include "cubezeta/parallel.hpp"
#include "cubezeta/ppart.hpp"
#include "cubezeta/quadring.hpp"
#include "cubezeta/wmds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cubezeta;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

struct Options {
	std::string format;
	unsigned threads = 0;
	std::string output;
};

class Emitter {
public:
	explicit Emitter(const std::string& path) {
		if (!path.empty()) {
			file_ = std::make_unique<std::ofstream>(path);
			if (!*file_)
				throw std::invalid_argument("cannot open output file: " + path);
		}
	}
	std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
	std::unique_ptr<std::ofstream> file_;
};

std::string fmt_or(const Options& o, const std::string& fallback) {
	return o.format.empty() ? fallback : o.format;
}

unsigned thread_count(const Options& o) {
	return o.threads > 0 ? o.threads : default_thread_count();
}

json report_json(const IdentityReport& r) {
	json j;
	for (const auto& [k, v] : r.params)
		j["params"][k] = v;
	j["status"] = r.equal ? "pass" : "fail";
	if (r.equal) {
		j["first_mismatch"] = nullptr;
	} else {
		json m;
		m["index"] = r.first_mismatch;
		m["lhs"] = r.lhs_value;
		m["rhs"] = r.rhs_value;
		j["first_mismatch"] = m;
	}
	if (!r.findings.empty())
		j["findings"] = r.findings;
	if (r.corrected_equal) {
		j["corrected_form"] = r.corrected_form;
		j["corrected_status"] = *r.corrected_equal ? "pass" : "fail";
	}
	return j;
}

std::vector<i64> discriminants(i64 lo, i64 hi, bool odd_only, bool one_mod_four) {
	std::vector<i64> out;
	for (i64 D = lo; D <= hi; ++D) {
		if (D == 0)
			continue;
		if (odd_only) {
			if (D % 2 == 0)
				continue;
			if (one_mod_four && mod_floor(D, 4) != 1)
				continue;
		} else if (!is_discriminant_residue(D)) {
			continue;
		}
		out.push_back(D);
	}
	return out;
}

// Runs per-discriminant identity reports and folds them into one document.
int emit_identity_reports(Emitter& em, const Options& o, const std::string& name, json params,
                          const std::vector<i64>& Ds, const std::function<IdentityReport(i64)>& fn) {
	std::vector<IdentityReport> reports(Ds.size());
	parallel_for(Ds.size(), thread_count(o), [&](size_t i) { reports[i] = fn(Ds[i]); });
	json doc;
	doc["schema"] = kSchema;
	doc["identity"] = name;
	doc["params"] = params;
	size_t failures = 0, corrected_failures = 0, corrected_known = 0;
	json first = nullptr;
	json findings = json::array();
	for (size_t i = 0; i < reports.size(); ++i) {
		const auto& r = reports[i];
		if (!r.equal) {
			++failures;
			if (first.is_null()) {
				first = report_json(r)["first_mismatch"];
				first["D"] = Ds[i];
			}
		}
		if (r.corrected_equal) {
			++corrected_known;
			if (!*r.corrected_equal)
				++corrected_failures;
		}
		for (const auto& f : r.findings)
			findings.push_back({{"D", Ds[i]}, {"finding", f}});
	}
	doc["status"] = failures == 0 ? "pass" : "fail";
	doc["checked"] = reports.size();
	doc["failures"] = failures;
	doc["first_mismatch"] = first;
	if (corrected_known) {
		doc["corrected_form"] = reports.front().corrected_form;
		doc["corrected_status"] = corrected_failures == 0 ? "pass" : "fail";
		doc["corrected_failures"] = corrected_failures;
	}
	if (!findings.empty())
		doc["findings"] = findings;
	em.out() << doc.dump(2) << "\n";
	return failures == 0 ? 0 : 1;
}

int run_count(Emitter& em, const Options& o, const std::string& kind, i64 D, i64 m, i64 n) {
	i64 v;
	if (kind == "A")
		v = sqrt_count(D, m);
	else if (kind == "B")
		v = B(D, m, n);
	else if (kind == "a")
		v = a_coeff(D, m);
	else if (kind == "a3")
		v = a_coeff3(D, m, n);
	else
		throw std::invalid_argument("unknown count kind: " + kind);
	if (fmt_or(o, "text") == "json")
		em.out() << json{{"schema", kSchema}, {"kind", kind}, {"D", D}, {"m", m}, {"n", n}, {"value", v}}.dump() << "\n";
	else
		em.out() << v << "\n";
	return 0;
}

int run_orbits(Emitter& em, const Options& o, i64 D, i64 m, i64 n, bool oracle, i64 bound, i64 slack) {
	i64 b = B(D, m, n);
	json doc;
	doc["schema"] = kSchema;
	doc["D"] = D;
	doc["m"] = m;
	doc["n"] = n;
	doc["B"] = b;
	json reps = json::array();
	for (i64 sm : {1, -1})
		for (i64 sn : {1, -1})
			for (const auto& p : congruence_pairs(D, sm * m, sn * n)) {
				Cube A = cube_from_invariants(p);
				reps.push_back({{"m", p.m}, {"n", p.n}, {"x", p.x}, {"y", p.y}, {"cube", A.entries()},
				                {"orbits", pair_orbit_count(p)}});
			}
	doc["representatives"] = reps;
	int status = 0;
	if (oracle) {
		if (bound <= 0)
			bound = default_oracle_bound(D, m, n);
		OracleResult r = orbit_count_oracle(D, m, n, bound, slack);
		doc["oracle"] = {{"count", r.count}, {"count_wider", r.count_wider}, {"stable", r.stable},
		                 {"entry_bound", bound}, {"slack", slack}, {"cubes", r.cubes_enumerated}};
		doc["status"] = (r.stable && r.count == b) ? "pass" : "fail";
		if (!(r.stable && r.count == b))
			status = 1;
	}
	if (fmt_or(o, "json") == "json") {
		em.out() << doc.dump(2) << "\n";
	} else {
		em.out() << "B(" << D << "," << m << "," << n << ") = " << b << "\n";
		for (const auto& r : reps)
			em.out() << "  x=" << r["x"] << " y=" << r["y"] << " m=" << r["m"] << " n=" << r["n"]
			         << " cube=" << r["cube"].dump() << " orbits=" << r["orbits"] << "\n";
		if (oracle)
			em.out() << "oracle " << doc["oracle"]["count"] << (doc["oracle"]["stable"].get<bool>() ? " (stable)" : " (unstable)")
			         << "\n";
	}
	return status;
}

int run_pairs(Emitter& em, const Options& o, i64 D, i64 m, i64 n) {
	auto pairs = congruence_pairs(D, m, n);
	if (fmt_or(o, "csv") == "json") {
		json arr = json::array();
		for (const auto& p : pairs)
			arr.push_back({{"D", D}, {"m", m}, {"n", n}, {"x", p.x}, {"y", p.y}, {"s", p.s}, {"t", p.t}});
		em.out() << arr.dump(2) << "\n";
	} else {
		em.out() << "D,m,n,x,y,s,t\n";
		for (const auto& p : pairs)
			em.out() << D << ',' << m << ',' << n << ',' << p.x << ',' << p.y << ',' << p.s << ',' << p.t << "\n";
	}
	return 0;
}

int run_ppart(Emitter& em, int K, std::optional<i64> p) {
	TriSeries s = f_A3_expand(K, p);
	em.out() << "l,k,t,poly\n";
	for (int l = 0; l <= K; ++l)
		for (int k = 0; k <= K; ++k)
			for (int t = 0; t <= K; ++t)
				em.out() << l << ',' << k << ',' << t << ',' << s.at(l, k, t).to_string() << "\n";
	return 0;
}

int run_verify_thm44(Emitter& em, int K) {
	json doc;
	doc["schema"] = kSchema;
	doc["identity"] = "thm44";
	doc["params"] = {{"kmax", K}};
	PPartReport r = thm44_check(K);
	bool ok = r.equal;
	if (r.equal) {
		doc["first_mismatch"] = nullptr;
	} else {
		doc["first_mismatch"] = {{"index", r.first_mismatch},
		                         {"expand", r.expand_value.to_string()},
		                         {"convolution", r.convolution_value.to_string()}};
	}
	json specializations = json::array();
	for (i64 p : {2, 3, 5}) {
		auto bad = compare_with_wmds(p, std::min(K, 6));
		specializations.push_back({{"p", p}, {"status", bad ? "fail" : "pass"}});
		if (bad)
			ok = false;
	}
	doc["wmds_specializations"] = specializations;
	doc["status"] = ok ? "pass" : "fail";
	em.out() << doc.dump(2) << "\n";
	return ok ? 0 : 1;
}

int run_verify_thm13(Emitter& em, const Options& o, i64 Dmin, i64 Dmax, i64 amax) {
	std::vector<i64> Ds = discriminants(Dmin, Dmax, false, false);
	struct Cell {
		i64 D, a1, a2;
	};
	std::vector<Cell> cells;
	for (i64 D : Ds)
		for (i64 a1 = 1; a1 <= amax; ++a1)
			for (i64 a2 = 1; a2 <= amax; ++a2)
				cells.push_back({D, a1, a2});
	std::vector<FiberSumReport> reports(cells.size());
	parallel_for(cells.size(), thread_count(o), [&](size_t i) { reports[i] = verify_thm13(cells[i].D, cells[i].a1, cells[i].a2); });
	size_t failures = 0, exact_failures = 0;
	json first = nullptr;
	for (const auto& r : reports) {
		if (!r.equal()) {
			if (first.is_null())
				first = {{"D", r.D}, {"a1", r.a1}, {"a2", r.a2}, {"pairs", r.pairs}, {"weighted_sum", r.weighted_sum}, {"B", r.B_value}};
			++failures;
		}
		if (!r.exact_equal())
			++exact_failures;
	}
	json doc;
	doc["schema"] = kSchema;
	doc["identity"] = "thm13";
	doc["params"] = {{"Dmin", Dmin}, {"Dmax", Dmax}, {"amax", amax}};
	doc["status"] = failures == 0 ? "pass" : "fail";
	doc["checked"] = reports.size();
	doc["failures"] = failures;
	doc["first_mismatch"] = first;
	doc["exact_fiber_status"] = exact_failures == 0 ? "pass" : "fail";
	doc["exact_fiber_failures"] = exact_failures;
	em.out() << doc.dump(2) << "\n";
	return failures == 0 ? 0 : 1;
}

int run_table(Emitter& em, const Options& o, const std::string& kind, i64 Dmax, i64 Mmax) {
	if (kind != "B" && kind != "a3")
		throw std::invalid_argument("unknown table kind: " + kind);
	std::vector<i64> Ds = discriminants(-Dmax, Dmax, false, false);
	std::vector<std::string> chunks(Ds.size());
	parallel_for(Ds.size(), thread_count(o), [&](size_t i) {
		i64 D = Ds[i];
		std::ostringstream os;
		for (i64 m = 1; m <= Mmax; ++m)
			for (i64 n = 1; n <= Mmax; ++n) {
				if (kind == "B")
					os << D << ',' << m << ',' << n << ',' << B(D, m, n) << "\n";
				else
					os << D << ',' << m << ',' << n << ',' << a_coeff3(D, m, n) << ',' << chi(D, hat(m, D)) << ','
					   << chi(D, hat(n, D)) << "\n";
			}
		chunks[i] = os.str();
	});
	em.out() << (kind == "B" ? "D,m,n,B\n" : "D,m,n,a,chi_m,chi_n\n");
	for (const auto& c : chunks)
		em.out() << c;
	return 0;
}

int run_zeta(Emitter& em, const Options& o, double s1, double s2, double w, i64 Dmax, i64 Mmax) {
	PartialSum ps = partial_sum(s1, s2, w, Dmax, Mmax);
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.15g", ps.value);
	if (ps.convergence_warning)
		std::cerr << "warning: parameters outside s1, s2, w > 1; partial sums may not converge\n";
	if (fmt_or(o, "text") == "json") {
		json doc{{"schema", kSchema}, {"s1", s1}, {"s2", s2}, {"w", w}, {"Dmax", Dmax}, {"Mmax", Mmax},
		         {"value", std::string(buf)}, {"convergence_warning", ps.convergence_warning}};
		em.out() << doc.dump(2) << "\n";
	} else {
		em.out() << buf << "\n";
	}
	return 0;
}

int run_moduli(Emitter& em, const Options& o, i64 D, i64 a1, i64 a2) {
	auto pairs = enumerate_pairs(D, a1, a2);
	i64 fiber = fiber_count(D, a1, a2);
	if (fmt_or(o, "json") == "json") {
		json arr = json::array();
		for (const auto& p : pairs)
			arr.push_back({{"D", D}, {"a1", p.first.a}, {"b1", p.first.b}, {"a2", p.second.a}, {"b2", p.second.b},
			               {"fiber", fiber}, {"exact_fiber", exact_fiber_count(p)}});
		em.out() << arr.dump(2) << "\n";
	} else {
		em.out() << "D,a1,b1,a2,b2,fiber,exact_fiber\n";
		for (const auto& p : pairs)
			em.out() << D << ',' << p.first.a << ',' << p.first.b << ',' << p.second.a << ',' << p.second.b << ',' << fiber << ','
			         << exact_fiber_count(p) << "\n";
	}
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Orbit counts of integer cubes, congruence counts and series identities"};
	app.require_subcommand(1);
	app.fallthrough();
	Options opt;
	app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
	app.add_option("--threads", opt.threads, "Worker threads (default: CUBEZETA_THREADS or hardware count)");
	app.add_option("--output", opt.output, "Write output to this file instead of stdout");

	std::function<int(Emitter&)> action;

	// count
	auto* count = app.add_subcommand("count", "Single values: A(D, m), B(D, m, n), a(D, m), a(D, m, n)");
	std::string count_kind;
	i64 cD = 0, cm = 1, cn = 1;
	count->add_option("kind", count_kind, "A | B | a | a3")->required()->check(CLI::IsMember({"A", "B", "a", "a3"}));
	count->add_option("--D", cD, "Discriminant (or d for A)")->required();
	count->add_option("--m", cm, "First index (modulus for A)");
	count->add_option("--n", cn, "Second index");
	count->callback([&] { action = [&](Emitter& em) { return run_count(em, opt, count_kind, cD, cm, cn); }; });

	// orbits
	auto* orbits = app.add_subcommand("orbits", "B(D, m, n) with constructed representatives");
	i64 oD = 0, om = 1, on = 1, obound = 0, oslack = 2;
	bool use_oracle = false;
	orbits->add_option("--D", oD)->required();
	orbits->add_option("--m", om)->required()->check(CLI::PositiveNumber);
	orbits->add_option("--n", on)->required()->check(CLI::PositiveNumber);
	orbits->add_flag("--oracle", use_oracle, "Cross-check with the bounded orbit-closure oracle");
	orbits->add_option("--bound", obound, "Oracle inner box (default derived from D, m, n)");
	orbits->add_option("--slack", oslack, "Oracle slack ring")->check(CLI::PositiveNumber);
	orbits->callback([&] { action = [&](Emitter& em) { return run_orbits(em, opt, oD, om, on, use_oracle, obound, oslack); }; });

	// pairs
	auto* pairs = app.add_subcommand("pairs", "Congruence pairs (x, y) for signed m, n");
	i64 pD = 0, pm = 1, pn = 1;
	pairs->add_option("--D", pD)->required();
	pairs->add_option("--m", pm)->required();
	pairs->add_option("--n", pn)->required();
	pairs->callback([&] { action = [&](Emitter& em) { return run_pairs(em, opt, pD, pm, pn); }; });

	// ppart
	auto* ppart = app.add_subcommand("ppart", "Coefficients of the A3 p-part rational function");
	int kmax = 8;
	std::optional<i64> pval;
	ppart->add_option("--kmax", kmax)->check(CLI::Range(0, kMaxSeriesDegree));
	ppart->add_option("--p", pval, "Substitute an integer for p");
	ppart->callback([&] { action = [&](Emitter& em) { return run_ppart(em, kmax, pval); }; });

	// verify
	auto* verify = app.add_subcommand("verify", "Coefficient-level identity checks; exit 1 on mismatch");
	std::string identity;
	i64 vDmin = 0, vDmax = 0, vamax = 30;
	int vM = 0, vK = 8;
	verify->add_option("identity", identity)->required()->check(CLI::IsMember({"prop21", "cor24", "prop25", "thm12", "thm44", "thm13"}));
	verify->add_option("--Dmin", vDmin, "Smallest discriminant (default -Dmax)");
	verify->add_option("--Dmax", vDmax, "Largest |D| (identity-specific default)");
	verify->add_option("--M", vM, "Dirichlet truncation (identity-specific default)")->check(CLI::Range(1, 2000));
	verify->add_option("--kmax", vK, "Series truncation for thm44")->check(CLI::Range(0, kMaxSeriesDegree));
	verify->add_option("--amax", vamax, "Norm bound for thm13")->check(CLI::PositiveNumber);
	verify->callback([&] {
		action = [&](Emitter& em) -> int {
			auto range = [&](i64 dflt) {
				i64 hi = verify->count("--Dmax") ? vDmax : dflt;
				i64 lo = verify->count("--Dmin") ? vDmin : -hi;
				return std::pair{lo, hi};
			};
			if (identity == "thm44")
				return run_verify_thm44(em, vK);
			if (identity == "thm13") {
				auto [lo, hi] = range(500);
				return run_verify_thm13(em, opt, lo, hi, vamax);
			}
			if (identity == "prop21" || identity == "cor24") {
				auto [lo, hi] = range(200);
				int M = vM > 0 ? vM : 200;
				auto Ds = discriminants(lo, hi, false, false);
				json params{{"Dmin", lo}, {"Dmax", hi}, {"M", M}};
				if (identity == "prop21")
					return emit_identity_reports(em, opt, identity, params, Ds, [&](i64 d) { return verify_prop21(d, M); });
				return emit_identity_reports(em, opt, identity, params, Ds, [&](i64 d) { return verify_cor24(d, M); });
			}
			if (identity == "prop25") {
				auto [lo, hi] = range(297);
				int M = vM > 0 ? vM : 100;
				return emit_identity_reports(em, opt, identity, {{"Dmin", lo}, {"Dmax", hi}, {"M", M}}, discriminants(lo, hi, true, false),
				                             [&](i64 D) { return verify_prop25(D, M); });
			}
			auto [lo, hi] = range(297);
			int M = vM > 0 ? vM : 64;
			return emit_identity_reports(em, opt, identity, {{"Dmin", lo}, {"Dmax", hi}, {"M", M}}, discriminants(lo, hi, true, true),
			                             [&](i64 D) { return verify_thm12(D, M); });
		};
	});

	// table
	auto* table = app.add_subcommand("table", "CSV tables of B or a(D, m, n)");
	std::string table_kind;
	i64 tDmax = 0, tMmax = 1;
	table->add_option("kind", table_kind)->required()->check(CLI::IsMember({"B", "a3"}));
	table->add_option("--Dmax", tDmax)->required()->check(CLI::NonNegativeNumber);
	table->add_option("--Mmax", tMmax)->required()->check(CLI::NonNegativeNumber);
	table->callback([&] { action = [&](Emitter& em) { return run_table(em, opt, table_kind, tDmax, tMmax); }; });

	// zeta
	auto* zeta = app.add_subcommand("zeta", "Truncated sum of B(D, m, n) m^-s1 n^-s2 |D|^-w");
	double s1 = 2, s2 = 2, w = 2;
	i64 zDmax = 0, zMmax = 1;
	zeta->add_option("--s1", s1)->required();
	zeta->add_option("--s2", s2)->required();
	zeta->add_option("--w", w)->required();
	zeta->add_option("--Dmax", zDmax)->required()->check(CLI::NonNegativeNumber);
	zeta->add_option("--Mmax", zMmax)->required()->check(CLI::NonNegativeNumber);
	zeta->callback([&] { action = [&](Emitter& em) { return run_zeta(em, opt, s1, s2, w, zDmax, zMmax); }; });

	// moduli
	auto* moduli = app.add_subcommand("moduli", "Pairs of oriented ideal classes with their fiber sizes");
	i64 mD = 0, ma1 = 1, ma2 = 1;
	moduli->add_option("--D", mD)->required();
	moduli->add_option("--a1", ma1)->required()->check(CLI::PositiveNumber);
	moduli->add_option("--a2", ma2)->required()->check(CLI::PositiveNumber);
	moduli->callback([&] { action = [&](Emitter& em) { return run_moduli(em, opt, mD, ma1, ma2); }; });

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		Emitter em(opt.output);
		return action(em);
	} catch (const std::domain_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
}
