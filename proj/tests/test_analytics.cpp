#include <doctest.h>

#include <cmath>

#include "dsg/analytics.hpp"
#include "dsg/heuristics.hpp"
#include "enumeration.hpp"

using namespace dsg;
using doctest::Approx;

namespace {

// Independent oracle for the Poisson dead-end probability: bisection on
// f(q) = q - e^(z(q-1)), smallest root in [0, 0.5].
double poisson_q_oracle(double z) {
	double lo = 0.0, hi = 0.5;
	auto f = [z](double q) { return q - std::exp(z * (q - 1.0)); };
	REQUIRE(f(lo) < 0);
	REQUIRE(f(hi) > 0);
	for (int i = 0; i < 200; ++i) {
		double mid = 0.5 * (lo + hi);
		(f(mid) < 0 ? lo : hi) = mid;
	}
	return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("pi families satisfy their sum rules") {
	for (double alpha : {0.1, 0.5, 1.0}) {
		ChoiceProbabilities pi{alpha};
		CHECK(pi.pi_r1(0) == 0.0);
		CHECK(pi.pi_r2(0) == 0.0);
		for (std::size_t b = 1; b <= 2000; ++b) {
			CHECK(pi.pi_r1(b) + pi.pi_r2(b) == Approx(1.0).epsilon(1e-12));
			CHECK(pi.pi_c0(b) + pi.pi_c1(b) + pi.pi_c2(b) == Approx(1.0).epsilon(1e-12));
			double db = double(b);
			CHECK(pi.pi_nc2_0(b) + pi.pi_nc2_1(b) ==
			      Approx((2 * db - 1) / (db * db)).epsilon(1e-12));
		}
	}
}

TEST_CASE("solve_q") {
	SUBCASE("Poisson z=5 against the bisection oracle") {
		auto m = DegreeModel::poisson(5.0, 300);
		double oracle = poisson_q_oracle(5.0);
		CHECK(oracle == Approx(0.00698).epsilon(1e-2));
		CHECK(solve_q(m) == Approx(oracle).epsilon(1e-6));
	}
	SUBCASE("below the transition the root is 1") {
		auto m = DegreeModel::poisson(0.8, 200);
		CHECK(solve_q(m) == Approx(1.0).epsilon(1e-6));
	}
	SUBCASE("all-degree-1 model") {
		auto m = DegreeModel::fixed_degree(1);
		CHECK(solve_q(m) == Approx(1.0));
	}
}

TEST_CASE("theta_from_q") {
	auto m = DegreeModel::poisson(5.0, 300);
	CHECK(theta_from_q(m, 1.0) == Approx(0.0).epsilon(1e-12));

	SUBCASE("Poisson identity theta = 1 - q") {
		double q = solve_q(m);
		CHECK(theta_from_q(m, q) == Approx(1.0 - q).epsilon(1e-8));
		CHECK(theta_from_q(m, q) == Approx(0.99302).epsilon(1e-4));
	}
	SUBCASE("generating function matches the exponential closed form") {
		for (double q : {0.1, 0.4, 0.9}) {
			double direct = 0, pw = 1;
			for (std::size_t a = 0; a <= 300; ++a) {
				direct += m.pmf(a) * pw;
				pw *= q;
			}
			CHECK(direct == Approx(std::exp(-5.0 * (1 - q))).epsilon(1e-9));
		}
	}
}

TEST_CASE("dead-end system") {
	SUBCASE("all-degree-1 model saturates") {
		auto m = DegreeModel::fixed_degree(1);
		auto sys = solve_dead_end_system(m, 0.5);
		CHECK(sys.q_c == Approx(1.0));
		CHECK(sys.q_nc1 == Approx(1.0));
		CHECK(sys.q_nc2 == Approx(1.0));
		CHECK(theta_d(m, 0.5, sys) == Approx(0.0).epsilon(1e-12));
	}
	SUBCASE("alpha=1: q_nc1 is inert; solution satisfies its own equations") {
		auto m = DegreeModel::poisson(5.0, 300);
		const double alpha = 1.0;
		auto sys = solve_dead_end_system(m, alpha);
		ChoiceProbabilities pi{alpha};
		// re-evaluate the q_c map at the solution
		double s = (1 - alpha) * sys.q_nc1 + alpha * sys.q_nc2;
		double qc = 0, qnc2 = 0;
		for (std::size_t b = 1; b <= 300; ++b) {
			double w = m.neighbor_degree_pmf(b);
			double t = pi.pi_c0(b) * std::pow(s, double(b - 1));
			if (b >= 2) t += pi.pi_c1(b) * sys.q_c * std::pow(s, double(b - 2));
			if (b >= 3) t += pi.pi_c2(b) * sys.q_c * sys.q_c * std::pow(s, double(b - 3));
			qc += w * t;
			double t2 = 1 - pi.pi_nc2_0(b) - pi.pi_nc2_1(b) +
			            pi.pi_nc2_0(b) * std::pow(s, double(b - 1));
			if (b >= 2) t2 += pi.pi_nc2_1(b) * sys.q_c * std::pow(s, double(b - 2));
			qnc2 += w * t2;
		}
		CHECK(qc == Approx(sys.q_c).epsilon(1e-9));
		CHECK(qnc2 == Approx(sys.q_nc2).epsilon(1e-9));
	}
	SUBCASE("fixed points stay inside [0,1]") {
		for (double alpha : {0.1, 0.5, 1.0}) {
			auto m = DegreeModel::poisson(3.0, 200);
			auto sys = solve_dead_end_system(m, alpha);
			for (double v : {sys.q_c, sys.q_nc1, sys.q_nc2}) {
				CHECK(v >= 0.0);
				CHECK(v <= 1.0);
			}
		}
	}
}

TEST_CASE("theta_d boundary systems") {
	auto m = DegreeModel::poisson(5.0, 300);
	CHECK(theta_d(m, 0.5, {1.0, 1.0, 1.0}) == Approx(0.0).epsilon(1e-12));
	CHECK(theta_d(m, 0.5, {0.0, 0.0, 0.0}) == Approx(1.0 - m.pmf(0)).epsilon(1e-12));
}

TEST_CASE("compute_r") {
	CHECK(compute_r(DegreeModel::fixed_degree(1), 0.5) == Approx(1.0));
	CHECK(compute_r(DegreeModel::fixed_degree(2), 1.0) == Approx(0.75));

	SUBCASE("Poisson z=5 alpha=0.5 against untruncated summation oracle") {
		double z = 5.0, alpha = 0.5;
		// neighbor law is Poisson shifted by one: w(b) = e^-z z^(b-1)/(b-1)!
		double oracle = 0, w = std::exp(-z);
		for (std::size_t b = 1; b <= 200; ++b) {
			double db = double(b);
			oracle += w * ((1 - alpha) / db + alpha * (2 * db - 1) / (db * db));
			w *= z / db;
		}
		auto m = DegreeModel::poisson(z, 300);
		CHECK(compute_r(m, alpha) == Approx(oracle).epsilon(1e-9));
	}
}

TEST_CASE("degree pmf in D") {
	SUBCASE("a=1 concentrates at i=1") {
		auto pmf = degree_pmf_in_d(1, 0.3, 0.7);
		CHECK(pmf[1] == Approx(1.0).epsilon(1e-12));
	}
	SUBCASE("a=3, alpha=0.5, r=0.5 against exhaustive enumeration") {
		const std::size_t a = 3;
		const double alpha = 0.5, r = 0.5;
		// enumerate choice sets of a degree-3 node, then reverse choices of
		// the unchosen neighbors as independent Bernoulli(r)
		std::vector<NodeId> nbrs{0, 1, 2};
		auto sets = testing::choice_sets(nbrs, alpha);
		std::vector<double> expect(a + 1, 0.0);
		for (const auto& set : sets) {
			std::size_t k = set.members.size();
			std::size_t rest = a - k;
			for (std::size_t back = 0; back <= rest; ++back) {
				double comb = rest == 2 ? (back == 1 ? 2.0 : 1.0) : 1.0;
				double p = comb * std::pow(r, double(back)) *
				           std::pow(1 - r, double(rest - back));
				expect[k + back] += set.probability * p;
			}
		}
		auto pmf = degree_pmf_in_d(a, alpha, r);
		double total = 0;
		for (std::size_t i = 0; i <= a; ++i) {
			CHECK(pmf[i] == Approx(expect[i]).epsilon(1e-12));
			total += pmf[i];
		}
		CHECK(total == Approx(1.0).epsilon(1e-12));
		// the closed-form mean agrees with the enumerated one
		double mean = 0;
		for (std::size_t i = 0; i <= a; ++i) mean += double(i) * pmf[i];
		CHECK(mean_degree_in_d(a, alpha, r) == Approx(mean).epsilon(1e-12));
	}
}

TEST_CASE("z_gcc_d with vanishing conditioning") {
	auto m = DegreeModel::poisson(5.0, 300);
	const double alpha = 0.5;
	double r = compute_r(m, alpha);
	DeadEndSystem zero{0.0, 0.0, 0.0};
	double td = theta_d(m, alpha, zero);  // = 1 - P(0)
	double expect = 0;
	for (std::size_t a = 1; a <= 300; ++a)
		expect += m.pmf(a) * mean_degree_in_d(a, alpha, r);
	expect /= 1.0 - m.pmf(0);
	CHECK(z_gcc_d(m, alpha, zero, td, r) == Approx(expect).epsilon(1e-12));
	CHECK_THROWS(z_gcc_d(m, alpha, zero, 0.0, r));
}

TEST_CASE("z_d_gcc_g") {
	SUBCASE("q=0 without degree-1 mass equals the uncorrected value") {
		auto m = DegreeModel::fixed_degree(3);
		double alpha = 0.5;
		double uncorrected = mean_degree_in_d(3, alpha, compute_r(m, alpha));
		CHECK(z_d_gcc_g(m, alpha, 0.0) == Approx(uncorrected).epsilon(1e-12));
	}
	SUBCASE("q=1 rejected") {
		auto m = DegreeModel::poisson(5.0, 300);
		CHECK_THROWS(z_d_gcc_g(m, 0.5, 1.0));
	}
}

TEST_CASE("failure fixed point") {
	auto m = DegreeModel::poisson(5.0, 300);
	SUBCASE("gamma=1 reduces to solve_q, bitwise") {
		auto res = failure_fixed_point(m, 1.0);
		CHECK(res.q_prime == solve_q(m));
		CHECK(res.bound == Approx(1.0).epsilon(1e-12));
	}
	SUBCASE("gamma=0 kills the giant component") {
		auto res = failure_fixed_point(m, 0.0);
		CHECK(res.q_prime == Approx(1.0).epsilon(1e-9));
		CHECK(res.theta_g_prime == Approx(0.0).epsilon(1e-9));
		CHECK(res.bound == Approx(0.0).epsilon(1e-9));
	}
}

TEST_CASE("path lengths, Poisson closed forms") {
	const double z = 5.0;
	const std::size_t n = 10000;
	auto m = DegreeModel::poisson(z, 300);
	auto pred = predict(m, 0.5, n);
	REQUIRE(pred.paths.has_value());
	const auto& paths = *pred.paths;

	CHECK(paths.rho == Approx(z).epsilon(1e-6));

	double q = poisson_q_oracle(z);
	CHECK(paths.z_gcc_g == Approx(z * (1.0 + q)).epsilon(1e-6));

	double theta = 1.0 - q;
	double lg = std::log((double(n) * theta - 1.0) / (z * (1 + q)) * (z - 1.0) + 1.0) /
	            std::log(z);
	CHECK(paths.l_g == Approx(lg).epsilon(1e-5));
	CHECK(lg == Approx(5.58).epsilon(0.01));
}

TEST_CASE("ell=1 eigen consistency: A v equals Z_GCC_D") {
	auto m = DegreeModel::poisson(5.0, 300);
	for (double alpha : {0.25, 0.5, 1.0}) {
		auto pred = predict(m, alpha, 10000);
		REQUIRE(pred.paths.has_value());
		CHECK(pred.paths->ell_neighbors(1.0) == Approx(pred.z_gcc_d).epsilon(1e-8));
	}
}

TEST_CASE("eigen route matches direct matrix powers") {
	auto m = DegreeModel::poisson(4.0, 300);
	auto pred = predict(m, 0.5, 10000);
	REQUIRE(pred.paths.has_value());
	const auto& p = *pred.paths;
	std::array<double, 3> x{1.0, pred.r_nc1, pred.r_nc2};
	for (int ell = 1; ell <= 20; ++ell) {
		double direct = p.a_row[0] * x[0] + p.a_row[1] * x[1] + p.a_row[2] * x[2];
		CHECK(p.ell_neighbors(double(ell)) == Approx(direct).epsilon(1e-6));
		std::array<double, 3> next{};
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) next[i] += p.b_matrix[i][j] * x[j];
		x = next;
	}
}

TEST_CASE("predict") {
	SUBCASE("below transition rejected") {
		auto m = DegreeModel::poisson(0.5, 100);
		CHECK_THROWS_AS(predict(m, 0.5, 1000), std::domain_error);
	}
	SUBCASE("bundle internal consistency") {
		auto m = DegreeModel::poisson(5.0, 300);
		auto pred = predict(m, 0.5, 10000);
		CHECK(pred.pn ==
		      Approx(pred.fp.theta_d * pred.fp.theta_d /
		             (pred.fp.theta_g * pred.fp.theta_g)).epsilon(1e-12));
		double n = 10000;
		CHECK(pred.pm == Approx(pred.fp.theta_d * pred.fp.theta_d * n * pred.z_gcc_d /
		                        (2 * pred.fp.theta_g * (n * pred.fp.theta_g - 1)))
		                     .epsilon(1e-12));
		REQUIRE(pred.pt.has_value());
		CHECK(*pred.pt == Approx(pred.fp.theta_d * pred.paths->l_d /
		                         (pred.fp.theta_g * pred.paths->l_g)).epsilon(1e-12));
	}
	SUBCASE("power-law path lengths are non-convergent") {
		auto m = DegreeModel::power_law(2.5, 9999);
		auto pred = predict(m, 0.5, 10000);
		CHECK(!pred.pt.has_value());
		CHECK(!pred.paths.has_value());
		CHECK(pred.pn > 0);
		CHECK(pred.z_d_gcc_g > 0);
	}
}

TEST_CASE("enumeration oracle ties formulas to the simulator on a tiny graph") {
	Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
	const double alpha = 0.5;
	double expect = testing::expected_reached_fraction(g, alpha);

	auto lab = components(g);
	std::vector<NodeId> gcc;
	for (NodeId u = 0; u < 4; ++u)
		if (lab.in_giant(u)) gcc.push_back(u);

	const int trials = 100000;
	double sum = 0, sumsq = 0;
	for (int i = 0; i < trials; ++i) {
		auto t = make_choices(g, Heuristic::Uniform, alpha, i);
		Graph d = build_subgraph(g, t);
		auto lab_d = components(d);
		SplitMix64 rng = substream(5, i);
		NodeId origin = gcc[rng.uniform_below(gcc.size())];
		double frac = double(lab_d.component_sizes[lab_d.component_id[origin]]) /
		              double(gcc.size());
		sum += frac;
		sumsq += frac * frac;
	}
	double mean = sum / trials;
	double var = (sumsq - sum * sum / trials) / (trials - 1);
	CHECK(std::abs(mean - expect) < 3 * std::sqrt(var / trials) + 1e-9);
}
