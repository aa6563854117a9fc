#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "dsg/degree_model.hpp"

namespace dsg {

// Choice-outcome probabilities of the uniform approach, as functions of the
// node degree and alpha. Mnemonics: "r" randomly chosen node, "c" neighbor
// reached over a chosen edge, "nc,1"/"nc,2" neighbor not chosen with one or
// two own choices.
struct ChoiceProbabilities {
	double alpha;

	double pi_r1(std::size_t a) const { return a == 0 ? 0.0 : 1.0 - alpha + alpha / double(a); }
	double pi_r2(std::size_t a) const { return a == 0 ? 0.0 : alpha * double(a - 1) / double(a); }

	double pi_c0(std::size_t b) const { return (1.0 - alpha + alpha / double(b)) / double(b); }
	double pi_c1(std::size_t b) const {
		return (double(b - 1) / double(b)) * (1.0 - alpha + 3.0 * alpha / double(b));
	}
	double pi_c2(std::size_t b) const {
		return alpha * double(b - 1) * (b >= 2 ? double(b - 2) : 0.0) / (double(b) * double(b));
	}

	double pi_nc1_0(std::size_t b) const { return 1.0 / double(b); }
	double pi_nc2_0(std::size_t b) const { return 1.0 / (double(b) * double(b)); }
	double pi_nc2_1(std::size_t b) const {
		return (2.0 * double(b) - 2.0) / (double(b) * double(b));
	}
};

struct FixedPoints {
	double q = 1;         // dead-end probability in G
	double theta_g = 0;   // fraction of nodes in GCC_G
	double q_c = 1, q_nc1 = 1, q_nc2 = 1;  // dead-end probabilities in D
	double theta_d = 0;   // fraction of nodes in GCC_D
};

struct PathLengths {
	double rho;       // expected further neighbors of a neighbor in G
	double z_gcc_g;   // mean G-degree over GCC_G
	double l_g;       // mean path length in GCC_G
	double l_d;       // mean path length in GCC_D
	double pt;
	std::array<double, 3> a_row;            // ell-neighbor recursion, row vector
	std::array<std::array<double, 3>, 3> b_matrix;
	std::array<std::complex<double>, 3> eigenvalues;
	// per-eigenvalue weights of the diagonalized recursion, so that the
	// expected ell-neighbor count is sum_k w_k lambda_k^(ell-1)
	std::array<std::complex<double>, 3> eigen_weights;

	double ell_neighbors(double ell) const;
};

struct Prediction {
	FixedPoints fp;
	double r = 0;            // P(u in C_v | v not in C_u)
	double r_nc1 = 0, r_nc2 = 0;
	double z_gcc_d = 0;      // mean D-degree over GCC_D
	double z_d_gcc_g = 0;    // mean D-degree over GCC_G (with the p-correction)
	double pn = 0, pm = 0;
	std::optional<PathLengths> paths;  // absent when the ell-neighbor sums diverge
	std::optional<double> pt;
};

// Smallest fixed point in [0,1] of q = sum_b (b P(b)/Z) q^(b-1), iterated
// from 0. Returns 1 at or below the phase transition.
double solve_q(const DegreeModel& m);

// Same map with every edge kept with probability gamma; gamma = 1 reduces
// bitwise to solve_q.
double solve_q_failure(const DegreeModel& m, double gamma);

// theta = 1 - sum_a P(a) q^a
double theta_from_q(const DegreeModel& m, double q);

struct DeadEndSystem {
	double q_c, q_nc1, q_nc2;
};

// Joint smallest fixed point of the three coupled dead-end maps in D,
// iterated from (0,0,0).
DeadEndSystem solve_dead_end_system(const DegreeModel& m, double alpha);

double theta_d(const DegreeModel& m, double alpha, const DeadEndSystem& sys);

double compute_r(const DegreeModel& m, double alpha);

// P_D(i | a): D-degree distribution of a degree-a node of G.
std::vector<double> degree_pmf_in_d(std::size_t a, double alpha, double r);

// E[i | a], closed form.
double mean_degree_in_d(std::size_t a, double alpha, double r);

double z_gcc_d(const DegreeModel& m, double alpha, const DeadEndSystem& sys,
               double theta_d_val, double r);

// Mean D-degree over GCC_G; the neighbor-degree law is corrected per node
// degree by the factor (1 - q^(a+b-2)) / (1 - q^a).
double z_d_gcc_g(const DegreeModel& m, double alpha, double q);

struct FailureResult {
	double q_prime;
	double theta_g_prime;
	double bound;  // (theta_G' / theta_G)^2, upper bound on P_n
};

FailureResult failure_fixed_point(const DegreeModel& m, double gamma);

// L_GCC_G, L_GCC_D and P_t via the beta-coefficient matrix recursion and its
// eigen-decomposition. Returns nullopt when the ell-neighbor sums diverge
// (power law with a divergent second moment).
std::optional<PathLengths> path_lengths(const DegreeModel& m, double alpha, std::size_t n,
                                        const FixedPoints& fp, double r_nc1, double r_nc2);

double compute_r_nc1(const DegreeModel& m);
double compute_r_nc2(const DegreeModel& m);

// Full analytic bundle; throws below the phase transition. gamma, if given,
// only populates the failure bound (reach under failures has no full
// pipeline).
Prediction predict(const DegreeModel& m, double alpha, std::size_t n);

}  // namespace dsg
