#include "dsg/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace dsg {

namespace {

constexpr double kFixedPointTol = 1e-12;
constexpr int kMaxIterations = 1000000;

// b P(b) / Z for b = 0..max_degree
std::vector<double> neighbor_weights(const DegreeModel& m) {
	const auto& pmf = m.pmf_table();
	double z = m.moments().mean;
	if (z <= 0) throw std::domain_error("zero mean degree");
	std::vector<double> w(pmf.size());
	for (std::size_t b = 1; b < pmf.size(); ++b) w[b] = double(b) * pmf[b] / z;
	return w;
}

double binom_pmf(std::size_t trials, std::size_t successes, double p) {
	if (successes > trials) return 0.0;
	if (p <= 0.0) return successes == 0 ? 1.0 : 0.0;
	if (p >= 1.0) return successes == trials ? 1.0 : 0.0;
	double log_c = std::lgamma(double(trials + 1)) - std::lgamma(double(successes + 1)) -
	               std::lgamma(double(trials - successes + 1));
	return std::exp(log_c + double(successes) * std::log(p) +
	                double(trials - successes) * std::log1p(-p));
}

}  // namespace

double solve_q_failure(const DegreeModel& m, double gamma) {
	if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma in [0,1]");
	auto w = neighbor_weights(m);
	double q = 0.0;
	for (int it = 0; it < kMaxIterations; ++it) {
		const double s = 1.0 - gamma + gamma * q;
		double next = 0.0;
		double pw = 1.0;  // s^(b-1)
		for (std::size_t b = 1; b < w.size(); ++b) {
			next += w[b] * pw;
			pw *= s;
		}
		if (std::abs(next - q) < kFixedPointTol) return next;
		q = next;
	}
	throw std::runtime_error("dead-end fixed point did not converge");
}

double solve_q(const DegreeModel& m) { return solve_q_failure(m, 1.0); }

double theta_from_q(const DegreeModel& m, double q) {
	const auto& pmf = m.pmf_table();
	double sum = 0.0;
	double pw = 1.0;
	for (std::size_t a = 0; a < pmf.size(); ++a) {
		sum += pmf[a] * pw;
		pw *= q;
	}
	return 1.0 - sum;
}

DeadEndSystem solve_dead_end_system(const DegreeModel& m, double alpha) {
	if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha in (0,1]");
	auto w = neighbor_weights(m);
	ChoiceProbabilities pi{alpha};
	DeadEndSystem cur{0.0, 0.0, 0.0};
	for (int it = 0; it < kMaxIterations; ++it) {
		const double s = (1.0 - alpha) * cur.q_nc1 + alpha * cur.q_nc2;
		DeadEndSystem next{0.0, 0.0, 0.0};
		double pw = 1.0;  // s^(b-1)
		for (std::size_t b = 1; b < w.size(); ++b) {
			next.q_c += w[b] * pi.pi_c0(b) * pw;
			next.q_nc1 += w[b] * (1.0 - pi.pi_nc1_0(b) + pi.pi_nc1_0(b) * pw);
			next.q_nc2 += w[b] * (1.0 - pi.pi_nc2_0(b) - pi.pi_nc2_1(b) + pi.pi_nc2_0(b) * pw);
			pw *= s;
		}
		// second and third q_c terms and the q_nc2 cross term need
		// s^(b-2) and s^(b-3); redo with explicit powers
		double pw1 = 1.0;  // s^(b-2) starting at b=2
		double pw2 = 1.0;  // s^(b-3) starting at b=3
		for (std::size_t b = 2; b < w.size(); ++b) {
			next.q_c += w[b] * pi.pi_c1(b) * cur.q_c * pw1;
			next.q_nc2 += w[b] * pi.pi_nc2_1(b) * cur.q_c * pw1;
			if (b >= 3) {
				next.q_c += w[b] * pi.pi_c2(b) * cur.q_c * cur.q_c * pw2;
				pw2 *= s;
			}
			pw1 *= s;
		}
		double delta = std::max({std::abs(next.q_c - cur.q_c),
		                         std::abs(next.q_nc1 - cur.q_nc1),
		                         std::abs(next.q_nc2 - cur.q_nc2)});
		cur = next;
		if (delta < kFixedPointTol) return cur;
	}
	throw std::runtime_error("dead-end system did not converge");
}

double theta_d(const DegreeModel& m, double alpha, const DeadEndSystem& sys) {
	const auto& pmf = m.pmf_table();
	ChoiceProbabilities pi{alpha};
	const double s = (1.0 - alpha) * sys.q_nc1 + alpha * sys.q_nc2;
	double sum = 0.0;
	double pw1 = 1.0;  // s^(a-1)
	double pw2 = 1.0;  // s^(a-2), meaningful from a=2
	for (std::size_t a = 1; a < pmf.size(); ++a) {
		double term = pi.pi_r1(a) * sys.q_c * pw1;
		if (a >= 2) {
			term += pi.pi_r2(a) * sys.q_c * sys.q_c * pw2;
			pw2 *= s;
		}
		sum += pmf[a] * term;
		pw1 *= s;
	}
	return 1.0 - pmf[0] - sum;
}

double compute_r(const DegreeModel& m, double alpha) {
	auto w = neighbor_weights(m);
	ChoiceProbabilities pi{alpha};
	double r = 0.0;
	for (std::size_t b = 1; b < w.size(); ++b)
		r += w[b] * ((1.0 - alpha) * pi.pi_nc1_0(b) +
		             alpha * (pi.pi_nc2_0(b) + pi.pi_nc2_1(b)));
	return r;
}

std::vector<double> degree_pmf_in_d(std::size_t a, double alpha, double r) {
	if (a < 1) throw std::invalid_argument("a must be >= 1");
	ChoiceProbabilities pi{alpha};
	std::vector<double> pmf(a + 1, 0.0);
	for (std::size_t i = 1; i <= a; ++i) {
		double p = pi.pi_r1(a) * binom_pmf(a - 1, i - 1, r);
		if (i >= 2 && a >= 2) p += pi.pi_r2(a) * binom_pmf(a - 2, i - 2, r);
		pmf[i] = p;
	}
	return pmf;
}

double mean_degree_in_d(std::size_t a, double alpha, double r) {
	if (a == 0) return 0.0;
	ChoiceProbabilities pi{alpha};
	double mean = pi.pi_r1(a) * (1.0 + double(a - 1) * r);
	if (a >= 2) mean += pi.pi_r2(a) * (2.0 + double(a - 2) * r);
	return mean;
}

namespace {

// P_D(GCC_D | a): degree-a node of G lands in the giant component of D.
double prob_gcc_d_given_a(std::size_t a, double alpha, const DeadEndSystem& sys) {
	if (a == 0) return 0.0;
	ChoiceProbabilities pi{alpha};
	const double s = (1.0 - alpha) * sys.q_nc1 + alpha * sys.q_nc2;
	double out = 1.0 - pi.pi_r1(a) * sys.q_c * std::pow(s, double(a - 1));
	if (a >= 2) out -= pi.pi_r2(a) * sys.q_c * sys.q_c * std::pow(s, double(a - 2));
	return out;
}

}  // namespace

double z_gcc_d(const DegreeModel& m, double alpha, const DeadEndSystem& sys,
               double theta_d_val, double r) {
	if (theta_d_val <= 0) throw std::domain_error("theta_D must be positive");
	const auto& pmf = m.pmf_table();
	double sum = 0.0;
	for (std::size_t a = 1; a < pmf.size(); ++a)
		sum += pmf[a] * prob_gcc_d_given_a(a, alpha, sys) * mean_degree_in_d(a, alpha, r);
	return sum / theta_d_val;
}

double z_d_gcc_g(const DegreeModel& m, double alpha, double q) {
	if (q >= 1.0) throw std::domain_error("below phase transition (q = 1)");
	const auto& pmf = m.pmf_table();
	auto w = neighbor_weights(m);
	ChoiceProbabilities pi{alpha};
	const double theta_g = theta_from_q(m, q);

	// r with the neighbor-degree law corrected per node degree a:
	//   p(b|a) = w(b) (1 - q^(a+b-2)) / (1 - q^a)
	// which splits into two a-independent sums over b.
	double s0 = 0.0, s1 = 0.0;
	double qb = 1.0;  // q^(b-1)
	for (std::size_t b = 1; b < w.size(); ++b) {
		double f = (1.0 - alpha) * pi.pi_nc1_0(b) +
		           alpha * (pi.pi_nc2_0(b) + pi.pi_nc2_1(b));
		s0 += w[b] * f;
		s1 += w[b] * qb * f;
		qb *= q;
	}

	double sum = 0.0;
	double qa1 = 1.0;  // q^(a-1)
	for (std::size_t a = 1; a < pmf.size(); ++a) {
		double qa = qa1 * q;  // q^a
		double in_gcc = 1.0 - qa;
		if (in_gcc > 0.0) {
			double r_a = (s0 - qa1 * s1) / in_gcc;
			sum += in_gcc * pmf[a] / theta_g * mean_degree_in_d(a, alpha, r_a);
		}
		qa1 = qa;
	}
	return sum;
}

FailureResult failure_fixed_point(const DegreeModel& m, double gamma) {
	FailureResult res;
	res.q_prime = solve_q_failure(m, gamma);
	res.theta_g_prime = theta_from_q(m, res.q_prime);
	double theta_g = theta_from_q(m, solve_q(m));
	res.bound = theta_g > 0 ? (res.theta_g_prime / theta_g) * (res.theta_g_prime / theta_g)
	                        : 0.0;
	return res;
}

double compute_r_nc1(const DegreeModel& m) {
	auto w = neighbor_weights(m);
	double r = 0.0;
	for (std::size_t b = 1; b < w.size(); ++b) r += w[b] / double(b);
	return r;
}

double compute_r_nc2(const DegreeModel& m) {
	auto w = neighbor_weights(m);
	double r = 0.0;
	for (std::size_t b = 1; b < w.size(); ++b)
		r += w[b] * (2.0 * double(b) - 1.0) / (double(b) * double(b));
	return r;
}

namespace {

using Complex = std::complex<double>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Roots of x^3 + px^2 + qx + r via Cardano in complex arithmetic, each
// polished with one Newton step.
std::array<Complex, 3> cubic_roots(double p, double q, double r) {
	Complex a(p, 0), b(q, 0), c(r, 0);
	Complex shift = a / 3.0;
	Complex P = b - a * a / 3.0;
	Complex Q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
	Complex disc = Q * Q / 4.0 + P * P * P / 27.0;
	Complex sq = std::sqrt(disc);
	Complex u = std::pow(-Q / 2.0 + sq, 1.0 / 3.0);
	if (std::abs(u) < 1e-300) u = std::pow(-Q / 2.0 - sq, 1.0 / 3.0);
	const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
	std::array<Complex, 3> roots;
	for (int k = 0; k < 3; ++k) {
		Complex uk = u * (k == 0 ? Complex(1, 0) : (k == 1 ? omega : omega * omega));
		Complex x = std::abs(uk) < 1e-300 ? -shift : uk - P / (3.0 * uk) - shift;
		for (int it = 0; it < 3; ++it) {  // Newton polish
			Complex f = ((x + a) * x + b) * x + c;
			Complex df = (3.0 * x + 2.0 * a) * x + b;
			if (std::abs(df) < 1e-300) break;
			x -= f / df;
		}
		roots[k] = x;
	}
	return roots;
}

// Null vector of the (numerically singular) complex matrix M, via the
// largest cross product of two rows.
std::array<Complex, 3> null_vector(const std::array<std::array<Complex, 3>, 3>& m) {
	std::array<Complex, 3> best{Complex(0), Complex(0), Complex(0)};
	double best_norm = -1.0;
	for (int i = 0; i < 3; ++i) {
		int j = (i + 1) % 3;
		std::array<Complex, 3> cross{
		    m[i][1] * m[j][2] - m[i][2] * m[j][1],
		    m[i][2] * m[j][0] - m[i][0] * m[j][2],
		    m[i][0] * m[j][1] - m[i][1] * m[j][0]};
		double norm = std::abs(cross[0]) + std::abs(cross[1]) + std::abs(cross[2]);
		if (norm > best_norm) {
			best_norm = norm;
			best = cross;
		}
	}
	return best;
}

// Solves the 3x3 complex system M x = rhs by Cramer's rule.
std::array<Complex, 3> solve3(const std::array<std::array<Complex, 3>, 3>& m,
                              const std::array<Complex, 3>& rhs) {
	auto det3 = [](const std::array<std::array<Complex, 3>, 3>& a) {
		return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
		       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
		       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
	};
	Complex d = det3(m);
	std::array<Complex, 3> x;
	for (int col = 0; col < 3; ++col) {
		auto mc = m;
		for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
		x[col] = det3(mc) / d;
	}
	return x;
}

// lambda^e with the conventions lambda^0 = 1 and 0^e = 0 for e > 0; the B
// matrix always has a zero eigenvalue (its nc columns are proportional), and
// complex std::pow turns 0^0 into NaN.
Complex cpow(Complex z, double e) {
	if (e == 0.0) return Complex(1.0);
	if (std::abs(z) == 0.0) return Complex(0.0);
	return std::pow(z, Complex(e));
}

}  // namespace

double PathLengths::ell_neighbors(double ell) const {
	Complex total(0);
	for (int k = 0; k < 3; ++k)
		total += eigen_weights[k] * cpow(eigenvalues[k], ell - 1.0);
	return total.real();
}

std::optional<PathLengths> path_lengths(const DegreeModel& m, double alpha, std::size_t n,
                                        const FixedPoints& fp, double r_nc1, double r_nc2) {
	const auto& pmf = m.pmf_table();
	auto w = neighbor_weights(m);
	ChoiceProbabilities pi{alpha};

	// rho and every beta below share the tail behavior of sum_b w(b) b; if
	// the truncated value still moves with the cap, the series diverges and
	// no path-length prediction is made.
	double rho = 0.0, rho_half = 0.0;
	for (std::size_t b = 1; b < w.size(); ++b) {
		rho += w[b] * double(b - 1);
		if (b <= (w.size() - 1) / 2) rho_half = rho;
	}
	if (rho <= 1.0) return std::nullopt;
	if (std::abs(rho - rho_half) > 1e-3 * rho) return std::nullopt;  // non-convergent

	PathLengths out{};
	out.rho = rho;

	double theta_g = fp.theta_g, theta_dv = fp.theta_d;
	if (theta_g <= 0 || theta_dv <= 0) return std::nullopt;

	double z_gcc_g = 0.0;
	double qa = fp.q;  // q^a
	for (std::size_t a = 1; a < pmf.size(); ++a) {
		z_gcc_g += double(a) * (1.0 - qa) * pmf[a] / theta_g;
		qa *= fp.q;
	}
	out.z_gcc_g = z_gcc_g;
	out.l_g = std::log((double(n) * theta_g - 1.0) / z_gcc_g * (rho - 1.0) + 1.0) /
	          std::log(rho);

	// beta coefficients of the four t-functions
	double bc_c = 0, bc_nc = 0;        // t_c: x coeff, (y,z) mixture coeff
	double bnc1_nc = 0;                // t_nc1
	double bnc2_c = 0, bnc2_nc = 0;    // t_nc2
	for (std::size_t b = 1; b < w.size(); ++b) {
		double db = double(b);
		bc_c += w[b] * (pi.pi_c1(b) + 2.0 * pi.pi_c2(b));
		double mix = pi.pi_c0(b) * (db - 1.0);
		if (b >= 2) mix += pi.pi_c1(b) * (db - 2.0);
		if (b >= 3) mix += pi.pi_c2(b) * (db - 3.0);
		bc_nc += w[b] * mix;
		bnc1_nc += w[b] * pi.pi_nc1_0(b) * (db - 1.0);
		bnc2_c += w[b] * pi.pi_nc2_1(b);
		double mix2 = pi.pi_nc2_0(b) * (db - 1.0);
		if (b >= 2) mix2 += pi.pi_nc2_1(b) * (db - 2.0);
		bnc2_nc += w[b] * mix2;
	}

	DeadEndSystem sys{fp.q_c, fp.q_nc1, fp.q_nc2};
	double br_c = 0, br_nc = 0;  // t_r
	for (std::size_t a = 1; a < pmf.size(); ++a) {
		double wa = prob_gcc_d_given_a(a, alpha, sys) * pmf[a] / theta_dv;
		br_c += wa * (pi.pi_r1(a) + 2.0 * pi.pi_r2(a));
		double mix = pi.pi_r1(a) * double(a - 1);
		if (a >= 2) mix += pi.pi_r2(a) * double(a - 2);
		br_nc += wa * mix;
	}

	out.a_row = {br_c, (1.0 - alpha) * br_nc, alpha * br_nc};
	out.b_matrix = Mat3{{{bc_c, (1.0 - alpha) * bc_nc, alpha * bc_nc},
	                     {0.0, (1.0 - alpha) * bnc1_nc, alpha * bnc1_nc},
	                     {bnc2_c, (1.0 - alpha) * bnc2_nc, alpha * bnc2_nc}}};

	// characteristic polynomial of B: lambda^3 - tr l^2 + c2 l - det
	const auto& B = out.b_matrix;
	double tr = B[0][0] + B[1][1] + B[2][2];
	double c2 = B[0][0] * B[1][1] - B[0][1] * B[1][0] + B[0][0] * B[2][2] -
	            B[0][2] * B[2][0] + B[1][1] * B[2][2] - B[1][2] * B[2][1];
	double det = B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) -
	             B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
	             B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0]);
	out.eigenvalues = cubic_roots(-tr, c2, -det);

	// eigenvectors and the diagonalized ell-sum
	std::array<std::array<Complex, 3>, 3> V;
	for (int k = 0; k < 3; ++k) {
		std::array<std::array<Complex, 3>, 3> shifted;
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				shifted[i][j] = Complex(B[i][j]) - (i == j ? out.eigenvalues[k] : Complex(0));
		auto vec = null_vector(shifted);
		for (int i = 0; i < 3; ++i) V[i][k] = vec[i];
	}
	std::array<Complex, 3> rhs{Complex(1.0), Complex(r_nc1), Complex(r_nc2)};
	auto coef = solve3(V, rhs);  // V^-1 [1, r_nc1, r_nc2]^T
	for (int k = 0; k < 3; ++k)
		out.eigen_weights[k] = (Complex(out.a_row[0]) * V[0][k] +
		                        Complex(out.a_row[1]) * V[1][k] +
		                        Complex(out.a_row[2]) * V[2][k]) *
		                       coef[k];

	// cumulative ell-neighbor count: sum_{ell=1..L} A B^(ell-1) v
	auto cumulative = [&](double L) {
		Complex total(0);
		for (int k = 0; k < 3; ++k) {
			Complex lam = out.eigenvalues[k];
			if (std::abs(lam - 1.0) < 1e-12)
				total += out.eigen_weights[k] * L;
			else
				total += out.eigen_weights[k] * (cpow(lam, L) - 1.0) / (lam - 1.0);
		}
		if (std::abs(total.imag()) > 1e-8 * std::max(1.0, std::abs(total.real())))
			throw std::runtime_error("ell-sum has non-negligible imaginary part");
		return total.real();
	};

	double target = double(n) * theta_dv - 1.0;
	double lo = 1.0, hi = 10.0 * std::log(double(n));
	if (cumulative(hi) < target) return std::nullopt;  // cannot reach target in range
	for (int it = 0; it < 200; ++it) {
		double mid = 0.5 * (lo + hi);
		(cumulative(mid) < target ? lo : hi) = mid;
	}
	out.l_d = 0.5 * (lo + hi);
	out.pt = theta_dv * out.l_d / (theta_g * out.l_g);
	return out;
}

Prediction predict(const DegreeModel& m, double alpha, std::size_t n) {
	if (!m.above_phase_transition())
		throw std::domain_error("below phase transition");

	Prediction pred;
	pred.fp.q = solve_q(m);
	pred.fp.theta_g = theta_from_q(m, pred.fp.q);
	auto sys = solve_dead_end_system(m, alpha);
	pred.fp.q_c = sys.q_c;
	pred.fp.q_nc1 = sys.q_nc1;
	pred.fp.q_nc2 = sys.q_nc2;
	pred.fp.theta_d = theta_d(m, alpha, sys);

	pred.r = compute_r(m, alpha);
	pred.r_nc1 = compute_r_nc1(m);
	pred.r_nc2 = compute_r_nc2(m);
	pred.z_gcc_d = z_gcc_d(m, alpha, sys, pred.fp.theta_d, pred.r);
	pred.z_d_gcc_g = z_d_gcc_g(m, alpha, pred.fp.q);

	pred.pn = (pred.fp.theta_d * pred.fp.theta_d) / (pred.fp.theta_g * pred.fp.theta_g);
	pred.pm = pred.fp.theta_d * pred.fp.theta_d * double(n) * pred.z_gcc_d /
	          (2.0 * pred.fp.theta_g * (double(n) * pred.fp.theta_g - 1.0));

	pred.paths = path_lengths(m, alpha, n, pred.fp, pred.r_nc1, pred.r_nc2);
	if (pred.paths) pred.pt = pred.paths->pt;
	return pred;
}

}  // namespace dsg
