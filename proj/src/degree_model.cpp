#include "dsg/degree_model.hpp"

#include <cmath>
#include <stdexcept>

namespace dsg {

DegreeModel::DegreeModel(ModelKind kind, double param, std::vector<double> pmf)
    : kind_(kind), param_(param), pmf_(std::move(pmf)) {
	double total = 0;
	for (double p : pmf_) total += p;
	if (total <= 0) throw std::invalid_argument("degenerate degree model");
	for (double& p : pmf_) p /= total;
}

DegreeModel DegreeModel::poisson(double z, std::size_t max_degree) {
	if (z <= 0) throw std::invalid_argument("Poisson mean degree must be > 0");
	std::vector<double> pmf(max_degree + 1);
	// pmf(a) = pmf(a-1) * z / a, avoids factorial overflow
	pmf[0] = std::exp(-z);
	for (std::size_t a = 1; a <= max_degree; ++a) pmf[a] = pmf[a - 1] * z / double(a);
	return DegreeModel(ModelKind::Poisson, z, std::move(pmf));
}

DegreeModel DegreeModel::power_law(double tau, std::size_t max_degree) {
	if (tau <= 1) throw std::invalid_argument("power-law exponent must be > 1");
	if (max_degree < 1) throw std::invalid_argument("power law needs max_degree >= 1");
	std::vector<double> pmf(max_degree + 1);
	pmf[0] = 0;  // support starts at a = 1
	for (std::size_t a = 1; a <= max_degree; ++a) pmf[a] = std::pow(double(a), -tau);
	return DegreeModel(ModelKind::PowerLaw, tau, std::move(pmf));
}

DegreeModel DegreeModel::fixed_degree(std::size_t degree) {
	if (degree < 1) throw std::invalid_argument("fixed degree must be >= 1");
	std::vector<double> pmf(degree + 1, 0.0);
	pmf[degree] = 1.0;
	return DegreeModel(ModelKind::Fixed, double(degree), std::move(pmf));
}

double DegreeModel::pmf(std::size_t a) const {
	if (a >= pmf_.size())
		throw std::out_of_range("degree beyond max_degree");
	return pmf_[a];
}

Moments DegreeModel::moments() const {
	Moments m{0, 0};
	for (std::size_t a = 1; a < pmf_.size(); ++a) {
		m.mean += double(a) * pmf_[a];
		m.second_moment += double(a) * double(a) * pmf_[a];
	}
	return m;
}

double DegreeModel::neighbor_degree_pmf(std::size_t b) const {
	if (b == 0) return 0;
	double z = moments().mean;
	if (z <= 0) throw std::domain_error("zero mean degree");
	return double(b) * pmf(b) / z;
}

bool DegreeModel::above_phase_transition() const {
	Moments m = moments();
	if (m.mean <= 0) throw std::domain_error("zero mean degree");
	return m.second_moment / m.mean > 2.0;
}

double riemann_zeta(double s) {
	if (s <= 1) throw std::domain_error("zeta diverges for s <= 1");
	// Direct sum to M plus Euler-Maclaurin tail: M^(1-s)/(s-1) + M^-s/2 - s M^-(s+1)/12
	const double M = 1e5;
	double sum = 0;
	for (double y = M; y >= 1; --y) sum += std::pow(y, -s);
	double tail = std::pow(M, 1 - s) / (s - 1) - 0.5 * std::pow(M, -s) +
	              s / 12.0 * std::pow(M, -s - 1);
	return sum + tail;
}

double critical_z() {
	// <K^2>/Z - 2 = (z^2+z)/z - 2 = z - 1; bisection kept for symmetry with tau
	double lo = 0.5, hi = 2.0;
	auto f = [](double z) { return (z * z + z) / z - 2.0; };
	for (int it = 0; it < 200; ++it) {
		double mid = 0.5 * (lo + hi);
		(f(mid) > 0 ? hi : lo) = mid;
	}
	return 0.5 * (lo + hi);
}

double critical_tau() {
	// zeta(tau-2)/zeta(tau-1) = 2
	double lo = 3.2, hi = 3.6;
	auto f = [](double tau) {
		return riemann_zeta(tau - 2) / riemann_zeta(tau - 1) - 2.0;
	};
	for (int it = 0; it < 100; ++it) {
		double mid = 0.5 * (lo + hi);
		// criterion decreases in tau
		(f(mid) > 0 ? lo : hi) = mid;
	}
	return 0.5 * (lo + hi);
}

}  // namespace dsg
