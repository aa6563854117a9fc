#pragma once

#include <cstddef>
#include <vector>

namespace dsg {

enum class ModelKind { Poisson, PowerLaw, Fixed };

struct Moments {
	double mean;           // Z_G
	double second_moment;  // <K_G^2>
};

// Node-degree distribution truncated at max_degree and renormalized, so
// every analytic sum runs over the same finite support 0..max_degree.
class DegreeModel {
public:
	static DegreeModel poisson(double z, std::size_t max_degree);
	static DegreeModel power_law(double tau, std::size_t max_degree);
	// all nodes share one degree; degenerate reference model
	static DegreeModel fixed_degree(std::size_t degree);

	ModelKind kind() const { return kind_; }
	double parameter() const { return param_; }  // z or tau
	std::size_t max_degree() const { return pmf_.size() - 1; }

	double pmf(std::size_t a) const;
	const std::vector<double>& pmf_table() const { return pmf_; }

	Moments moments() const;

	// b * pmf(b) / Z_G; zero at b = 0.
	double neighbor_degree_pmf(std::size_t b) const;

	// <K^2>/Z > 2 under the truncated model.
	bool above_phase_transition() const;

private:
	DegreeModel(ModelKind kind, double param, std::vector<double> pmf);

	ModelKind kind_;
	double param_;
	std::vector<double> pmf_;
};

// Riemann zeta for s > 1, direct sum plus Euler-Maclaurin tail.
double riemann_zeta(double s);

// Roots of the untruncated phase-transition criterion <K^2>/Z = 2.
double critical_z();    // Poisson family: 1.0
double critical_tau();  // power-law family via tail-summed zeta: ~3.479

}  // namespace dsg
