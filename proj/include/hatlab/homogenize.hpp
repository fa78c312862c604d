#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hatlab {

// Macroscopic Hooke matrix in Voigt form: (S11,S22,S12) = H (E11,E22,2E12).
// Units are force/length (stress per unit thickness).
struct HookeVoigt {
    Eigen::Matrix3d H = Eigen::Matrix3d::Zero();

    double h11() const { return H(0, 0); }
    double h12() const { return H(0, 1); }
    double h16() const { return H(0, 2); }
    double h22() const { return H(1, 1); }
    double h26() const { return H(1, 2); }
    double h66() const { return H(2, 2); }
};

// Inner product of Hooke-type tensors induced by A::B = A_ijkl B_ijkl,
// written out in Voigt components.
double hooke_dot(const Eigen::Matrix3d& A, const Eigen::Matrix3d& B);
double tensor_norm(const HookeVoigt& H);

// Orthonormal isotropic basis (H1, H2) under hooke_dot.
Eigen::Matrix3d iso_basis1();
Eigen::Matrix3d iso_basis2();

// Voigt matrix of the isotropic tensor with Lame constants (lambda, mu).
HookeVoigt iso_hooke(double lambda, double mu);

struct IsotropyDecomposition {
    double alpha1 = 0.0;        // H :: H1
    double alpha2 = 0.0;        // H :: H2
    Eigen::Matrix3d Hperp = Eigen::Matrix3d::Zero();
    double index = 0.0;         // ||Hperp|| / ||H||, closed form
    double index_projection = 0.0;  // same, via explicit projection (cross-check)
    double lambda = 0.0;        // H12
    double mu = 0.0;            // H66
    double nu = 0.0;            // lambda / (lambda + 2 mu)
};

// Throws std::invalid_argument on the zero tensor (index undefined).
IsotropyDecomposition decompose(const HookeVoigt& H);

// Builds the Voigt Hooke matrix column by column from the three load cases
// E in {(1,0,0),(0,1,0),(0,0,1/2)}. `stress_for_case` returns the Voigt
// stress (S11,S22,S12) for load case k. The result is symmetrized; the
// relative asymmetry is recorded and must stay below `max_asymmetry`.
struct LoadCaseResult {
    HookeVoigt hooke;
    double asymmetry = 0.0;     // max |H - H^T| relative to ||H||
};
LoadCaseResult run_load_cases(
    const std::function<Eigen::Vector3d(int)>& stress_for_case,
    double max_asymmetry = 1e-6);

// The three macroscopic strain cases of the homogenization protocol,
// as symmetric 2x2 matrices: e1, e2, and the shear case E12=E21=1/2.
Eigen::Matrix2d load_case_strain(int k);

// Per-realization result of one homogenization run.
struct ResultRow {
    std::string model;          // "spring" | "beam"
    int n = 0;                  // length scale (disk radius in a units)
    int realization = 0;
    double center_x = 0.0, center_y = 0.0;
    std::int64_t polygons = 0;
    std::int64_t interior_dofs = 0;
    HookeVoigt hooke;
    double lambda = 0.0, mu = 0.0, nu = 0.0, index = 0.0;
    double residual_max = 0.0;
    double wall_time_s = 0.0;
};

struct SetAverage {
    std::string model;
    int n = 0;
    int count = 0;
    double lambda_mean = 0.0, mu_mean = 0.0, index_mean = 0.0;
    double nu_of_means = 0.0;       // <lambda> / (<lambda> + 2<mu>)
    double nu_mean_of_ratios = 0.0; // mean of per-realization ratios
    double index_min = 0.0, index_max = 0.0, index_stddev = 0.0;
};

// Arithmetic set average over rows at one fixed (model, n).
// Throws std::invalid_argument on empty or mixed-n/model input.
SetAverage set_average(const std::vector<ResultRow>& rows);

}  // namespace hatlab
