#include "hatlab/homogenize.hpp"

#include <cmath>
#include <functional>

namespace hatlab {

double hooke_dot(const Eigen::Matrix3d& A, const Eigen::Matrix3d& B) {
    return A(0, 0) * B(0, 0) + A(1, 1) * B(1, 1) + 2.0 * A(0, 1) * B(0, 1) +
           4.0 * (A(0, 2) * B(0, 2) + A(1, 2) * B(1, 2) + A(2, 2) * B(2, 2));
}

double tensor_norm(const HookeVoigt& H) { return std::sqrt(hooke_dot(H.H, H.H)); }

Eigen::Matrix3d iso_basis1() {
    Eigen::Matrix3d m;
    m << 1, 1, 0, 1, 1, 0, 0, 0, 0;
    return 0.5 * m;
}

Eigen::Matrix3d iso_basis2() {
    Eigen::Matrix3d m;
    m << 1, -1, 0, -1, 1, 0, 0, 0, 1;
    return m / (2.0 * std::sqrt(2.0));
}

HookeVoigt iso_hooke(double lambda, double mu) {
    HookeVoigt out;
    out.H << lambda + 2 * mu, lambda, 0, lambda, lambda + 2 * mu, 0, 0, 0, mu;
    return out;
}

IsotropyDecomposition decompose(const HookeVoigt& Hv) {
    const Eigen::Matrix3d& H = Hv.H;
    const double norm = tensor_norm(Hv);
    if (norm == 0.0)
        throw std::invalid_argument("isotropy index undefined for the zero tensor");

    IsotropyDecomposition d;
    d.alpha1 = hooke_dot(H, iso_basis1());
    d.alpha2 = hooke_dot(H, iso_basis2());
    d.Hperp = H - d.alpha1 * iso_basis1() - d.alpha2 * iso_basis2();
    d.index_projection = std::sqrt(std::max(0.0, hooke_dot(d.Hperp, d.Hperp))) / norm;

    const double h11 = H(0, 0), h22 = H(1, 1), h12 = H(0, 1);
    const double h16 = H(0, 2), h26 = H(1, 2), h66 = H(2, 2);
    const double perp2 = 4.0 * (h16 * h16 + h26 * h26) +
                         0.5 * (h11 - h22) * (h11 - h22) +
                         0.125 * std::pow(h11 + h22 - 2.0 * h12 - 4.0 * h66, 2);
    d.index = std::sqrt(std::max(0.0, perp2)) / norm;

    d.lambda = h12;
    d.mu = h66;
    d.nu = d.lambda / (d.lambda + 2.0 * d.mu);
    return d;
}

Eigen::Matrix2d load_case_strain(int k) {
    Eigen::Matrix2d E = Eigen::Matrix2d::Zero();
    switch (k) {
        case 0: E(0, 0) = 1.0; break;
        case 1: E(1, 1) = 1.0; break;
        case 2: E(0, 1) = E(1, 0) = 0.5; break;
        default: throw std::invalid_argument("load case index must be 0, 1 or 2");
    }
    return E;
}

LoadCaseResult run_load_cases(
    const std::function<Eigen::Vector3d(int)>& stress_for_case,
    double max_asymmetry) {
    Eigen::Matrix3d H;
    for (int k = 0; k < 3; ++k) H.col(k) = stress_for_case(k);

    LoadCaseResult out;
    const double scale = H.norm();
    out.asymmetry = scale > 0 ? (H - H.transpose()).norm() / scale : 0.0;
    if (out.asymmetry > max_asymmetry)
        throw std::runtime_error("Hooke matrix reciprocity violated (asymmetry " +
                                 std::to_string(out.asymmetry) + ")");
    out.hooke.H = 0.5 * (H + H.transpose());
    return out;
}

SetAverage set_average(const std::vector<ResultRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("set_average: no rows");
    SetAverage avg;
    avg.model = rows.front().model;
    avg.n = rows.front().n;
    avg.count = int(rows.size());
    double nu_sum = 0.0, idx_min = rows.front().index, idx_max = rows.front().index;
    for (const auto& r : rows) {
        if (r.n != avg.n || r.model != avg.model)
            throw std::invalid_argument("set_average: mixed (model, n) input");
        avg.lambda_mean += r.lambda;
        avg.mu_mean += r.mu;
        avg.index_mean += r.index;
        nu_sum += r.nu;
        idx_min = std::min(idx_min, r.index);
        idx_max = std::max(idx_max, r.index);
    }
    const double n = double(rows.size());
    avg.lambda_mean /= n;
    avg.mu_mean /= n;
    avg.index_mean /= n;
    avg.nu_of_means = avg.lambda_mean / (avg.lambda_mean + 2.0 * avg.mu_mean);
    avg.nu_mean_of_ratios = nu_sum / n;
    avg.index_min = idx_min;
    avg.index_max = idx_max;
    double var = 0.0;
    for (const auto& r : rows) var += (r.index - avg.index_mean) * (r.index - avg.index_mean);
    avg.index_stddev = std::sqrt(var / n);
    return avg;
}

}  // namespace hatlab
