#ifndef POLYHARM_ORACLE_HPP
#define POLYHARM_ORACLE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Dense>

#include "polyharm/grid.hpp"

namespace polyharm {

/// Pointwise field evaluation; must be deterministic.
using FieldSampler = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

/// Central-difference Laplacian, O(h^2):
///   sum_i (f(x + h e_i) - 2 f(x) + f(x - h e_i)) / h^2.
inline double fd_laplacian(const FieldSampler& field,
                           const Eigen::Ref<const Eigen::VectorXd>& point, double h) {
    if (!(h > 0)) throw std::invalid_argument("fd_laplacian: h must be > 0");
    const int m = static_cast<int>(point.size());
    const double center = field(point);
    double sum = 0.0;
    Eigen::VectorXd p = point;
    for (int i = 0; i < m; ++i) {
        p[i] = point[i] + h;
        const double fp = field(p);
        p[i] = point[i] - h;
        const double fm = field(p);
        p[i] = point[i];
        sum += (fp - 2.0 * center + fm) / (h * h);
    }
    return sum;
}

/// n-fold composition of the discrete Laplacian. The stencil expands to
/// 2n points per axis; all samples come from the field directly.
inline double fd_polyharmonic(const FieldSampler& field,
                              const Eigen::Ref<const Eigen::VectorXd>& point, int n, double h) {
    if (n < 1 || n > 3) throw std::invalid_argument("fd_polyharmonic: n must be in [1, 3]");
    if (n == 1) return fd_laplacian(field, point, h);
    FieldSampler inner = [&field, n, h](const Eigen::Ref<const Eigen::VectorXd>& p) {
        return fd_polyharmonic(field, p, n - 1, h);
    };
    return fd_laplacian(inner, point, h);
}

enum class ConvergenceStatus { Ok, Inconclusive };

struct ConvergenceResult {
    ConvergenceStatus status = ConvergenceStatus::Inconclusive;
    double observed_order = 0.0;
    std::vector<double> residuals;  // |fd value| per h, in input order
};

/// Least-squares slope of log|residual| against log h, for fields whose
/// exact residual is zero. Residuals at the roundoff floor (< 1e-11) are
/// excluded; fewer than two usable points gives Inconclusive.
inline ConvergenceResult convergence_study(const FieldSampler& field,
                                           const Eigen::Ref<const Eigen::VectorXd>& point, int n,
                                           const std::vector<double>& h_list) {
    if (h_list.size() < 3)
        throw std::invalid_argument("convergence_study: need at least 3 step sizes");
    ConvergenceResult result;
    std::vector<double> log_h, log_r;
    for (double h : h_list) {
        const double r = std::abs(fd_polyharmonic(field, point, n, h));
        result.residuals.push_back(r);
        if (r >= 1e-11) {
            log_h.push_back(std::log(h));
            log_r.push_back(std::log(r));
        }
    }
    if (log_h.size() < 2) return result;  // everything at the floor

    const auto k = static_cast<Eigen::Index>(log_h.size());
    Eigen::MatrixXd A(k, 2);
    A.col(0) = Eigen::Map<Eigen::VectorXd>(log_h.data(), k);
    A.col(1).setOnes();
    Eigen::VectorXd b = Eigen::Map<Eigen::VectorXd>(log_r.data(), k);
    Eigen::Vector2d fit = A.colPivHouseholderQr().solve(b);
    result.observed_order = fit[0];
    result.status = ConvergenceStatus::Ok;
    return result;
}

/// Default step ladder; stays above the h^-4 roundoff amplification floor
/// for n = 2 in double precision.
inline std::vector<double> default_h_ladder() { return {1e-1, 5e-2, 2.5e-2, 1.25e-2}; }

} // namespace polyharm

#endif
