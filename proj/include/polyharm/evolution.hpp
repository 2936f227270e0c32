#ifndef POLYHARM_EVOLUTION_HPP
#define POLYHARM_EVOLUTION_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "polyharm/expansion.hpp"
#include "polyharm/modes.hpp"

namespace polyharm {

/// Separable time factor. For a spatial product of simple modes with
/// lambda sum S, the eigenvalue is k = S^n and the factor solves
///   parabolic:  T' = alpha k T
///   hyperbolic: T'' = beta^2 k T
struct TimeFactor {
    enum class Type { Parabolic, Hyperbolic };

    Type type = Type::Parabolic;
    double k = 0.0;
    double alpha = 1.0;  // parabolic diffusivity
    double beta = 1.0;   // hyperbolic wave speed, >= 0
    double A = 1.0;      // parabolic amplitude
    double C = 0.0, D = 0.0;  // hyperbolic branch amplitudes

    /// T and its first two time derivatives, closed form.
    double eval(double t, int order = 0) const {
        if (order < 0 || order > 2)
            throw std::invalid_argument("TimeFactor::eval: order must be in [0, 2]");
        if (type == Type::Parabolic) {
            const double rate = alpha * k;
            return A * std::pow(rate, double(order)) * std::exp(rate * t);
        }
        if (k > 0) {
            const double s = beta * std::sqrt(k);
            const double up = C * std::exp(s * t), dn = D * std::exp(-s * t);
            const double sign = (order == 1) ? -1.0 : 1.0;
            return std::pow(s, double(order)) * (up + sign * dn);
        }
        if (k < 0) {
            const double s = beta * std::sqrt(-k);
            const double cs = std::cos(s * t), sn = std::sin(s * t);
            switch (order) {
                case 0: return C * cs + D * sn;
                case 1: return s * (-C * sn + D * cs);
                default: return s * s * (-C * cs - D * sn);
            }
        }
        // double root: T = C + D t
        switch (order) {
            case 0: return C + D * t;
            case 1: return D;
            default: return 0.0;
        }
    }
};

/// u(x, t) = X_1(x_1) ... X_m(x_m) T(t) for the parabolic or hyperbolic
/// polyharmonic variant of power n.
struct SpaceTimeSolution {
    std::vector<Mode1D<double>> modes;  // all m coordinates are simple modes
    TimeFactor time;
    int n = 1;

    int dims() const { return static_cast<int>(modes.size()); }

    double lambda_sum() const {
        double s = 0.0;
        for (const auto& mode : modes) s += mode.lambda();
        return s;
    }

    double spatial_eval(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        double prod = 1.0;
        for (int i = 0; i < dims(); ++i) prod *= modes[size_t(i)].eval(x[i], 0);
        return prod;
    }

    double eval(const Eigen::Ref<const Eigen::VectorXd>& x, double t) const {
        return spatial_eval(x) * time.eval(t, 0);
    }
};

namespace detail {

inline double eigenvalue_k(const std::vector<Mode1D<double>>& modes, int n) {
    double s = 0.0;
    for (const auto& mode : modes) s += mode.lambda();
    return std::pow(s, double(n));
}

} // namespace detail

/// u solving alpha Delta^n u = u_t; T(t) = A e^{alpha k t}, k = (sum lambda)^n.
inline SpaceTimeSolution make_parabolic(std::vector<Mode1D<double>> spatial_modes, int n,
                                        double alpha, double A) {
    if (spatial_modes.empty()) throw std::invalid_argument("make_parabolic: need >= 1 mode");
    if (n < 1) throw std::invalid_argument("make_parabolic: n must be >= 1");
    SpaceTimeSolution sol;
    sol.time.type = TimeFactor::Type::Parabolic;
    sol.time.k = detail::eigenvalue_k(spatial_modes, n);
    sol.time.alpha = alpha;
    sol.time.A = A;
    sol.modes = std::move(spatial_modes);
    sol.n = n;
    return sol;
}

/// u solving beta^2 Delta^n u = u_tt; branch basis depends on sign(k).
inline SpaceTimeSolution make_hyperbolic(std::vector<Mode1D<double>> spatial_modes, int n,
                                         double beta, double C, double D) {
    if (spatial_modes.empty()) throw std::invalid_argument("make_hyperbolic: need >= 1 mode");
    if (n < 1) throw std::invalid_argument("make_hyperbolic: n must be >= 1");
    if (beta < 0) throw std::invalid_argument("make_hyperbolic: beta must be >= 0");
    SpaceTimeSolution sol;
    sol.time.type = TimeFactor::Type::Hyperbolic;
    sol.time.k = detail::eigenvalue_k(spatial_modes, n);
    sol.time.beta = beta;
    sol.time.C = C;
    sol.time.D = D;
    sol.modes = std::move(spatial_modes);
    sol.n = n;
    return sol;
}

struct SpaceTimeResidualReport {
    bool pass = true;
    double max_rel = 0.0;
    std::vector<double> per_point;
};

/// Defect of the evolution PDE at sample points. The spatial Delta^n u is
/// computed term-by-term through the multinomial expansion, not by
/// assuming Delta^n u = k u; the time derivative is closed form.
inline SpaceTimeResidualReport spacetime_residual(
    const SpaceTimeSolution& sol, const std::vector<std::pair<Eigen::VectorXd, double>>& points,
    double tol) {
    SpaceTimeResidualReport rep;
    const int m = sol.dims();
    const auto terms = expand_polyharmonic(sol.n, m);
    for (const auto& [x, t] : points) {
        if (x.size() != m)
            throw std::invalid_argument("spacetime_residual: point dimension mismatch");
        double lap_n = 0.0, lap_scale = 0.0;
        for (const ExpansionTerm& term : terms) {
            double value = double(term.coefficient);
            for (int i = 0; i < m; ++i)
                value *= sol.modes[size_t(i)].eval(x[i], term.derivative_orders[i]);
            lap_n += value;
            lap_scale += std::abs(value);
        }
        const double T0 = sol.time.eval(t, 0);

        double residual, scale;
        if (sol.time.type == TimeFactor::Type::Parabolic) {
            const double ut = sol.spatial_eval(x) * sol.time.eval(t, 1);
            residual = sol.time.alpha * lap_n * T0 - ut;
            scale = std::abs(sol.time.alpha) * lap_scale * std::abs(T0) + std::abs(ut);
        } else {
            const double utt = sol.spatial_eval(x) * sol.time.eval(t, 2);
            const double b2 = sol.time.beta * sol.time.beta;
            residual = b2 * lap_n * T0 - utt;
            scale = b2 * lap_scale * std::abs(T0) + std::abs(utt);
        }
        const double rel = std::abs(residual) / std::max(scale, 1.0);
        rep.per_point.push_back(rel);
        rep.max_rel = std::max(rep.max_rel, rel);
    }
    rep.pass = rep.max_rel <= tol;
    return rep;
}

} // namespace polyharm

#endif
