#ifndef POLYHARM_HALFSPACE_HPP
#define POLYHARM_HALFSPACE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "polyharm/quadrature.hpp"

namespace polyharm {

/// Dirichlet data f on the boundary plane x_m = L. Built-in kinds are
/// products of one 1D profile per boundary axis; tabulated data is 1D
/// piecewise linear, zero outside its abscissa range.
class BoundaryData {
  public:
    enum class Kind { Heaviside, Gaussian, Box, Tabulated };

    static BoundaryData heaviside() {
        BoundaryData f(Kind::Heaviside, 1);
        return f;
    }
    static BoundaryData gaussian(double width, int dim = 1) {
        if (!(width > 0)) throw std::invalid_argument("BoundaryData: gaussian width must be > 0");
        BoundaryData f(Kind::Gaussian, dim);
        f.width_ = width;
        return f;
    }
    static BoundaryData box(double a, double b, int dim = 1) {
        if (!(a < b)) throw std::invalid_argument("BoundaryData: box requires a < b");
        BoundaryData f(Kind::Box, dim);
        f.a_ = a;
        f.b_ = b;
        return f;
    }
    static BoundaryData tabulated(Eigen::ArrayXd abscissae, Eigen::ArrayXd samples) {
        if (abscissae.size() != samples.size() || abscissae.size() < 2)
            throw std::invalid_argument("BoundaryData: tabulated needs >= 2 matched samples");
        for (Eigen::Index i = 0; i + 1 < abscissae.size(); ++i)
            if (!(abscissae[i] < abscissae[i + 1]))
                throw std::invalid_argument("BoundaryData: tabulated abscissae must be strictly increasing");
        if (!samples.isFinite().all())
            throw std::invalid_argument("BoundaryData: tabulated samples must be finite");
        BoundaryData f(Kind::Tabulated, 1);
        f.abscissae_ = std::move(abscissae);
        f.samples_ = std::move(samples);
        return f;
    }

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double width() const { return width_; }
    double box_lo() const { return a_; }
    double box_hi() const { return b_; }

    double eval1d(double x) const {
        switch (kind_) {
            case Kind::Heaviside: return x > 0 ? 1.0 : 0.0;
            case Kind::Gaussian: return std::exp(-(x / width_) * (x / width_));
            case Kind::Box: return (x >= a_ && x <= b_) ? 1.0 : 0.0;
            default: {
                if (x <= abscissae_[0] || x >= abscissae_[abscissae_.size() - 1]) {
                    // outside support; endpoint samples themselves still count
                    if (x == abscissae_[0]) return samples_[0];
                    if (x == abscissae_[abscissae_.size() - 1]) return samples_[samples_.size() - 1];
                    return 0.0;
                }
                Eigen::Index hi = 1;
                while (abscissae_[hi] < x) ++hi;
                const double t = (x - abscissae_[hi - 1]) / (abscissae_[hi] - abscissae_[hi - 1]);
                return (1.0 - t) * samples_[hi - 1] + t * samples_[hi];
            }
        }
    }

    double eval(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        if (x.size() != dim_) throw std::invalid_argument("BoundaryData: dimension mismatch");
        double prod = 1.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) prod *= eval1d(x[i]);
        return prod;
    }

    /// Support radius for quadrature truncation; infinite kinds handled
    /// by closed forms elsewhere.
    double support_radius() const {
        switch (kind_) {
            case Kind::Gaussian: return 8.5 * width_;
            case Kind::Box: return std::max(std::abs(a_), std::abs(b_));
            case Kind::Tabulated:
                return std::max(std::abs(abscissae_[0]), std::abs(abscissae_[abscissae_.size() - 1]));
            default:
                throw std::logic_error("BoundaryData: heaviside has no finite support");
        }
    }

  private:
    BoundaryData(Kind k, int dim) : kind_(k), dim_(dim) {
        if (dim < 1) throw std::invalid_argument("BoundaryData: dimension must be >= 1");
    }

    Kind kind_;
    int dim_;
    double width_ = 1.0;
    double a_ = 0.0, b_ = 0.0;
    Eigen::ArrayXd abscissae_, samples_;
};

/// Frequency abscissae and quadrature weights on (0, w_max].
struct FrequencyGrid {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
    double w_max = 0.0;
};

/// Composite 15-point Kronrod panels of bounded width over [0, w_max];
/// resolves the trigonometric coefficient oscillation up to a few periods
/// per panel.
inline FrequencyGrid make_frequency_grid(double w_max, double max_panel_width = 2.0) {
    if (!(w_max > 0)) throw std::invalid_argument("make_frequency_grid: w_max must be > 0");
    if (!(max_panel_width > 0))
        throw std::invalid_argument("make_frequency_grid: panel width must be > 0");
    const int panels = std::max(1, static_cast<int>(std::ceil(w_max / max_panel_width)));
    const double width = w_max / panels;

    FrequencyGrid g;
    g.w_max = w_max;
    g.nodes.resize(Eigen::Index(panels) * 15);
    g.weights.resize(Eigen::Index(panels) * 15);
    Eigen::Index k = 0;
    for (int p = 0; p < panels; ++p) {
        const double a = p * width, c = a + 0.5 * width, hw = 0.5 * width;
        for (int i = 7; i >= 1; --i) {
            g.nodes[k] = c - hw * detail::kKronrodNodes[i];
            g.weights[k++] = hw * detail::kKronrodWeights[i];
        }
        g.nodes[k] = c;
        g.weights[k++] = hw * detail::kKronrodWeights[0];
        for (int i = 1; i <= 7; ++i) {
            g.nodes[k] = c + hw * detail::kKronrodNodes[i];
            g.weights[k++] = hw * detail::kKronrodWeights[i];
        }
    }
    return g;
}

struct HalfspaceConfig {
    double L = 0.0;
    int n = 1;
    double w_max = 0.0;          // 0: choose 40 / (x_m_min - L), capped at 400
    double x_m_min = 0.5;        // smallest evaluation height the grid must serve
    double max_panel_width = 2.0;
    QuadConfig quad{1e-10, 48};
};

/// Per-axis cosine/sine transform samples of f over a frequency grid,
/// 1/pi normalization per axis. The heaviside step is split into its mean
/// (dc = 1/2) plus an odd part whose regularized sine transform is
/// 1/(pi w); box data uses the closed-form antiderivatives.
struct AxisTransforms {
    Eigen::ArrayXd cosT;
    Eigen::ArrayXd sinT;
    double dc = 0.0;
    bool quad_converged = true;
    double quad_error = 0.0;
};

inline AxisTransforms axis_transforms(const BoundaryData& f, const FrequencyGrid& grid,
                                      const QuadConfig& quad) {
    const Eigen::Index nw = grid.nodes.size();
    AxisTransforms out;
    out.cosT = Eigen::ArrayXd::Zero(nw);
    out.sinT = Eigen::ArrayXd::Zero(nw);

    switch (f.kind()) {
        case BoundaryData::Kind::Heaviside:
            out.dc = 0.5;
            for (Eigen::Index i = 0; i < nw; ++i) out.sinT[i] = 1.0 / (M_PI * grid.nodes[i]);
            return out;
        case BoundaryData::Kind::Box: {
            const double a = f.box_lo(), b = f.box_hi();
            for (Eigen::Index i = 0; i < nw; ++i) {
                const double w = grid.nodes[i];
                out.cosT[i] = (std::sin(w * b) - std::sin(w * a)) / (M_PI * w);
                out.sinT[i] = (std::cos(w * a) - std::cos(w * b)) / (M_PI * w);
            }
            return out;
        }
        default: {
            const double R = f.support_radius();
            for (Eigen::Index i = 0; i < nw; ++i) {
                const double w = grid.nodes[i];
                auto qc = integrate([&](double x) { return f.eval1d(x) * std::cos(w * x); }, -R, R, quad);
                auto qs = integrate([&](double x) { return f.eval1d(x) * std::sin(w * x); }, -R, R, quad);
                out.cosT[i] = qc.value / M_PI;
                out.sinT[i] = qs.value / M_PI;
                out.quad_converged = out.quad_converged && qc.converged && qs.converged;
                out.quad_error = std::max({out.quad_error, qc.error, qs.error});
            }
            return out;
        }
    }
}

/// Spec-form coefficients for one axis: A(w) = e^{w L} f_cos(w) / pi and
/// B(w) likewise with sin (single decaying-branch normalization).
inline std::pair<Eigen::ArrayXd, Eigen::ArrayXd> fourier_coefficients(
    const BoundaryData& f, const FrequencyGrid& grid, double L, const QuadConfig& quad = {}) {
    if (L < 0) throw std::invalid_argument("fourier_coefficients: L must be >= 0");
    AxisTransforms t = axis_transforms(f, grid, quad);
    Eigen::ArrayXd boost = (grid.nodes * L).exp();
    return {t.cosT * boost, t.sinT * boost};
}

/// Quadrature representation of the half-space solution on x_m > L.
/// Coefficients are stored without the e^{||w|| L} boundary-offset factor;
/// reconstruction applies exp(-||w|| (x_m - L)), which is the same
/// solution evaluated without overflow-prone intermediates.
struct HalfspaceSolution {
    int m = 2;
    int n = 1;
    double L = 0.0;
    double dc = 0.0;
    std::vector<FrequencyGrid> wgrid;        // one per boundary axis
    std::vector<Eigen::ArrayXd> cosT, sinT;  // raw per-axis transforms
    bool quad_converged = true;

    /// Spec-form coefficient arrays for the given axis (valid as written
    /// for m = 2; for m > 2 only at L = 0 where the factor is 1).
    Eigen::ArrayXd Acoef(int axis = 0) const {
        return cosT[axis] * (wgrid[axis].nodes * L).exp();
    }
    Eigen::ArrayXd Bcoef(int axis = 0) const {
        return sinT[axis] * (wgrid[axis].nodes * L).exp();
    }
};

inline HalfspaceSolution build_halfspace_solution(const BoundaryData& f, int m,
                                                  const HalfspaceConfig& cfg = {}) {
    if (m < 2) throw std::invalid_argument("build_halfspace_solution: m must be >= 2");
    if (f.dim() != m - 1)
        throw std::invalid_argument("build_halfspace_solution: boundary data dimension != m - 1");
    if (cfg.n < 1) throw std::invalid_argument("build_halfspace_solution: n must be >= 1");
    if (cfg.L < 0) throw std::invalid_argument("build_halfspace_solution: L must be >= 0");

    double w_max = cfg.w_max;
    if (w_max <= 0) {
        if (!(cfg.x_m_min > cfg.L))
            throw std::invalid_argument("build_halfspace_solution: x_m_min must exceed L");
        w_max = std::min(40.0 / (cfg.x_m_min - cfg.L), 400.0);
    }

    HalfspaceSolution hs;
    hs.m = m;
    hs.n = cfg.n;
    hs.L = cfg.L;
    for (int axis = 0; axis < m - 1; ++axis) {
        FrequencyGrid grid = make_frequency_grid(w_max, cfg.max_panel_width);
        AxisTransforms t = axis_transforms(f, grid, cfg.quad);
        if (axis == 0) hs.dc = t.dc;
        hs.quad_converged = hs.quad_converged && t.quad_converged;
        hs.wgrid.push_back(std::move(grid));
        hs.cosT.push_back(std::move(t.cosT));
        hs.sinT.push_back(std::move(t.sinT));
    }
    return hs;
}

/// u(x, x_m) = dc + int over (0, w_max]^{m-1} of
///   prod_i [cosT_i cos(w_i x_i) + sinT_i sin(w_i x_i)] e^{-||w|| (x_m - L)} dw.
/// Only the decaying r = 1 branch is present; for n > 1 this is the
/// minimal solution matching the boundary data.
inline double reconstruct(const HalfspaceSolution& hs, const Eigen::Ref<const Eigen::VectorXd>& x,
                          double x_m) {
    if (x.size() != hs.m - 1)
        throw std::invalid_argument("reconstruct: boundary coordinate dimension mismatch");
    if (!(x_m > hs.L)) throw std::domain_error("reconstruct: requires x_m > L");

    const double depth = x_m - hs.L;
    const int d = hs.m - 1;

    double total = 0.0;
    // tensor loop over per-axis nodes; product of angular factors, joint decay
    std::vector<Eigen::Index> idx(d, 0);
    const auto advance = [&]() {
        for (int axis = d - 1; axis >= 0; --axis) {
            if (++idx[axis] < hs.wgrid[axis].nodes.size()) return true;
            idx[axis] = 0;
        }
        return false;
    };
    if (d == 1) {
        // common case, vectorized
        const auto& g = hs.wgrid[0];
        total = (g.weights *
                 (hs.cosT[0] * (g.nodes * x[0]).cos() + hs.sinT[0] * (g.nodes * x[0]).sin()) *
                 (-g.nodes * depth).exp())
                    .sum();
    } else {
        do {
            double prod = 1.0, wsq = 0.0, wt = 1.0;
            for (int axis = 0; axis < d; ++axis) {
                const double w = hs.wgrid[axis].nodes[idx[axis]];
                prod *= hs.cosT[axis][idx[axis]] * std::cos(w * x[axis]) +
                        hs.sinT[axis][idx[axis]] * std::sin(w * x[axis]);
                wsq += w * w;
                wt *= hs.wgrid[axis].weights[idx[axis]];
            }
            total += wt * prod * std::exp(-std::sqrt(wsq) * depth);
        } while (advance());
    }
    return hs.dc + total;
}

/// Bound on the discarded |w| > w_max tail: e^{-w_max (x_m - L)} times the
/// quadrature mass of the coefficients.
inline double truncation_bound(const HalfspaceSolution& hs, double x_m) {
    if (!(x_m > hs.L)) throw std::domain_error("truncation_bound: requires x_m > L");
    double mass = 1.0;
    double w_max = hs.wgrid[0].w_max;
    for (int axis = 0; axis < hs.m - 1; ++axis) {
        mass *= (hs.wgrid[axis].weights * (hs.cosT[axis].abs() + hs.sinT[axis].abs())).sum();
        w_max = std::min(w_max, hs.wgrid[axis].w_max);
    }
    return mass * std::exp(-w_max * (x_m - hs.L));
}

/// Half-plane Poisson kernel y / (pi (x^2 + y^2)); unit mass in x for
/// every y > 0.
inline double poisson_kernel_eval(double x, double y) {
    if (!(y > 0)) throw std::domain_error("poisson_kernel_eval: requires y > 0");
    return y / (M_PI * (x * x + y * y));
}

/// 1/2 + arctan(x/y)/pi: the half-plane solution for unit step data.
inline double heaviside_closed_form(double x, double y) {
    if (!(y > 0)) throw std::domain_error("heaviside_closed_form: requires y > 0");
    return 0.5 + std::atan(x / y) / M_PI;
}

/// Convolution of boundary data with the Poisson kernel at (x, y), y > 0.
/// Finite supports integrate directly; the heaviside tail uses the
/// arctan antiderivative.
inline double convolve_halfplane(const BoundaryData& f, double x, double y,
                                 const QuadConfig& quad = {}) {
    if (!(y > 0)) throw std::domain_error("convolve_halfplane: requires y > 0");
    if (f.dim() != 1) throw std::invalid_argument("convolve_halfplane: requires 1-d boundary data");

    auto integrand = [&](double z) { return f.eval1d(z) * poisson_kernel_eval(x - z, y); };

    // integrate [lo, hi] split at the kernel peak z = x
    auto piecewise = [&](double lo, double hi) {
        double total = 0.0;
        if (x > lo && x < hi) {
            total += integrate(integrand, lo, x, quad).value;
            total += integrate(integrand, x, hi, quad).value;
        } else {
            total += integrate(integrand, lo, hi, quad).value;
        }
        return total;
    };

    if (f.kind() == BoundaryData::Kind::Heaviside) {
        const double Z = std::max(0.0, x) + 100.0 * y + 1.0;
        const double tail = 0.5 - std::atan((Z - x) / y) / M_PI;
        return piecewise(0.0, Z) + tail;
    }
    const double R = f.support_radius();
    return piecewise(-R, R);
}

struct CrossValidationReport {
    bool pass = true;
    double max_abs_diff = 0.0;
    std::vector<double> per_point;
};

/// Fourier reconstruction against Poisson convolution (m = 2, n = 1) on a
/// set of (x, y) points with y > L.
inline CrossValidationReport cross_validate(const BoundaryData& f,
                                            const std::vector<Eigen::Vector2d>& points, double tol,
                                            HalfspaceConfig cfg = {}) {
    if (points.empty()) throw std::invalid_argument("cross_validate: no points");
    if (cfg.w_max <= 0) {
        double y_min = points[0][1];
        for (const auto& p : points) y_min = std::min(y_min, p[1]);
        cfg.x_m_min = y_min;
    }
    cfg.n = 1;
    HalfspaceSolution hs = build_halfspace_solution(f, 2, cfg);
    CrossValidationReport rep;
    for (const auto& p : points) {
        Eigen::VectorXd x(1);
        x[0] = p[0];
        const double via_fourier = reconstruct(hs, x, p[1]);
        const double via_kernel = convolve_halfplane(f, p[0], p[1], cfg.quad);
        const double diff = std::abs(via_fourier - via_kernel);
        rep.per_point.push_back(diff);
        rep.max_abs_diff = std::max(rep.max_abs_diff, diff);
    }
    rep.pass = rep.max_abs_diff <= tol;
    return rep;
}

} // namespace polyharm

#endif
