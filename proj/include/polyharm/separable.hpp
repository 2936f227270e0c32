#ifndef POLYHARM_SEPARABLE_HPP
#define POLYHARM_SEPARABLE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "polyharm/expansion.hpp"
#include "polyharm/grid.hpp"
#include "polyharm/modes.hpp"

namespace polyharm {

/// Product solution u(x) = X_1(x_1) ... X_{m-1}(x_{m-1}) * X_m(x_m) of the
/// polyharmonic equation of power n. The last factor's K must equal the
/// sum of the mode separation constants.
template <typename Scalar = double>
class SeparableSolution {
  public:
    using Last = std::variant<LastFactor<Scalar>, ExpBasisFactor<Scalar>>;

    const std::vector<Mode1D<Scalar>>& modes() const { return modes_; }
    const Last& last() const { return last_; }
    int dims() const { return static_cast<int>(modes_.size()) + 1; }
    int power() const { return n_; }

    Scalar last_K() const {
        return std::visit([](const auto& f) { return f.K(); }, last_);
    }

    Scalar last_eval(Scalar x, int order = 0) const {
        return std::visit([&](const auto& f) { return f.eval(x, order); }, last_);
    }

    static SeparableSolution assemble(std::vector<Mode1D<Scalar>> modes, Last last, int n) {
        if (modes.empty())
            throw std::invalid_argument("assemble: need at least one mode (m >= 2)");
        if (n < 1) throw std::invalid_argument("assemble: operator power must be >= 1");

        Scalar lambda_sum = Scalar(0);
        for (const auto& mode : modes) lambda_sum += mode.lambda();
        const Scalar K = std::visit([](const auto& f) { return f.K(); }, last);
        using std::abs;
        if (abs(K - lambda_sum) > Scalar(1e-12))
            throw std::invalid_argument("assemble: last factor K = " + std::to_string(double(K)) +
                                        " does not match mode lambda sum " +
                                        std::to_string(double(lambda_sum)));

        const int mult = std::visit([](const auto& f) { return f.multiplicity(); }, last);
        if (mult != n)
            throw std::invalid_argument("assemble: last factor multiplicity " +
                                        std::to_string(mult) +
                                        " does not match operator power " + std::to_string(n));
        return SeparableSolution(std::move(modes), std::move(last), n);
    }

  private:
    SeparableSolution(std::vector<Mode1D<Scalar>> modes, Last last, int n)
        : modes_(std::move(modes)), last_(std::move(last)), n_(n) {}

    std::vector<Mode1D<Scalar>> modes_;
    Last last_;
    int n_;
};

template <typename Scalar>
SeparableSolution<Scalar> assemble(std::vector<Mode1D<Scalar>> modes,
                                   typename SeparableSolution<Scalar>::Last last, int n) {
    return SeparableSolution<Scalar>::assemble(std::move(modes), std::move(last), n);
}

template <typename Scalar>
Scalar eval(const SeparableSolution<Scalar>& sol, const Eigen::Ref<const Eigen::VectorX<Scalar>>& point) {
    if (point.size() != sol.dims())
        throw std::invalid_argument("eval: point dimension mismatch");
    Scalar prod = Scalar(1);
    for (size_t i = 0; i < sol.modes().size(); ++i)
        prod *= sol.modes()[i].eval(point[static_cast<Eigen::Index>(i)], 0);
    return prod * sol.last_eval(point[point.size() - 1], 0);
}

/// Delta^n u at `point` via the multinomial expansion, each term a product
/// of closed-form even-order factor derivatives. Returns the signed sum
/// and the cancellation scale sum |term|.
template <typename Scalar>
std::pair<Scalar, Scalar> polyharmonic_terms(const SeparableSolution<Scalar>& sol,
                                             const Eigen::Ref<const Eigen::VectorX<Scalar>>& point) {
    if (point.size() != sol.dims())
        throw std::invalid_argument("polyharmonic_terms: point dimension mismatch");
    const int m = sol.dims();
    Scalar sum = Scalar(0), scale = Scalar(0);
    using std::abs;
    for (const ExpansionTerm& term : expand_polyharmonic(sol.power(), m)) {
        Scalar value = Scalar(term.coefficient);
        for (int i = 0; i < m - 1; ++i)
            value *= sol.modes()[i].eval(point[i], term.derivative_orders[i]);
        value *= sol.last_eval(point[m - 1], term.derivative_orders[m - 1]);
        sum += value;
        scale += abs(value);
    }
    return {sum, scale};
}

template <typename Scalar>
Scalar apply_polyharmonic_exact(const SeparableSolution<Scalar>& sol,
                                const Eigen::Ref<const Eigen::VectorX<Scalar>>& point) {
    return polyharmonic_terms<Scalar>(sol, point).first;
}

struct ResidualStats {
    double max_abs = 0.0;
    double max_rel = 0.0;       // max_abs over the largest cancellation scale seen
    double scale = 0.0;         // max over points of sum |term|
    std::vector<double> per_point;
};

/// Residual statistics of Delta^n u over a point set. Relative values are
/// normalized by the cancellation scale, not |u|: the residual is a sum of
/// large canceling terms and |u| can vanish at regular points.
template <typename Scalar>
ResidualStats residual_report(const SeparableSolution<Scalar>& sol,
                              const std::vector<Eigen::VectorX<Scalar>>& points) {
    if (points.empty()) throw std::invalid_argument("residual_report: no sample points");
    ResidualStats stats;
    for (const auto& p : points) {
        auto [res, scale] = polyharmonic_terms<Scalar>(sol, p);
        stats.per_point.push_back(double(std::abs(res)));
        stats.max_abs = std::max(stats.max_abs, double(std::abs(res)));
        stats.scale = std::max(stats.scale, double(scale));
    }
    stats.max_rel = stats.max_abs / std::max(stats.scale, 1.0);
    return stats;
}

/// Samples u on a tensor grid; flat array in the grid's row-major order.
template <typename Scalar>
std::vector<Scalar> eval_grid(const SeparableSolution<Scalar>& sol, const Grid& grid) {
    grid.validate();
    if (grid.dims() != sol.dims())
        throw std::invalid_argument("eval_grid: grid dimension mismatch");
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(grid.size()));
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        Eigen::VectorX<Scalar> p = grid.point(i).template cast<Scalar>();
        out.push_back(eval<Scalar>(sol, p));
    }
    return out;
}

} // namespace polyharm

#endif
