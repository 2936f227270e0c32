#ifndef POLYHARM_GRID_HPP
#define POLYHARM_GRID_HPP

#include <stdexcept>

#include <Eigen/Core>

namespace polyharm {

/// Regular tensor grid. Flat ordering is row-major: the last axis varies
/// fastest.
struct Grid {
    Eigen::VectorXd origin;
    Eigen::VectorXd spacing;
    Eigen::VectorXi counts;

    int dims() const { return static_cast<int>(counts.size()); }

    Eigen::Index size() const {
        Eigen::Index total = 1;
        for (int i = 0; i < dims(); ++i) total *= counts[i];
        return total;
    }

    void validate() const {
        if (origin.size() != spacing.size() || origin.size() != counts.size())
            throw std::invalid_argument("Grid: axis metadata lengths differ");
        if (dims() == 0) throw std::invalid_argument("Grid: empty");
        for (int i = 0; i < dims(); ++i) {
            if (counts[i] < 1) throw std::invalid_argument("Grid: counts must be >= 1");
            if (!(spacing[i] > 0)) throw std::invalid_argument("Grid: spacing must be > 0");
        }
    }

    Eigen::VectorXd point(Eigen::Index flat) const {
        Eigen::VectorXd p(dims());
        for (int i = dims() - 1; i >= 0; --i) {
            p[i] = origin[i] + spacing[i] * double(flat % counts[i]);
            flat /= counts[i];
        }
        return p;
    }

    Eigen::ArrayXd axis(int i) const {
        return origin[i] + spacing[i] * Eigen::ArrayXd::LinSpaced(counts[i], 0, counts[i] - 1);
    }

    /// Closed interval [lo, hi] with `count` samples per axis entry.
    static Grid from_ranges(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                            const Eigen::VectorXi& counts) {
        Grid g;
        g.origin = lo;
        g.counts = counts;
        g.spacing.resize(lo.size());
        for (int i = 0; i < lo.size(); ++i)
            g.spacing[i] = counts[i] > 1 ? (hi[i] - lo[i]) / double(counts[i] - 1) : 1.0;
        g.validate();
        return g;
    }
};

} // namespace polyharm

#endif
