#ifndef POLYHARM_MODES_HPP
#define POLYHARM_MODES_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "polyharm/expansion.hpp"

namespace polyharm {

// Derivatives above this order are rejected; the Leibniz sums over
// x^{r-1} carriers degrade well before machine epsilon matters there.
inline constexpr int kMaxDerivativeOrder = 64;

enum class ModeKind { Oscillatory, Hyperbolic, Affine };

/// A single-coordinate factor X(x) with separation constant lambda:
///   Oscillatory: a cos(w x) + b sin(w x),   lambda = -w^2
///   Hyperbolic:  a cosh(u x) + b sinh(u x), lambda = +u^2
///   Affine:      a + b x,                   lambda = 0
/// Derivatives of every order are closed-form.
template <typename Scalar = double>
class Mode1D {
  public:
    static Mode1D oscillatory(Scalar omega, Scalar a, Scalar b) {
        if (!(omega > Scalar(0)))
            throw std::invalid_argument("Mode1D: omega must be > 0 (use affine for zero frequency)");
        return Mode1D(ModeKind::Oscillatory, omega, a, b);
    }
    static Mode1D hyperbolic(Scalar mu, Scalar a, Scalar b) {
        if (!(mu > Scalar(0)))
            throw std::invalid_argument("Mode1D: mu must be > 0 (use affine for zero frequency)");
        return Mode1D(ModeKind::Hyperbolic, mu, a, b);
    }
    static Mode1D affine(Scalar a, Scalar b) {
        return Mode1D(ModeKind::Affine, Scalar(0), a, b);
    }

    ModeKind kind() const { return kind_; }
    Scalar rate() const { return rate_; }   // omega or mu; 0 for affine
    Scalar a() const { return a_; }
    Scalar b() const { return b_; }

    /// Separation constant: X'' = lambda * X.
    Scalar lambda() const {
        switch (kind_) {
            case ModeKind::Oscillatory: return -rate_ * rate_;
            case ModeKind::Hyperbolic: return rate_ * rate_;
            default: return Scalar(0);
        }
    }

    /// d^order/dx^order X(x), exact closed form.
    Scalar eval(Scalar x, int order = 0) const {
        if (order < 0 || order > kMaxDerivativeOrder)
            throw std::invalid_argument("Mode1D::eval: unsupported derivative order");
        using std::cos; using std::cosh; using std::pow; using std::sin; using std::sinh;
        switch (kind_) {
            case ModeKind::Oscillatory: {
                const Scalar s = pow(rate_, Scalar(order));
                const Scalar c = cos(rate_ * x), sn = sin(rate_ * x);
                switch (order % 4) {
                    case 0: return s * (a_ * c + b_ * sn);
                    case 1: return s * (-a_ * sn + b_ * c);
                    case 2: return s * (-a_ * c - b_ * sn);
                    default: return s * (a_ * sn - b_ * c);
                }
            }
            case ModeKind::Hyperbolic: {
                const Scalar s = pow(rate_, Scalar(order));
                const Scalar ch = cosh(rate_ * x), sh = sinh(rate_ * x);
                return (order % 2 == 0) ? s * (a_ * ch + b_ * sh) : s * (a_ * sh + b_ * ch);
            }
            default:
                if (order == 0) return a_ + b_ * x;
                if (order == 1) return b_;
                return Scalar(0);
        }
    }

  private:
    Mode1D(ModeKind kind, Scalar rate, Scalar a, Scalar b)
        : kind_(kind), rate_(rate), a_(a), b_(b) {}

    ModeKind kind_;
    Scalar rate_;
    Scalar a_, b_;
};

struct CheckReport {
    bool pass = true;
    double max_residual = 0.0;
    std::vector<double> residuals;  // per sample point, relative
};

/// Verifies X^(2j) = lambda^j X at the sample points; residuals are
/// relative to max(|lambda^j X|, 1).
template <typename Scalar>
CheckReport check_ode_chain(const Mode1D<Scalar>& mode, int j,
                            const std::vector<Scalar>& sample_points, double tol) {
    if (j < 1 || j > 8) throw std::invalid_argument("check_ode_chain: j must be in [1, 8]");
    using std::abs; using std::pow;
    CheckReport rep;
    const Scalar lam_j = pow(mode.lambda(), Scalar(j));
    for (Scalar x : sample_points) {
        const Scalar lhs = mode.eval(x, 2 * j);
        const Scalar rhs = lam_j * mode.eval(x, 0);
        const double rel = double(abs(lhs - rhs)) / std::max(double(abs(rhs)), 1.0);
        rep.residuals.push_back(rel);
        rep.max_residual = std::max(rep.max_residual, rel);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

namespace detail {

// d^k/dx^k of the trig/hyperbolic/exponential carriers at rate s.
enum class Carrier { Cos, Sin, Cosh, Sinh, ExpDecay, ExpGrow, One };

template <typename Scalar>
Scalar carrier_derivative(Carrier c, Scalar s, Scalar x, int k) {
    using std::cos; using std::cosh; using std::exp; using std::pow;
    using std::sin; using std::sinh;
    switch (c) {
        case Carrier::Cos:
            switch (k % 4) {
                case 0: return pow(s, Scalar(k)) * cos(s * x);
                case 1: return -pow(s, Scalar(k)) * sin(s * x);
                case 2: return -pow(s, Scalar(k)) * cos(s * x);
                default: return pow(s, Scalar(k)) * sin(s * x);
            }
        case Carrier::Sin:
            switch (k % 4) {
                case 0: return pow(s, Scalar(k)) * sin(s * x);
                case 1: return pow(s, Scalar(k)) * cos(s * x);
                case 2: return -pow(s, Scalar(k)) * sin(s * x);
                default: return -pow(s, Scalar(k)) * cos(s * x);
            }
        case Carrier::Cosh:
            return pow(s, Scalar(k)) * ((k % 2 == 0) ? cosh(s * x) : sinh(s * x));
        case Carrier::Sinh:
            return pow(s, Scalar(k)) * ((k % 2 == 0) ? sinh(s * x) : cosh(s * x));
        case Carrier::ExpDecay:
            return pow(-s, Scalar(k)) * exp(-s * x);
        case Carrier::ExpGrow:
            return pow(s, Scalar(k)) * exp(s * x);
        default:
            return k == 0 ? Scalar(1) : Scalar(0);
    }
}

// d^order/dx^order of x^p * g(x) by the general Leibniz rule.
template <typename Scalar>
Scalar monomial_times_carrier(int p, Carrier g, Scalar s, Scalar x, int order) {
    Scalar sum = Scalar(0);
    const int jmax = std::min(order, p);
    for (int j = 0; j <= jmax; ++j) {
        // falling factorial p (p-1) ... (p-j+1)
        Scalar fall = Scalar(1);
        for (int q = 0; q < j; ++q) fall *= Scalar(p - q);
        using std::pow;
        const Scalar xpow = (p - j == 0) ? Scalar(1) : pow(x, Scalar(p - j));
        sum += Scalar(detail::binomial(order, j)) * fall * xpow *
               carrier_derivative(g, s, x, order - j);
    }
    return sum;
}

} // namespace detail

/// Last-coordinate factor annihilated by (D^2 + K)^n:
///   K < 0: sum_r x^{r-1} [c_r cosh(s x) + d_r sinh(s x)], s = sqrt(-K), r <= n
///   K > 0: sum_r x^{r-1} [c_r cos(s x) + d_r sin(s x)],  s = sqrt(K),  r <= n
///   K = 0: sum_r c_r x^{r-1}, r <= 2n (root 0 has multiplicity 2n)
/// The permissive `paper_basis` constructor accepts r <= 2n for K != 0 so
/// the resulting nonzero residual can be demonstrated.
template <typename Scalar = double>
class LastFactor {
  public:
    static LastFactor make(Scalar K, int multiplicity,
                           Eigen::ArrayX<Scalar> c, Eigen::ArrayX<Scalar> d) {
        return build(K, multiplicity, std::move(c), std::move(d), /*permissive=*/false);
    }
    static LastFactor paper_basis(Scalar K, int multiplicity,
                                  Eigen::ArrayX<Scalar> c, Eigen::ArrayX<Scalar> d) {
        return build(K, multiplicity, std::move(c), std::move(d), /*permissive=*/true);
    }

    Scalar K() const { return K_; }
    int multiplicity() const { return n_; }
    const Eigen::ArrayX<Scalar>& c() const { return c_; }
    const Eigen::ArrayX<Scalar>& d() const { return d_; }

    Scalar eval(Scalar x, int order = 0) const {
        if (order < 0 || order > kMaxDerivativeOrder)
            throw std::invalid_argument("LastFactor::eval: unsupported derivative order");
        using std::sqrt;
        Scalar sum = Scalar(0);
        if (K_ == Scalar(0)) {
            for (int r = 1; r <= c_.size(); ++r)
                sum += c_[r - 1] *
                       detail::monomial_times_carrier(r - 1, detail::Carrier::One, Scalar(0), x, order);
            return sum;
        }
        const Scalar s = sqrt(K_ < Scalar(0) ? -K_ : K_);
        const auto ca = K_ < Scalar(0) ? detail::Carrier::Cosh : detail::Carrier::Cos;
        const auto cb = K_ < Scalar(0) ? detail::Carrier::Sinh : detail::Carrier::Sin;
        for (int r = 1; r <= c_.size(); ++r) {
            if (c_[r - 1] != Scalar(0))
                sum += c_[r - 1] * detail::monomial_times_carrier(r - 1, ca, s, x, order);
            if (d_[r - 1] != Scalar(0))
                sum += d_[r - 1] * detail::monomial_times_carrier(r - 1, cb, s, x, order);
        }
        return sum;
    }

  private:
    static LastFactor build(Scalar K, int n, Eigen::ArrayX<Scalar> c, Eigen::ArrayX<Scalar> d,
                            bool permissive) {
        if (n < 1) throw std::invalid_argument("LastFactor: multiplicity must be >= 1");
        if (K == Scalar(0)) {
            if (c.size() < 1 || c.size() > 2 * n)
                throw std::invalid_argument("LastFactor: K = 0 basis needs 1..2n polynomial coefficients");
            if (d.size() != 0 && (d != Scalar(0)).any())
                throw std::invalid_argument("LastFactor: K = 0 basis has no d coefficients");
        } else {
            const int rmax = permissive ? 2 * n : n;
            if (c.size() != d.size())
                throw std::invalid_argument("LastFactor: c and d must have equal length");
            if (c.size() < 1 || c.size() > rmax)
                throw std::invalid_argument("LastFactor: basis length exceeds root multiplicity");
        }
        LastFactor lf;
        lf.K_ = K;
        lf.n_ = n;
        lf.c_ = std::move(c);
        lf.d_ = std::move(d);
        return lf;
    }

    Scalar K_;
    int n_;
    Eigen::ArrayX<Scalar> c_, d_;
};

/// Same factor for K < 0 in the exponential basis:
///   sum_r x^{r-1} [q_r e^{-s x} + f_r e^{+s x}], s = sqrt(-K).
/// Half-space solutions keep only the decaying part (f_r = 0).
template <typename Scalar = double>
class ExpBasisFactor {
  public:
    static ExpBasisFactor make(Scalar K, int multiplicity,
                               Eigen::ArrayX<Scalar> decay, Eigen::ArrayX<Scalar> growth) {
        if (!(K < Scalar(0)))
            throw std::invalid_argument("ExpBasisFactor: requires K < 0");
        if (multiplicity < 1)
            throw std::invalid_argument("ExpBasisFactor: multiplicity must be >= 1");
        if (decay.size() != growth.size() || decay.size() < 1 || decay.size() > multiplicity)
            throw std::invalid_argument("ExpBasisFactor: basis length exceeds root multiplicity");
        ExpBasisFactor f;
        f.K_ = K;
        f.n_ = multiplicity;
        f.q_ = std::move(decay);
        f.f_ = std::move(growth);
        return f;
    }

    Scalar K() const { return K_; }
    int multiplicity() const { return n_; }
    const Eigen::ArrayX<Scalar>& decay_coeffs() const { return q_; }
    const Eigen::ArrayX<Scalar>& growth_coeffs() const { return f_; }

    Scalar eval(Scalar x, int order = 0) const {
        if (order < 0 || order > kMaxDerivativeOrder)
            throw std::invalid_argument("ExpBasisFactor::eval: unsupported derivative order");
        using std::sqrt;
        const Scalar s = sqrt(-K_);
        Scalar sum = Scalar(0);
        for (int r = 1; r <= q_.size(); ++r) {
            if (q_[r - 1] != Scalar(0))
                sum += q_[r - 1] *
                       detail::monomial_times_carrier(r - 1, detail::Carrier::ExpDecay, s, x, order);
            if (f_[r - 1] != Scalar(0))
                sum += f_[r - 1] *
                       detail::monomial_times_carrier(r - 1, detail::Carrier::ExpGrow, s, x, order);
        }
        return sum;
    }

  private:
    ExpBasisFactor() = default;

    Scalar K_ = Scalar(-1);
    int n_ = 1;
    Eigen::ArrayX<Scalar> q_, f_;
};

/// cosh/sinh -> exponential change of basis (exact coefficient map).
template <typename Scalar>
ExpBasisFactor<Scalar> to_exp_basis(const LastFactor<Scalar>& lf) {
    if (!(lf.K() < Scalar(0)))
        throw std::invalid_argument("to_exp_basis: requires K < 0");
    const auto& c = lf.c();
    const auto& d = lf.d();
    Eigen::ArrayX<Scalar> q = (c - d) / Scalar(2);
    Eigen::ArrayX<Scalar> f = (c + d) / Scalar(2);
    return ExpBasisFactor<Scalar>::make(lf.K(), lf.multiplicity(), q, f);
}

template <typename Scalar>
LastFactor<Scalar> to_hyperbolic_basis(const ExpBasisFactor<Scalar>& ef) {
    const auto& q = ef.decay_coeffs();
    const auto& f = ef.growth_coeffs();
    Eigen::ArrayX<Scalar> c = q + f;
    Eigen::ArrayX<Scalar> d = f - q;
    return LastFactor<Scalar>::make(ef.K(), ef.multiplicity(), c, d);
}

/// Residual of (D^2 + K)^n applied to the factor, expanded binomially:
/// sum_k C(n,k) K^k X^(2n-2k). Relative to the sum of term magnitudes.
template <typename Factor, typename Scalar>
CheckReport annihilation_check(const Factor& lf, int n,
                               const std::vector<Scalar>& sample_points, double tol) {
    using std::abs; using std::pow;
    CheckReport rep;
    for (Scalar x : sample_points) {
        Scalar res = Scalar(0), scale = Scalar(0);
        for (int k = 0; k <= n; ++k) {
            const Scalar term = Scalar(detail::binomial(n, k)) * pow(lf.K(), Scalar(k)) *
                                lf.eval(x, 2 * n - 2 * k);
            res += term;
            scale += abs(term);
        }
        const double rel = double(abs(res)) / std::max(double(scale), 1.0);
        rep.residuals.push_back(rel);
        rep.max_residual = std::max(rep.max_residual, rel);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

} // namespace polyharm

#endif
