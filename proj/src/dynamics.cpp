#include "twomode/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "twomode/bogoliubov.hpp"
#include "twomode/errors.hpp"
#include "twomode/stepping.hpp"

namespace twomode {

namespace {

// Packed integration state: columns 0-3 hold ell, column 4 holds h.
using Packed = Eigen::Matrix<Complex, 4, 5>;

// Sign of d/dz_i acting on the normal-ordered exponential: + for a', - for a.
const Vec4 kDerivativeSign{1.0, -1.0, 1.0, -1.0};

Packed pack(const CharExponent& s) {
    Packed y;
    y.leftCols<4>() = s.ell;
    y.col(4) = s.h;
    return y;
}

CharExponent unpack(const Packed& y, double t) {
    CharExponent s;
    s.ell = y.leftCols<4>();
    s.h = y.col(4);
    s.t = t;
    return s;
}

// Rows map (a', a, b', b) to (q_a, p_a, q_b, p_b).
Mat4c quadrature_map(double s = 1.0 / std::sqrt(2.0)) {
    Mat4c t = Mat4c::Zero();
    t(0, 0) = s;
    t(0, 1) = s;
    t(1, 0) = kI * s;
    t(1, 1) = -kI * s;
    t(2, 2) = s;
    t(2, 3) = s;
    t(3, 2) = kI * s;
    t(3, 3) = -kI * s;
    return t;
}

// Centred normal-ordered moments <:x_i x_j:> for x = (a', a, b', b).
Mat4c central_normal_moments(const Mat4c& ell) {
    Mat4c nm;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) nm(i, j) = -2.0 * kDerivativeSign(i) * kDerivativeSign(j) * ell(i, j);
    return nm;
}

Mat4c ell_from_normal_moments(const Mat4c& nm) {
    Mat4c ell;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ell(i, j) = -0.5 * kDerivativeSign(i) * kDerivativeSign(j) * nm(i, j);
    return ell;
}

// (<a'>, <a>, <b'>, <b>).
Vec4c first_moments(const Vec4c& h) {
    return {kI * h(0), -kI * h(1), kI * h(2), -kI * h(3)};
}

Vec4c h_from_means(Complex a, Complex b) {
    return {-kI * std::conj(a), kI * a, -kI * std::conj(b), kI * b};
}

void add_commutator_half(Mat4c& m, double sign) {
    m(0, 1) += sign * 0.5;
    m(1, 0) += sign * 0.5;
    m(2, 3) += sign * 0.5;
    m(3, 2) += sign * 0.5;
}

CovarianceState covariance_unchecked(const CharExponent& state) {
    Mat4c sym = central_normal_moments(state.ell);
    add_commutator_half(sym, +1.0);
    // Scale once at the end so the vacuum maps to exactly I/2.
    const Mat4c t = quadrature_map(1.0);
    const Mat4c v = 0.5 * (t * sym * t.transpose());

    CovarianceState cov;
    cov.V = v.real();
    cov.V = 0.5 * (cov.V + cov.V.transpose()).eval();
    cov.mean = (quadrature_map() * first_moments(state.h)).real();
    return cov;
}

std::vector<CharExponent> run_fixed(const CharExponent& state, const GeneratorMatrices& gen,
                                    const std::vector<double>& times, double h_max) {
    const Mat4c n = gen.drift;
    const Mat4c nt = gen.drift.transpose();
    const Mat4c m = gen.diffusion;
    auto rhs = [&](const Packed& y) -> Packed {
        Packed dy;
        const Mat4c ell = y.leftCols<4>();
        dy.leftCols<4>() = n * ell + ell * nt - m;
        dy.col(4) = n * y.col(4);
        return dy;
    };
    auto symmetrize = [](Packed& y) {
        const Mat4c ell = y.leftCols<4>();
        y.leftCols<4>() = 0.5 * (ell + ell.transpose());
    };

    std::vector<CharExponent> out(times.size());
    integrate_grid(pack(state), times, h_max, rhs, symmetrize,
                   [&](std::size_t k, const Packed& y) { out[k] = unpack(y, times[k]); });
    return out;
}

double max_deviation(const std::vector<CharExponent>& x, const std::vector<CharExponent>& y) {
    double dev = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        dev = std::max(dev, (x[k].ell - y[k].ell).cwiseAbs().maxCoeff());
        dev = std::max(dev, (x[k].h - y[k].h).cwiseAbs().maxCoeff());
    }
    return dev;
}

} // namespace

double max_step(const ModelParams& params, double fraction) {
    const auto d = diagonalize(validate(params));
    const double fastest = std::max({params.omega, d.omega_l, d.omega_m});
    return fraction / fastest;
}

Mat4 symplectic_form() {
    Mat4 omega = Mat4::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    return omega;
}

CharExponent initial_exponent(const InitialState& init) {
    validate(init);
    Mat4c nm = Mat4c::Zero();
    auto fill = [&nm](const ModeInit& mode, int offset) {
        const double half = mode.nbar + 0.5;
        const double occupation = half * std::cosh(2.0 * mode.squeeze_r) - 0.5;
        const Complex pair = -half * std::polar(1.0, mode.squeeze_theta) * std::sinh(2.0 * mode.squeeze_r);
        nm(offset, offset) = std::conj(pair);        // <a'a'>
        nm(offset + 1, offset + 1) = pair;           // <a a>
        nm(offset, offset + 1) = occupation;         // <a'a>
        nm(offset + 1, offset) = occupation;
    };
    fill(init.a, 0);
    fill(init.b, 2);

    CharExponent s;
    s.ell = ell_from_normal_moments(nm);
    s.h = h_from_means(init.a.displacement, init.b.displacement);
    s.t = 0.0;
    return s;
}

CharExponent time_derivative(const CharExponent& state, const GeneratorMatrices& gen) {
    CharExponent d;
    d.ell = gen.drift * state.ell + state.ell * gen.drift.transpose() - gen.diffusion;
    d.h = gen.drift * state.h;
    d.t = state.t;
    return d;
}

std::vector<CharExponent> evolve(const CharExponent& state, const GeneratorMatrices& gen,
                                 double t_end, double dt_out, const EvolveOptions& options) {
    const auto times = output_times(state.t, t_end, dt_out);
    double h_max = max_step(gen.params, options.step_fraction);
    auto traj = run_fixed(state, gen, times, h_max);

    if (options.richardson_check) {
        int refinements = 0;
        for (;;) {
            auto finer = run_fixed(state, gen, times, h_max / 2.0);
            const double err = max_deviation(traj, finer) * 16.0 / 15.0;
            traj = std::move(finer);
            if (err <= options.richardson_tolerance) break;
            if (++refinements > options.max_refinements) {
                throw StepSizeUnderflow("Richardson error " + std::to_string(err)
                                        + " above tolerance after refinement");
            }
            h_max /= 2.0;
        }
    }

    for (const auto& s : traj) {
        const double margin = physicality_margin(covariance_unchecked(s));
        if (margin < -options.physicality_tolerance) {
            throw PhysicalityLoss("V + i/2 Omega has eigenvalue " + std::to_string(margin)
                                  + " at t = " + std::to_string(s.t));
        }
    }
    return traj;
}

double richardson_error(const CharExponent& state, const GeneratorMatrices& gen, double t_end,
                        double dt_out, const EvolveOptions& options) {
    const auto times = output_times(state.t, t_end, dt_out);
    const double h_max = max_step(gen.params, options.step_fraction);
    return max_deviation(run_fixed(state, gen, times, h_max), run_fixed(state, gen, times, h_max / 2.0))
           * 16.0 / 15.0;
}

Moments moments(const CharExponent& state) {
    const Vec4c mean = first_moments(state.h);
    const Mat4c raw = central_normal_moments(state.ell) + mean * mean.transpose();
    Moments m;
    m.a = mean(1);
    m.b = mean(3);
    m.n_a = raw(0, 1).real();
    m.n_b = raw(2, 3).real();
    m.aa = raw(1, 1);
    m.bb = raw(3, 3);
    m.ab = raw(1, 3);
    m.a_bdag = raw(1, 2);
    return m;
}

double physicality_margin(const CovarianceState& cov) {
    const Mat4c h = cov.V.cast<Complex>() + 0.5 * kI * symplectic_form().cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Mat4c> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

CovarianceState to_covariance(const CharExponent& state) {
    CovarianceState cov = covariance_unchecked(state);
    const double margin = physicality_margin(cov);
    if (margin < -1e-9) {
        throw PhysicalityLoss("V + i/2 Omega has eigenvalue " + std::to_string(margin));
    }
    return cov;
}

CharExponent from_covariance(const CovarianceState& cov, double t) {
    const Mat4c t_inv = quadrature_map().inverse();
    Mat4c sym = t_inv * cov.V.cast<Complex>() * t_inv.transpose();
    add_commutator_half(sym, -1.0);

    const double s = 1.0 / std::sqrt(2.0);
    const Complex a = s * Complex(cov.mean(0), cov.mean(1));
    const Complex b = s * Complex(cov.mean(2), cov.mean(3));

    CharExponent out;
    out.ell = ell_from_normal_moments(sym);
    out.ell = 0.5 * (out.ell + out.ell.transpose()).eval();
    out.h = h_from_means(a, b);
    out.t = t;
    return out;
}

} // namespace twomode

namespace twomode {

CharExponent from_normal_moments(const Mat4c& central, Complex mean_a, Complex mean_b) {
    CharExponent out;
    out.ell = ell_from_normal_moments(central);
    out.h = h_from_means(mean_a, mean_b);
    return out;
}

} // namespace twomode
