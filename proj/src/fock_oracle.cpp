#include "twomode/fock_oracle.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "twomode/bogoliubov.hpp"
#include "twomode/errors.hpp"
#include "twomode/stepping.hpp"

namespace twomode::fock {

namespace {

SpMat identity(Eigen::Index n) {
    SpMat id(n, n);
    id.setIdentity();
    return id;
}

SpMat single_mode_lowering(int cutoff) {
    SpMat a(cutoff, cutoff);
    std::vector<Eigen::Triplet<Complex>> entries;
    for (int n = 1; n < cutoff; ++n) entries.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
}

SpMat kron(const SpMat& x, const SpMat& y) {
    SpMat out = Eigen::kroneckerProduct(x, y);
    out.makeCompressed();
    return out;
}

void add_term(TruncatedSystem& system, double rate, const SpMat& jump, const SpMat& partner) {
    if (rate == 0.0) return;
    system.dissipators.push_back({rate, jump, partner});
}

void require_symmetric(const ModelParams& p) {
    if (p.gamma_a != p.gamma_b) throw AsymmetricDamping("nonlocal damping needs gamma_a == gamma_b");
    if (p.nbar_a != p.nbar_b) throw AsymmetricBath("nonlocal damping needs nbar_a == nbar_b");
}

SpMat effective_hamiltonian(const TruncatedSystem& system) {
    SpMat h_eff = system.hamiltonian;
    for (const auto& term : system.dissipators) {
        const SpMat kj = SpMat(term.partner.adjoint()) * term.jump;
        h_eff -= Complex(0.0, 0.5 * term.rate) * kj;
    }
    h_eff.makeCompressed();
    return h_eff;
}

// Sparse operator as a flat entry list, pre-scaled.
struct Entries {
    std::vector<Eigen::Index> row, col;
    std::vector<Complex> value;

    Entries(const SpMat& op, Complex scale) {
        for (Eigen::Index c = 0; c < op.outerSize(); ++c) {
            for (SpMat::InnerIterator it(op, c); it; ++it) {
                row.push_back(it.row());
                col.push_back(it.col());
                value.push_back(scale * it.value());
            }
        }
    }

    // out += op * x
    void accumulate(DenseMat& out, const DenseMat& x) const {
        const std::size_t n = value.size();
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            Complex* o = out.col(j).data();
            const Complex* in = x.col(j).data();
            for (std::size_t k = 0; k < n; ++k) o[row[k]] += value[k] * in[col[k]];
        }
    }
};

// rho -> -i H_eff rho + i rho H_eff' + sum rate J rho K'.
// For Hermitian rho, rho H' = (H rho)' and J rho K' = J (K rho)', so only
// left products are needed.
class Liouvillian {
public:
    explicit Liouvillian(const TruncatedSystem& system)
        : h_eff_(effective_hamiltonian(system), Complex(0.0, -1.0)) {
        for (const auto& term : system.dissipators) {
            jumps_.emplace_back(term.jump, Complex(term.rate, 0.0));
            partners_.emplace_back(term.partner, Complex(1.0, 0.0));
        }
    }

    DenseMat operator()(const DenseMat& rho) const {
        const Eigen::Index n = rho.rows();
        work_.setZero(n, n);
        h_eff_.accumulate(work_, rho);
        DenseMat out = work_ + work_.adjoint();
        for (std::size_t t = 0; t < jumps_.size(); ++t) {
            work_.setZero(n, n);
            partners_[t].accumulate(work_, rho);
            work_.adjointInPlace();
            jumps_[t].accumulate(out, work_);
        }
        return out;
    }

private:
    Entries h_eff_;
    std::vector<Entries> jumps_;
    std::vector<Entries> partners_;
    mutable DenseMat work_;
};

DenseMat single_mode_state(const ModeInit& mode, int cutoff) {
    const int big = cutoff + 40;
    const DenseMat a = DenseMat(single_mode_lowering(big));
    const DenseMat ad = a.adjoint();

    DenseMat rho = DenseMat::Zero(big, big);
    const double n0 = mode.nbar;
    for (int n = 0; n < big; ++n) rho(n, n) = std::pow(n0, n) / std::pow(1.0 + n0, n + 1);
    if (n0 == 0.0) rho(0, 0) = 1.0;

    const Complex xi = std::polar(mode.squeeze_r, mode.squeeze_theta);
    if (mode.squeeze_r != 0.0) {
        const DenseMat gen = 0.5 * (std::conj(xi) * a * a - xi * ad * ad);
        const DenseMat s = gen.exp();
        rho = s * rho * s.adjoint();
    }
    const Complex alpha = mode.displacement;
    if (alpha != Complex(0.0, 0.0)) {
        const DenseMat gen = alpha * ad - std::conj(alpha) * a;
        const DenseMat disp = gen.exp();
        rho = disp * rho * disp.adjoint();
    }
    DenseMat cut = rho.topLeftCorner(cutoff, cutoff);
    cut /= cut.trace();
    return cut;
}

} // namespace

TruncatedSystem build_closed(const ModelParams& params, int cutoff) {
    if (cutoff < 2) throw CutoffTooSmall("cutoff must be >= 2, got " + std::to_string(cutoff));
    const ModelParams p = validate(params);

    TruncatedSystem s;
    s.cutoff = cutoff;
    const SpMat lower = single_mode_lowering(cutoff);
    const SpMat id = identity(cutoff);
    s.a = kron(lower, id);
    s.b = kron(id, lower);
    s.a_dag = s.a.adjoint();
    s.b_dag = s.b.adjoint();

    s.hamiltonian = p.omega * (s.a_dag * s.a + s.b_dag * s.b)
                    + p.kappa * (s.a_dag * s.b + s.b_dag * s.a)
                    + p.lambda * (s.a * s.b + s.a_dag * s.b_dag);
    s.hamiltonian.makeCompressed();
    s.max_step_hint = max_step(p, 1.0 / 50.0);
    return s;
}

TruncatedSystem build_local_superop(const ModelParams& params, int cutoff) {
    TruncatedSystem s = build_closed(params, cutoff);
    const ModelParams& p = params;
    add_term(s, 2.0 * p.gamma_a * (p.nbar_a + 1.0), s.a, s.a);
    add_term(s, 2.0 * p.gamma_a * p.nbar_a, s.a_dag, s.a_dag);
    add_term(s, 2.0 * p.gamma_b * (p.nbar_b + 1.0), s.b, s.b);
    add_term(s, 2.0 * p.gamma_b * p.nbar_b, s.b_dag, s.b_dag);
    return s;
}

TruncatedSystem build_nonlocal_superop(const ModelParams& params, int cutoff) {
    TruncatedSystem s = build_closed(params, cutoff);
    require_symmetric(params);
    const auto d = diagonalize(params);
    const auto r = rates(d, params.gamma_a / 2.0, params.nbar_a);

    const Mat4 k = normal_mode_map(d);
    const SpMat* bare[4] = {&s.a, &s.b, &s.a_dag, &s.b_dag};
    auto combine = [&](int row) {
        SpMat op = k(row, 0) * *bare[0];
        for (int c = 1; c < 4; ++c) op += k(row, c) * *bare[c];
        op.prune(Complex(0.0, 0.0));
        return op;
    };
    const SpMat l = combine(0), m = combine(1), l_dag = combine(2), m_dag = combine(3);

    add_term(s, 2.0 * r.ff_corr, l, l);
    add_term(s, 2.0 * r.qq_corr, m, m);
    add_term(s, 2.0 * r.ff_corr_th, l_dag, l_dag);
    add_term(s, 2.0 * r.qq_corr_th, m_dag, m_dag);
    return s;
}

TruncatedSystem build_nonlocal_bare_superop(const ModelParams& params, int cutoff) {
    TruncatedSystem s = build_closed(params, cutoff);
    require_symmetric(params);
    const auto r = rates(diagonalize(params), params.gamma_a / 2.0, params.nbar_a);
    const SpMat &a = s.a, &b = s.b, &ad = s.a_dag, &bd = s.b_dag;

    // Gamma [2 A rho C - C A rho - rho C A] = 2 Gamma (A rho K' - 1/2 {K'A, rho}), K = C'.
    auto add = [&](int i, const SpMat& jump, const SpMat& partner) {
        add_term(s, 2.0 * r.gamma_n(i), jump, partner);
    };
    add(1, a, a);
    add(1, b, b);
    add(2, ad, ad);
    add(2, bd, bd);
    add(3, a, ad);
    add(3, ad, a);
    add(3, b, bd);
    add(3, bd, b);
    add(4, a, b);
    add(4, b, a);
    add(5, bd, ad);
    add(5, ad, bd);
    add(6, b, ad);
    add(6, a, bd);
    add(6, bd, a);
    add(6, ad, b);
    return s;
}

DenseMat apply_liouvillian(const TruncatedSystem& system, const DenseMat& rho) {
    return Liouvillian(system)(rho);
}

SpMat superoperator(const TruncatedSystem& system) {
    const SpMat h_eff = effective_hamiltonian(system);
    const SpMat id = identity(system.dim());
    SpMat out = Complex(0.0, -1.0) * kron(id, h_eff) + Complex(0.0, 1.0) * kron(SpMat(h_eff.conjugate()), id);
    for (const auto& t : system.dissipators) {
        out += t.rate * kron(SpMat(t.partner.conjugate()), t.jump);
    }
    out.makeCompressed();
    return out;
}

std::vector<DensityMatrix> integrate(const TruncatedSystem& system, const DensityMatrix& rho0,
                                     double t_end, double dt_out, const IntegrateOptions& options) {
    if (rho0.rho.rows() != system.dim() || rho0.rho.cols() != system.dim()) {
        throw CutoffTooSmall("initial state dimension does not match the truncated space");
    }
    const auto times = output_times(0.0, t_end, dt_out);
    const Liouvillian liouvillian(system);
    auto hermitize = [](DenseMat& rho) { rho = 0.5 * (rho + rho.adjoint()).eval(); };

    std::vector<DensityMatrix> out(times.size());
    integrate_grid(rho0.rho, times, system.max_step_hint, liouvillian, hermitize,
                   [&](std::size_t k, const DenseMat& rho) {
                       out[k].rho = rho;
                       if (options.check_invariants) check_invariants(out[k]);
                   });
    return out;
}

DensityMatrix product_state(const InitialState& init, int cutoff) {
    if (cutoff < 2) throw CutoffTooSmall("cutoff must be >= 2, got " + std::to_string(cutoff));
    validate(init);
    DensityMatrix state;
    state.rho = Eigen::kroneckerProduct(single_mode_state(init.a, cutoff), single_mode_state(init.b, cutoff));
    return state;
}

DensityMatrix ground_state(const TruncatedSystem& system) {
    const DenseMat h = DenseMat(system.hamiltonian);
    Eigen::SelfAdjointEigenSolver<DenseMat> solver(h);
    const Eigen::VectorXcd psi = solver.eigenvectors().col(0);
    return {psi * psi.adjoint()};
}

Complex expectation(const DensityMatrix& state, const SpMat& op) {
    // Tr(rho X) = sum_{k,i} X(k,i) rho(i,k)
    Complex sum{0.0, 0.0};
    for (Eigen::Index col = 0; col < op.outerSize(); ++col) {
        for (SpMat::InnerIterator it(op, col); it; ++it) sum += it.value() * state.rho(it.col(), it.row());
    }
    return sum;
}

Moments moments(const TruncatedSystem& s, const DensityMatrix& state) {
    Moments m;
    m.a = expectation(state, s.a);
    m.b = expectation(state, s.b);
    m.n_a = expectation(state, SpMat(s.a_dag * s.a)).real();
    m.n_b = expectation(state, SpMat(s.b_dag * s.b)).real();
    m.aa = expectation(state, SpMat(s.a * s.a));
    m.bb = expectation(state, SpMat(s.b * s.b));
    m.ab = expectation(state, SpMat(s.a * s.b));
    m.a_bdag = expectation(state, SpMat(s.a * s.b_dag));
    return m;
}

CovarianceState covariance(const TruncatedSystem& s, const DensityMatrix& state) {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex mi = Complex(0.0, -1.0);
    const SpMat quad[4] = {
        SpMat(r * (s.a + s.a_dag)),
        SpMat((mi * r) * (s.a - s.a_dag)),
        SpMat(r * (s.b + s.b_dag)),
        SpMat((mi * r) * (s.b - s.b_dag)),
    };
    CovarianceState cov;
    for (int i = 0; i < 4; ++i) cov.mean(i) = expectation(state, quad[i]).real();
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const SpMat anti = quad[i] * quad[j] + quad[j] * quad[i];
            const double v = 0.5 * expectation(state, anti).real() - cov.mean(i) * cov.mean(j);
            cov.V(i, j) = cov.V(j, i) = v;
        }
    }
    return cov;
}

DensityDiagnostics diagnose(const DensityMatrix& state) {
    DensityDiagnostics d;
    d.trace_error = std::abs(state.rho.trace() - Complex(1.0, 0.0));
    d.hermiticity_error = (state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff();
    const DenseMat herm = 0.5 * (state.rho + state.rho.adjoint());
    Eigen::SelfAdjointEigenSolver<DenseMat> solver(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
    return d;
}

void check_invariants(const DensityMatrix& state) {
    const auto d = diagnose(state);
    if (d.trace_error > 1e-9) throw PhysicalityLoss("trace drift " + std::to_string(d.trace_error));
    if (d.hermiticity_error > 1e-10) {
        throw PhysicalityLoss("Hermiticity error " + std::to_string(d.hermiticity_error));
    }
    if (d.min_eigenvalue < -1e-8) {
        throw PhysicalityLoss("negative eigenvalue " + std::to_string(d.min_eigenvalue));
    }
}

} // namespace twomode::fock
