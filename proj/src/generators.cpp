#include "twomode/generators.hpp"

#include "twomode/bogoliubov.hpp"
#include "twomode/errors.hpp"

namespace twomode {

std::string_view to_string(DampingModel model) {
    return model == DampingModel::Local ? "local" : "nonlocal";
}

namespace {

// Hamiltonian part shared by both damping models.
Mat4c hamiltonian_drift(const ModelParams& p) {
    const Complex w = kI * p.omega, k = kI * p.kappa, l = kI * p.lambda;
    Mat4c n;
    n << w, 0, k, -l,
         0, -w, l, -k,
         k, -l, w, 0,
         l, -k, 0, -w;
    return n;
}

Mat4c hamiltonian_diffusion(const ModelParams& p) {
    const Complex l = kI * p.lambda / 2.0;
    Mat4c m;
    m << 0, 0, l, 0,
         0, 0, 0, -l,
         l, 0, 0, 0,
         0, -l, 0, 0;
    return m;
}

// Drift and diffusion for any generator of the bare-mode form with
// coefficients Gamma_1..Gamma_6.
GeneratorMatrices from_bare_rates(const ModelParams& p, const RateSet& r) {
    const double g1 = r.gamma_n(1), g2 = r.gamma_n(2), g3 = r.gamma_n(3);
    const double g4 = r.gamma_n(4), g5 = r.gamma_n(5), g6 = r.gamma_n(6);
    const Complex damp = g2 - g1;
    const Complex cross = g5 - g4;

    Mat4c n;
    n << damp, 0, cross, 0,
         0, damp, 0, cross,
         cross, 0, damp, 0,
         0, cross, 0, damp;

    Mat4c m;
    m << -g3, -g2, -g6, -g5,
         -g2, -g3, -g5, -g6,
         -g6, -g5, -g3, -g2,
         -g5, -g6, -g2, -g3;

    GeneratorMatrices gen;
    gen.drift = hamiltonian_drift(p) + n;
    gen.diffusion = hamiltonian_diffusion(p) + m;
    gen.model = DampingModel::Nonlocal;
    gen.params = p;
    return gen;
}

void require_symmetric_damping(const ModelParams& p) {
    if (p.gamma_a != p.gamma_b) {
        throw AsymmetricDamping("nonlocal damping is derived for gamma_a == gamma_b");
    }
}

} // namespace

GeneratorMatrices build_local(const ModelParams& params) {
    const ModelParams p = validate(params);
    GeneratorMatrices gen;
    gen.drift = hamiltonian_drift(p);
    gen.drift(0, 0) -= p.gamma_a;
    gen.drift(1, 1) -= p.gamma_a;
    gen.drift(2, 2) -= p.gamma_b;
    gen.drift(3, 3) -= p.gamma_b;

    gen.diffusion = hamiltonian_diffusion(p);
    gen.diffusion(0, 1) = gen.diffusion(1, 0) = -p.gamma_a * p.nbar_a;
    gen.diffusion(2, 3) = gen.diffusion(3, 2) = -p.gamma_b * p.nbar_b;
    gen.model = DampingModel::Local;
    gen.params = p;
    return gen;
}

GeneratorMatrices build_nonlocal(const ModelParams& params) {
    const ModelParams p = validate(params);
    require_symmetric_damping(p);
    return from_bare_rates(p, rates(diagonalize(p), p.gamma_a / 2.0, 0.0));
}

GeneratorMatrices build_nonlocal_thermal(const ModelParams& params) {
    const ModelParams p = validate(params);
    require_symmetric_damping(p);
    if (p.nbar_a != p.nbar_b) {
        throw AsymmetricBath("thermal nonlocal damping needs nbar_a == nbar_b");
    }
    return from_bare_rates(p, rates(diagonalize(p), p.gamma_a / 2.0, p.nbar_a));
}

GeneratorMatrices build_generators(const ModelParams& params, DampingModel model) {
    if (model == DampingModel::Local) return build_local(params);
    if (params.nbar_a == 0.0 && params.nbar_b == 0.0) return build_nonlocal(params);
    return build_nonlocal_thermal(params);
}

} // namespace twomode
