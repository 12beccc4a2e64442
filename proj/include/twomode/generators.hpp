// generators.hpp: drift/diffusion pair of the characteristic-function ODE

#pragma once

#include <string_view>

#include "twomode/model.hpp"
#include "twomode/types.hpp"

namespace twomode {

enum class DampingModel { Local, Nonlocal };

std::string_view to_string(DampingModel model);

/// For chi(z) = exp(-z^T L z + i z^T h) with z = (k_a, k_a*, k_b, k_b*):
///   dL/dt = N L + L N^T - M,   dh/dt = N h
/// where N is `drift` and M is `diffusion`.
struct GeneratorMatrices {
    Mat4c drift;
    Mat4c diffusion;
    DampingModel model{DampingModel::Local};
    ModelParams params;
};

/// Local Lindblad damping of a and b. Accepts gamma_a != gamma_b and
/// nbar_a != nbar_b.
GeneratorMatrices build_local(const ModelParams& params);

/// Eigenmode damping from zero-temperature baths; nbar_a/nbar_b are not used.
/// The bath rate is gamma_a / 2 so that the lambda = 0 limit coincides with
/// build_local. Throws AsymmetricDamping unless gamma_a == gamma_b.
GeneratorMatrices build_nonlocal(const ModelParams& params);

/// Eigenmode damping from flat thermal baths at nbar = nbar_a = nbar_b.
/// Throws AsymmetricDamping or AsymmetricBath.
GeneratorMatrices build_nonlocal_thermal(const ModelParams& params);

/// build_local, or the nonlocal builder matching the bath temperature.
GeneratorMatrices build_generators(const ModelParams& params, DampingModel model);

} // namespace twomode
