#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orlicz_lab/norm_spec.hpp"
#include "orlicz_lab/oracle.hpp"

namespace orlicz_lab::registry {

/// ||x||^p with p >= 1. Closed-form gradient and conjugate
/// ||y||_*^q / (q p^(q-1)), or the indicator of the dual unit ball for p = 1.
ConvexFunctionOracle power(double p, const NormSpec& norm, std::size_t n);

/// ||x||^p max(||x||, 1). For p = 1 the conjugate is known in closed form:
/// 0 on ||y||_* <= 1, ||y||_* - 1 up to 2, ||y||_*^2 / 4 beyond.
ConvexFunctionOracle hinge_power(double p, const NormSpec& norm, std::size_t n);

/// ||x||^p log(1 + ||x||).
ConvexFunctionOracle plog(double p, const NormSpec& norm, std::size_t n);

/// ||x||^p log(2 + ||x||).
ConvexFunctionOracle plog2(double p, const NormSpec& norm, std::size_t n);

/// |x|^2 / 2 (euclidean), self-conjugate.
ConvexFunctionOracle quadratic(std::size_t n);

/// Resolves "quadratic", "pow<p>" / "power:<p>", "norm", "hinge" /
/// "hinge_power[:<p>]", "plog[:<p>]", "plog2[:<p>]". Throws
/// std::invalid_argument for unknown names.
ConvexFunctionOracle lookup(const std::string& name, const NormSpec& norm, std::size_t n);

bool is_registry_name(const std::string& name);

/// The entries exercised by the verification suites.
std::vector<std::string> standard_names();

}  // namespace orlicz_lab::registry
