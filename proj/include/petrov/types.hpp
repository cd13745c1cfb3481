#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string_view>

namespace petrov {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// A 2-vector in the fixed ordered basis of Λ² (see algebra.hpp).
using Bivector = Eigen::Matrix<double, 6, 1>;
/// A real endomorphism of Λ² written in the fixed basis.
using Mat6 = Eigen::Matrix<double, 6, 6>;

using Complex = std::complex<double>;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;

/// Which metric induces the Λ² inner product and Hodge star.
///
/// Lorentzian frames have e1 timelike (e1 = T); split frames have e1 and e2
/// timelike.
enum class Signature { Riemannian, Lorentzian, Split };

std::string_view to_string(Signature sig);
std::optional<Signature> parse_signature(std::string_view text);

}  // namespace petrov
