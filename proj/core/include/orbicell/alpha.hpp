#pragma once

#include "orbicell/tensor.hpp"

namespace orbicell {

// Heat kernel K_t = c_pi + u * c_delta with u = e^{-t}: the idempotent
// Laplacian collapses the exponential to pi + u * Delta applied to the
// copairing.
struct HeatKernel {
    GradedTensor c_pi;    // (pi (x) id)[copairing]
    GradedTensor c_delta; // (Delta (x) id)[copairing]
};

// One black edge carries alpha = c_pi + u * c_delta + u * c_s * dt.
struct EdgeForm {
    GradedTensor c_pi;
    GradedTensor c_delta;
    GradedTensor c_s; // (s Delta (x) id)[copairing]
};

HeatKernel heat_kernel(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h);
EdgeForm alpha_form(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h);

// d_A on a 2-leg element: (d (x) 1) + Koszul-signed (1 (x) d).
GradedTensor differential_two_tensor(const DgFrobeniusAlgebra& a, const GradedTensor& t);

// Residuals of the heat-flow ODE d/dt K_t = -(Delta (x) id) K_t, expanded
// coefficientwise in u: both tensors vanish exactly for a valid Hodge pair.
struct OdeResidual {
    GradedTensor const_part; // (Delta (x) id) c_pi
    GradedTensor u_part;     // c_delta - (Delta (x) id) c_delta
    bool is_zero() const { return const_part.is_zero() && u_part.is_zero(); }
};
OdeResidual heat_flow_residual(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h,
                               const HeatKernel& k);

// Total differential of alpha (algebra differential on both legs plus de
// Rham d acting by u -> -u dt), collected by form degree. alpha is closed
// iff all three components vanish.
struct AlphaDifferential {
    GradedTensor const_part; // d_A c_pi
    GradedTensor u_part;     // d_A c_delta
    GradedTensor udt_part;   // d_A c_s - c_delta
    bool is_zero() const {
        return const_part.is_zero() && u_part.is_zero() && udt_part.is_zero();
    }
};
AlphaDifferential alpha_total_differential(const DgFrobeniusAlgebra& a, const EdgeForm& alpha);

} // namespace orbicell
