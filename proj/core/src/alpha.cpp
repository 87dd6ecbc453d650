#include "orbicell/alpha.hpp"

namespace orbicell {

HeatKernel heat_kernel(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h) {
    Matrix cop = copairing_matrix(a);
    return {tensor_from_matrix(h.pi * cop), tensor_from_matrix(h.laplacian * cop)};
}

EdgeForm alpha_form(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h) {
    Matrix cop = copairing_matrix(a);
    return {tensor_from_matrix(h.pi * cop), tensor_from_matrix(h.laplacian * cop),
            tensor_from_matrix(h.s * h.laplacian * cop)};
}

GradedTensor differential_two_tensor(const DgFrobeniusAlgebra& a, const GradedTensor& t) {
    return apply_leg(a, t, a.diff, 0, true) + apply_leg(a, t, a.diff, 1, true);
}

OdeResidual heat_flow_residual(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h,
                               const HeatKernel& k) {
    GradedTensor lap_pi = apply_leg(a, k.c_pi, h.laplacian, 0, false);
    GradedTensor lap_delta = apply_leg(a, k.c_delta, h.laplacian, 0, false);
    return {lap_pi, k.c_delta - lap_delta};
}

AlphaDifferential alpha_total_differential(const DgFrobeniusAlgebra& a, const EdgeForm& alpha) {
    return {differential_two_tensor(a, alpha.c_pi), differential_two_tensor(a, alpha.c_delta),
            differential_two_tensor(a, alpha.c_s) - alpha.c_delta};
}

} // namespace orbicell
