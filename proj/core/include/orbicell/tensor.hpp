#pragma once

#include "orbicell/algebra.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace orbicell {

// Koszul sign of rearranging a word of graded symbols. parity[k] is the
// parity of the k-th symbol in word order, target[k] its destination slot;
// each crossing of two odd symbols costs -1.
int koszul_sign(std::span<const std::uint8_t> parity, std::span<const int> target);

// Parity (+1/-1) of a permutation given as a list of distinct values; the
// identity arrangement is ascending order.
int permutation_parity(std::span<const int> values);

// Dense tensor over the basis of A, serving both for elements of A^{(x)n}
// and multilinear forms on A^{(x)n}. Leg p of an entry at multi-index
// (i_1..i_n) carries parity(i_p).
class GradedTensor {
public:
    GradedTensor() = default;
    GradedTensor(std::size_t dim, std::size_t arity)
        : dim_(dim), arity_(arity), entries_(pow_size(dim, arity)) {}

    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return arity_; }
    std::size_t size() const { return entries_.size(); }

    Rational& operator[](std::size_t flat) { return entries_[flat]; }
    const Rational& operator[](std::size_t flat) const { return entries_[flat]; }

    std::size_t flat(std::span<const std::size_t> idx) const;
    void unflat(std::size_t flat, std::vector<std::size_t>& idx) const;

    Rational& at(std::span<const std::size_t> idx) { return entries_[flat(idx)]; }
    const Rational& at(std::span<const std::size_t> idx) const { return entries_[flat(idx)]; }

    const Rational& scalar() const; // arity 0 only

    bool operator==(const GradedTensor& other) const;
    bool is_zero() const;

    GradedTensor operator+(const GradedTensor& other) const;
    GradedTensor operator-(const GradedTensor& other) const;
    GradedTensor operator*(const Rational& c) const;

private:
    static std::size_t pow_size(std::size_t dim, std::size_t arity);
    std::size_t dim_ = 0;
    std::size_t arity_ = 0;
    std::vector<Rational> entries_;
};

// Arity-2 element with entries M[i][j] (coefficient of x_i (x) x_j).
GradedTensor tensor_from_matrix(const Matrix& m);

// (1 (x) .. (x) op (x) .. (x) 1) applied to an element of A^{(x)n}; moving an
// odd operator past the first `leg` tensor factors costs the Koszul sign.
GradedTensor apply_leg(const DgFrobeniusAlgebra& a, const GradedTensor& t, const Matrix& op,
                       std::size_t leg, bool op_odd);

// Signed leg permutation; perm[new_pos] = old_leg.
GradedTensor permute_legs(const DgFrobeniusAlgebra& a, const GradedTensor& t,
                          std::span<const std::size_t> perm);

// Contract legs a and b of the same form t against the 2-element B:
// result(free) = sum_{ij} B[ij] kappa t(.. x_i at a .. x_j at b ..).
GradedTensor contract_pair(const DgFrobeniusAlgebra& a, const GradedTensor& t, std::size_t leg_a,
                           std::size_t leg_b, const GradedTensor& b2);

// Contract leg_a of t against leg_b of s through B; result legs are t's
// remaining legs followed by s's remaining legs.
GradedTensor contract_across(const DgFrobeniusAlgebra& a, const GradedTensor& t, std::size_t leg_a,
                             const GradedTensor& s, std::size_t leg_b, const GradedTensor& b2);

// The cyclically invariant disk amplitude t_n(a_1..a_n) = <a_1...a_{n-1}, a_n>.
GradedTensor vertex_tensor_disk(const DgFrobeniusAlgebra& a, std::size_t n);

// Evaluate t_n on one basis tuple without materializing the tensor.
Rational disk_amplitude(const DgFrobeniusAlgebra& a, std::span<const std::size_t> tuple);

GradedTensor copairing(const DgFrobeniusAlgebra& a);

} // namespace orbicell
