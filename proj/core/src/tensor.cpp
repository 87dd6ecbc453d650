#include "orbicell/tensor.hpp"

#include <cassert>
#include <stdexcept>

namespace orbicell {

int koszul_sign(std::span<const std::uint8_t> parity, std::span<const int> target) {
    int inversions = 0;
    for (std::size_t p = 0; p < target.size(); ++p) {
        if (!parity[p]) continue;
        for (std::size_t q = p + 1; q < target.size(); ++q)
            if (parity[q] && target[p] > target[q]) ++inversions;
    }
    return (inversions & 1) ? -1 : 1;
}

int permutation_parity(std::span<const int> values) {
    int inversions = 0;
    for (std::size_t p = 0; p < values.size(); ++p)
        for (std::size_t q = p + 1; q < values.size(); ++q)
            if (values[p] > values[q]) ++inversions;
    return (inversions & 1) ? -1 : 1;
}

std::size_t GradedTensor::pow_size(std::size_t dim, std::size_t arity) {
    std::size_t s = 1;
    for (std::size_t k = 0; k < arity; ++k) {
        if (dim != 0 && s > (std::size_t(1) << 28) / dim)
            throw ResourceError("tensor too large for the desk-scale envelope");
        s *= dim;
    }
    return s;
}

std::size_t GradedTensor::flat(std::span<const std::size_t> idx) const {
    assert(idx.size() == arity_);
    std::size_t f = 0;
    for (std::size_t k = 0; k < arity_; ++k) f = f * dim_ + idx[k];
    return f;
}

void GradedTensor::unflat(std::size_t flat, std::vector<std::size_t>& idx) const {
    idx.resize(arity_);
    for (std::size_t k = arity_; k-- > 0;) {
        idx[k] = flat % dim_;
        flat /= dim_;
    }
}

const Rational& GradedTensor::scalar() const {
    if (arity_ != 0) throw std::logic_error("scalar() on tensor of positive arity");
    return entries_[0];
}

bool GradedTensor::operator==(const GradedTensor& other) const {
    return dim_ == other.dim_ && arity_ == other.arity_ && entries_ == other.entries_;
}

bool GradedTensor::is_zero() const {
    for (const auto& x : entries_)
        if (sgn(x) != 0) return false;
    return true;
}

GradedTensor GradedTensor::operator+(const GradedTensor& other) const {
    assert(dim_ == other.dim_ && arity_ == other.arity_);
    GradedTensor r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += other.entries_[k];
    return r;
}

GradedTensor GradedTensor::operator-(const GradedTensor& other) const {
    assert(dim_ == other.dim_ && arity_ == other.arity_);
    GradedTensor r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= other.entries_[k];
    return r;
}

GradedTensor GradedTensor::operator*(const Rational& c) const {
    GradedTensor r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
    return r;
}

GradedTensor tensor_from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::logic_error("tensor_from_matrix: square only");
    GradedTensor t(m.rows(), 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t[i * m.rows() + j] = m.at(i, j);
    return t;
}

GradedTensor apply_leg(const DgFrobeniusAlgebra& a, const GradedTensor& t, const Matrix& op,
                       std::size_t leg, bool op_odd) {
    GradedTensor r(t.dim(), t.arity());
    std::vector<std::size_t> idx;
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (sgn(t[f]) == 0) continue;
        t.unflat(f, idx);
        int prefix = 0;
        for (std::size_t k = 0; k < leg; ++k) prefix += a.parity[idx[k]];
        Rational sign = (op_odd && (prefix & 1)) ? -1 : 1;
        std::size_t old = idx[leg];
        for (std::size_t k = 0; k < t.dim(); ++k) {
            if (sgn(op.at(k, old)) == 0) continue;
            idx[leg] = k;
            r.at(idx) += sign * op.at(k, old) * t[f];
        }
        idx[leg] = old;
    }
    return r;
}

GradedTensor permute_legs(const DgFrobeniusAlgebra& a, const GradedTensor& t,
                          std::span<const std::size_t> perm) {
    assert(perm.size() == t.arity());
    std::vector<int> target(t.arity());
    for (std::size_t p = 0; p < perm.size(); ++p) target[perm[p]] = (int)p;

    GradedTensor r(t.dim(), t.arity());
    std::vector<std::size_t> idx, new_idx(t.arity());
    std::vector<std::uint8_t> par(t.arity());
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (sgn(t[f]) == 0) continue;
        t.unflat(f, idx);
        for (std::size_t k = 0; k < t.arity(); ++k) par[k] = a.parity[idx[k]];
        int sign = koszul_sign(par, target);
        for (std::size_t p = 0; p < t.arity(); ++p) new_idx[p] = idx[perm[p]];
        r.at(new_idx) += Rational(sign) * t[f];
    }
    return r;
}

namespace {

// Kappa for routing the word (free symbols at their original slots, then
// x_i -> slot_a, x_j -> slot_b) given the parities of a full assignment.
int routing_sign(const DgFrobeniusAlgebra& a, std::span<const std::uint8_t> slot_parity,
                 std::size_t slot_a, std::size_t slot_b, std::size_t i, std::size_t j) {
    int inv = 0;
    if (a.parity[i]) {
        for (std::size_t s = 0; s < slot_parity.size(); ++s)
            if (s != slot_a && s != slot_b && slot_parity[s] && s > slot_a) ++inv;
    }
    if (a.parity[j]) {
        for (std::size_t s = 0; s < slot_parity.size(); ++s)
            if (s != slot_a && s != slot_b && slot_parity[s] && s > slot_b) ++inv;
    }
    if (a.parity[i] && a.parity[j] && slot_a > slot_b) ++inv;
    return (inv & 1) ? -1 : 1;
}

} // namespace

GradedTensor contract_pair(const DgFrobeniusAlgebra& a, const GradedTensor& t, std::size_t leg_a,
                           std::size_t leg_b, const GradedTensor& b2) {
    assert(leg_a != leg_b && leg_a < t.arity() && leg_b < t.arity());
    assert(b2.arity() == 2 && b2.dim() == t.dim());
    GradedTensor r(t.dim(), t.arity() - 2);
    std::vector<std::size_t> idx, free_idx;
    std::vector<std::uint8_t> par(t.arity());
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (sgn(t[f]) == 0) continue;
        t.unflat(f, idx);
        std::size_t i = idx[leg_a], j = idx[leg_b];
        const Rational& b = b2[i * t.dim() + j];
        if (sgn(b) == 0) continue;
        for (std::size_t k = 0; k < t.arity(); ++k) par[k] = a.parity[idx[k]];
        int sign = routing_sign(a, par, leg_a, leg_b, i, j);
        free_idx.clear();
        for (std::size_t k = 0; k < t.arity(); ++k)
            if (k != leg_a && k != leg_b) free_idx.push_back(idx[k]);
        r.at(free_idx) += Rational(sign) * b * t[f];
    }
    return r;
}

GradedTensor contract_across(const DgFrobeniusAlgebra& a, const GradedTensor& t, std::size_t leg_a,
                             const GradedTensor& s, std::size_t leg_b, const GradedTensor& b2) {
    assert(leg_a < t.arity() && leg_b < s.arity());
    assert(b2.arity() == 2 && b2.dim() == t.dim() && s.dim() == t.dim());
    const std::size_t m = t.arity(), n = s.arity();
    GradedTensor r(t.dim(), m + n - 2);
    std::vector<std::size_t> ti, si, free_idx;
    std::vector<std::uint8_t> par(m + n);
    for (std::size_t ft = 0; ft < t.size(); ++ft) {
        if (sgn(t[ft]) == 0) continue;
        t.unflat(ft, ti);
        std::size_t i = ti[leg_a];
        for (std::size_t fs = 0; fs < s.size(); ++fs) {
            if (sgn(s[fs]) == 0) continue;
            s.unflat(fs, si);
            std::size_t j = si[leg_b];
            const Rational& b = b2[i * t.dim() + j];
            if (sgn(b) == 0) continue;
            for (std::size_t k = 0; k < m; ++k) par[k] = a.parity[ti[k]];
            for (std::size_t k = 0; k < n; ++k) par[m + k] = a.parity[si[k]];
            int sign = routing_sign(a, par, leg_a, m + leg_b, i, j);
            free_idx.clear();
            for (std::size_t k = 0; k < m; ++k)
                if (k != leg_a) free_idx.push_back(ti[k]);
            for (std::size_t k = 0; k < n; ++k)
                if (k != leg_b) free_idx.push_back(si[k]);
            r.at(free_idx) += Rational(sign) * b * t[ft] * s[fs];
        }
    }
    return r;
}

Rational disk_amplitude(const DgFrobeniusAlgebra& a, std::span<const std::size_t> tuple) {
    if (tuple.size() < 2) throw StructuralError("disk amplitude needs arity >= 2");
    std::vector<Rational> acc(a.dim);
    acc[tuple[0]] = 1;
    std::vector<Rational> basis(a.dim);
    for (std::size_t k = 1; k + 1 < tuple.size(); ++k) {
        std::fill(basis.begin(), basis.end(), Rational());
        basis[tuple[k]] = 1;
        acc = a.multiply(acc, basis);
    }
    Rational r;
    std::size_t last = tuple.back();
    for (std::size_t t = 0; t < a.dim; ++t)
        if (sgn(acc[t]) != 0 && sgn(a.pairing.at(t, last)) != 0)
            r += acc[t] * a.pairing.at(t, last);
    return r;
}

GradedTensor vertex_tensor_disk(const DgFrobeniusAlgebra& a, std::size_t n) {
    if (n < 2) throw StructuralError("vertex_tensor_disk requires n >= 2");
    GradedTensor t(a.dim, n);
    // DFS over tuples reusing prefix products of basis elements.
    std::vector<std::vector<Rational>> prefix(n);
    std::vector<std::size_t> tuple(n, 0);
    std::vector<Rational> basis(a.dim);
    std::size_t depth = 0;
    // prefix[k] = product x_{tuple[0]} ... x_{tuple[k]}
    while (true) {
        if (depth == 0) {
            prefix[0].assign(a.dim, Rational());
            prefix[0][tuple[0]] = 1;
        } else {
            std::fill(basis.begin(), basis.end(), Rational());
            basis[tuple[depth]] = 1;
            prefix[depth] = a.multiply(prefix[depth - 1], basis);
        }
        if (depth + 2 == n) {
            // close with the pairing over the last leg
            const auto& acc = prefix[depth];
            for (std::size_t last = 0; last < a.dim; ++last) {
                Rational v;
                for (std::size_t k = 0; k < a.dim; ++k)
                    if (sgn(acc[k]) != 0 && sgn(a.pairing.at(k, last)) != 0)
                        v += acc[k] * a.pairing.at(k, last);
                if (sgn(v) != 0) {
                    tuple[n - 1] = last;
                    t.at(tuple) = v;
                }
            }
            tuple[n - 1] = 0;
            // advance
            while (true) {
                if (++tuple[depth] < a.dim) break;
                tuple[depth] = 0;
                if (depth == 0) return t;
                --depth;
            }
        } else {
            ++depth;
        }
    }
}

GradedTensor copairing(const DgFrobeniusAlgebra& a) {
    return tensor_from_matrix(copairing_matrix(a));
}

} // namespace orbicell
