#include "orbicell/algebra.hpp"

#include <algorithm>

namespace orbicell {

namespace {

using Vec = std::vector<Rational>;

Rational pair_vec(const DgFrobeniusAlgebra& a, const Vec& x, const Vec& y) {
    return a.pair(x, y);
}

bool vec_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec scale(const Vec& v, const Rational& c) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

Vec axpy(const Vec& v, const Rational& c, const Vec& w) { // v + c*w
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] + c * w[i];
    return r;
}

int vec_parity(const DgFrobeniusAlgebra& a, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return a.parity[i];
    return 0;
}

} // namespace

// Splits A into hyperbolic quadruples (z, dz, w, dw) plus a harmonic
// remainder orthogonal to all of them, then reads off s (inverting d on the
// quadruples) and pi (projection onto the remainder). The pairing being
// even forces the acyclic part to decompose in quadruples rather than
// pairs; isotropy of the span of z and w is arranged by corrections along
// dz and dw, which do not disturb the d-images.
HodgeResult construct_hodge(const DgFrobeniusAlgebra& a) {
    {
        ValidationReport pre = validate_frobenius(a);
        if (!pre.ok())
            return {std::nullopt, "algebra fails validate_frobenius: " + pre.to_string()};
    }
    const std::size_t n = a.dim;

    // Working subspace: parity-homogeneous basis, kept d-stable and with
    // nondegenerate restricted pairing throughout.
    std::vector<Vec> space;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        space.push_back(std::move(e));
    }

    struct Quadruple {
        Vec z, dz, w, dw;
    };
    std::vector<Quadruple> quads;

    while (true) {
        // first basis vector not in the kernel of d
        std::size_t zi = space.size();
        for (std::size_t k = 0; k < space.size(); ++k)
            if (!vec_zero(a.diff.apply(space[k]))) {
                zi = k;
                break;
            }
        if (zi == space.size()) break; // d vanishes on the remainder

        Vec z = space[zi];
        Vec dz = a.diff.apply(z);

        // partner with <dz, w> = 1
        std::size_t wi = space.size();
        for (std::size_t k = 0; k < space.size(); ++k)
            if (sgn(pair_vec(a, dz, space[k])) != 0) {
                wi = k;
                break;
            }
        if (wi == space.size())
            return {std::nullopt, "pairing degenerates on a d-stable subspace; "
                                  "no self-adjoint homotopy exists for this input"};
        Vec w = scale(space[wi], 1 / pair_vec(a, dz, space[wi]));
        Vec dw = a.diff.apply(w);
        if (vec_zero(dw))
            return {std::nullopt, "degenerate partner: d(w) = 0 despite <dz, w> != 0"};

        // isotropy corrections (only the even member of each pair can have
        // nonzero self-pairing; shifting by the d-image keeps d z and d w)
        if (vec_parity(a, z) == 0) {
            Rational zz = pair_vec(a, z, z);
            if (sgn(zz) != 0) z = axpy(z, -zz / (2 * pair_vec(a, z, dw)), dw);
        }
        if (vec_parity(a, w) == 0) {
            Rational ww = pair_vec(a, w, w);
            if (sgn(ww) != 0) w = axpy(w, -ww / (2 * pair_vec(a, w, dz)), dz);
        }
        dz = a.diff.apply(z);
        dw = a.diff.apply(w);

        quads.push_back({z, dz, w, dw});

        // orthogonal complement of the quadruple within the working space,
        // computed per parity so the new basis stays homogeneous
        std::vector<Vec> constraints = {z, dz, w, dw};
        std::vector<Vec> next;
        for (int par = 0; par < 2; ++par) {
            std::vector<std::size_t> block;
            for (std::size_t k = 0; k < space.size(); ++k)
                if (vec_parity(a, space[k]) == par) block.push_back(k);
            if (block.empty()) continue;
            Matrix m(constraints.size(), block.size());
            for (std::size_t r = 0; r < constraints.size(); ++r)
                for (std::size_t c = 0; c < block.size(); ++c)
                    m.at(r, c) = pair_vec(a, constraints[r], space[block[c]]);
            for (const auto& coeffs : m.kernel()) {
                Vec v(n);
                for (std::size_t c = 0; c < block.size(); ++c)
                    if (sgn(coeffs[c]) != 0)
                        for (std::size_t i = 0; i < n; ++i) v[i] += coeffs[c] * space[block[c]][i];
                next.push_back(std::move(v));
            }
        }
        space = std::move(next);
    }

    // Assemble s and pi in the basis (quadruples, harmonic remainder).
    std::vector<Vec> columns;
    for (const auto& q : quads) {
        columns.push_back(q.z);
        columns.push_back(q.dz);
        columns.push_back(q.w);
        columns.push_back(q.dw);
    }
    std::size_t harmonic_start = columns.size();
    for (const auto& h : space) columns.push_back(h);
    if (columns.size() != n)
        return {std::nullopt, "internal split does not exhaust the algebra"};

    Matrix basis(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis.at(i, j) = columns[j][i];
    auto basis_inv = basis.inverse();
    if (!basis_inv) return {std::nullopt, "split basis is singular"};

    Matrix s_coords(n, n), pi_coords(n, n);
    for (std::size_t q = 0; q < quads.size(); ++q) {
        // columns 4q..4q+3 are (z, dz, w, dw): s maps dz -> z and dw -> w
        s_coords.at(4 * q + 0, 4 * q + 1) = 1;
        s_coords.at(4 * q + 2, 4 * q + 3) = 1;
    }
    for (std::size_t k = harmonic_start; k < n; ++k) pi_coords.at(k, k) = 1;

    Matrix s = basis * s_coords * *basis_inv;
    Matrix pi = basis * pi_coords * *basis_inv;
    HodgeDecomposition h = HodgeDecomposition::from_parts(a, std::move(s), std::move(pi));

    ValidationReport post = validate_hodge(a, h);
    if (!post.ok())
        return {std::nullopt, "constructed operators fail validation: " + post.to_string()};
    return {std::move(h), ""};
}

} // namespace orbicell
