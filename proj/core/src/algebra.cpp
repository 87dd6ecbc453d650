#include "orbicell/algebra.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace orbicell {

using nlohmann::json;

void ValidationReport::add(std::string axiom, std::vector<int> witness, std::string detail) {
    violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.axiom << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            os << (i ? "," : "") << v.witness[i];
        os << ")";
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<Rational> DgFrobeniusAlgebra::multiply(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b) const {
    std::vector<Rational> r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (sgn(b[j]) == 0) continue;
            Rational c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (sgn(m(i, j, k)) != 0) r[k] += c * m(i, j, k);
        }
    }
    return r;
}

Rational DgFrobeniusAlgebra::pair(const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) const {
    Rational r;
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (sgn(b[j]) != 0 && sgn(pairing.at(i, j)) != 0) r += a[i] * b[j] * pairing.at(i, j);
    }
    return r;
}

std::string DgFrobeniusAlgebra::fingerprint() const {
    // FNV-1a over the canonical serialization.
    std::string bytes = algebra_to_json(*this);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string HodgeDecomposition::fingerprint() const {
    std::string bytes = hodge_to_json(*this);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

HodgeDecomposition HodgeDecomposition::from_parts(const DgFrobeniusAlgebra& a, Matrix s, Matrix pi) {
    HodgeDecomposition h;
    h.laplacian = a.diff * s + s * a.diff;
    h.s = std::move(s);
    h.pi = std::move(pi);
    return h;
}

namespace {

void check_sizes(const DgFrobeniusAlgebra& a) {
    if (a.dim == 0) throw StructuralError("algebra dimension must be positive");
    if (a.parity.size() != a.dim) throw StructuralError("parity array size mismatch");
    if (a.mult.size() != a.dim * a.dim * a.dim) throw StructuralError("mult array size mismatch");
    if (a.diff.rows() != a.dim || a.diff.cols() != a.dim)
        throw StructuralError("diff matrix size mismatch");
    if (a.pairing.rows() != a.dim || a.pairing.cols() != a.dim)
        throw StructuralError("pairing matrix size mismatch");
    for (auto p : a.parity)
        if (p > 1) throw StructuralError("parity entries must be 0 or 1");
    if (a.unit && *a.unit >= a.dim) throw StructuralError("unit index out of range");
}

} // namespace

ValidationReport validate_frobenius(const DgFrobeniusAlgebra& a) {
    check_sizes(a);
    ValidationReport rep;
    const std::size_t n = a.dim;
    auto par = [&](std::size_t i) { return a.parity[i]; };

    // associativity: (x_i x_j) x_k = x_i (x_j x_k)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    Rational lhs, rhs;
                    for (std::size_t t = 0; t < n; ++t) {
                        lhs += a.m(i, j, t) * a.m(t, k, l);
                        rhs += a.m(j, k, t) * a.m(i, t, l);
                    }
                    if (lhs != rhs) {
                        rep.add("associativity", {(int)i, (int)j, (int)k},
                                "(x_i x_j) x_k != x_i (x_j x_k)");
                        goto next_triple;
                    }
                }
            next_triple:;
            }

    // parity coherence of mult and diff
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(a.m(i, j, k)) != 0 && ((par(i) + par(j)) % 2) != par(k)) {
                    rep.add("parity_mult", {(int)i, (int)j, (int)k});
                    goto parity_mult_done;
                }
parity_mult_done:
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(a.diff.at(i, j)) != 0 && par(i) != (par(j) + 1) % 2) {
                rep.add("parity_diff", {(int)i, (int)j});
                goto parity_diff_done;
            }
parity_diff_done:

    // pairing: even, graded symmetric, nondegenerate
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(a.pairing.at(i, j)) != 0 && par(i) != par(j))
                rep.add("pairing_even", {(int)i, (int)j});
            Rational sym = a.pairing.at(j, i);
            if (par(i) && par(j)) sym = -sym;
            if (a.pairing.at(i, j) != sym)
                rep.add("pairing_symmetry", {(int)i, (int)j});
        }
    if (a.pairing.rank() != n) rep.add("pairing_nondegenerate", {}, "pairing matrix singular");

    // invariance <x_i, x_j x_k> = <x_i x_j, x_k>
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational lhs, rhs;
                for (std::size_t t = 0; t < n; ++t) {
                    lhs += a.m(j, k, t) * a.pairing.at(i, t);
                    rhs += a.m(i, j, t) * a.pairing.at(t, k);
                }
                if (lhs != rhs) {
                    rep.add("pairing_invariance", {(int)i, (int)j, (int)k});
                    goto invariance_done;
                }
            }
invariance_done:

    // d^2 = 0
    if (!(a.diff * a.diff).is_zero()) {
        for (std::size_t j = 0; j < n; ++j) {
            auto col = (a.diff * a.diff);
            for (std::size_t i = 0; i < n; ++i)
                if (sgn(col.at(i, j)) != 0) {
                    rep.add("d_squared", {(int)j});
                    goto dsq_done;
                }
        }
    }
dsq_done:

    // d is a graded derivation: d(x_i x_j) = d(x_i) x_j + (-1)^{|i|} x_i d(x_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> xi(n), xj(n);
            xi[i] = 1;
            xj[j] = 1;
            auto lhs = a.diff.apply(a.multiply(xi, xj));
            auto dxi = a.diff.apply(xi);
            auto dxj = a.diff.apply(xj);
            auto rhs = a.multiply(dxi, xj);
            auto t2 = a.multiply(xi, dxj);
            Rational sign = par(i) ? -1 : 1;
            bool bad = false;
            for (std::size_t k = 0; k < n; ++k)
                if (lhs[k] != rhs[k] + sign * t2[k]) bad = true;
            if (bad) {
                rep.add("d_derivation", {(int)i, (int)j});
                goto derivation_done;
            }
        }
derivation_done:

    // <d(x_i), x_j> = -(-1)^{|i|} <x_i, d(x_j)>
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs, rhs;
            for (std::size_t t = 0; t < n; ++t) {
                lhs += a.diff.at(t, i) * a.pairing.at(t, j);
                rhs += a.diff.at(t, j) * a.pairing.at(i, t);
            }
            Rational sign = par(i) ? 1 : -1;
            if (lhs != sign * rhs) {
                rep.add("d_skew_adjoint", {(int)i, (int)j});
                goto skew_done;
            }
        }
skew_done:

    return rep;
}

ValidationReport validate_hodge(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h) {
    check_sizes(a);
    const std::size_t n = a.dim;
    if (h.s.rows() != n || h.s.cols() != n || h.pi.rows() != n || h.pi.cols() != n)
        throw StructuralError("hodge operator size mismatch");

    ValidationReport rep;
    const Matrix& d = a.diff;
    Matrix delta = d * h.s + h.s * d;
    Matrix id = Matrix::identity(n);

    auto first_witness = [&](const Matrix& m) -> std::vector<int> {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (sgn(m.at(i, j)) != 0) return {(int)i, (int)j};
        return {};
    };

    auto check = [&](Matrix lhs, Matrix rhs, const char* name) {
        Matrix diffm = lhs - rhs;
        if (!diffm.is_zero()) rep.add(name, first_witness(diffm));
    };

    check(delta, id - h.pi, "hodge_homotopy");                  // ds+sd = id-pi
    check(h.s * h.s, Matrix(n, n), "s_squared");                // s^2 = 0
    check(h.pi * h.pi, h.pi, "pi_idempotent");                  // pi^2 = pi
    check(d * h.pi, Matrix(n, n), "d_pi");                      // d pi = 0
    check(h.pi * d, Matrix(n, n), "pi_d");                      // pi d = 0
    check(h.pi * h.s, Matrix(n, n), "pi_s");                    // pi s = 0
    check(h.s * h.pi, Matrix(n, n), "s_pi");                    // s pi = 0

    // <s(x_i), x_j> = (-1)^{|i|} <x_i, s(x_j)>
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs, rhs;
            for (std::size_t t = 0; t < n; ++t) {
                lhs += h.s.at(t, i) * a.pairing.at(t, j);
                rhs += h.s.at(t, j) * a.pairing.at(i, t);
            }
            Rational sign = a.parity[i] ? -1 : 1;
            if (lhs != sign * rhs) {
                rep.add("s_self_adjoint", {(int)i, (int)j});
                goto s_adj_done;
            }
        }
s_adj_done:

    // <pi(x_i), x_j> = <x_i, pi(x_j)>
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational lhs, rhs;
            for (std::size_t t = 0; t < n; ++t) {
                lhs += h.pi.at(t, i) * a.pairing.at(t, j);
                rhs += h.pi.at(t, j) * a.pairing.at(i, t);
            }
            if (lhs != rhs) {
                rep.add("pi_self_adjoint", {(int)i, (int)j});
                goto pi_adj_done;
            }
        }
pi_adj_done:

    // derived identities
    check(delta * delta, delta, "laplacian_idempotent");
    check(d * delta, delta * d, "laplacian_commutes_d");
    check(delta * h.pi, Matrix(n, n), "laplacian_pi");

    return rep;
}

Matrix copairing_matrix(const DgFrobeniusAlgebra& a) {
    auto inv = a.pairing.inverse();
    if (!inv) throw StructuralError("pairing matrix is singular; no copairing");
    return *inv;
}

// ---------------------------------------------------------------------------
// JSON I/O
// ---------------------------------------------------------------------------

namespace {

Matrix sparse_matrix_from_json(const json& entries, std::size_t n, const char* what) {
    Matrix m(n, n);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3)
            throw StructuralError(std::string(what) + ": entries must be [i, j, \"p/q\"]");
        std::size_t i = e[0].get<std::size_t>();
        std::size_t j = e[1].get<std::size_t>();
        if (i >= n || j >= n) throw StructuralError(std::string(what) + ": index out of range");
        m.at(i, j) = rational_from_string(e[2].get<std::string>());
    }
    return m;
}

json sparse_matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m.at(i, j)) != 0)
                entries.push_back({i, j, rational_to_string(m.at(i, j))});
    return entries;
}

} // namespace

DgFrobeniusAlgebra algebra_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("algebra JSON parse error: ") + e.what());
    }
    DgFrobeniusAlgebra a;
    try {
        a.dim = j.at("dim").get<std::size_t>();
        if (a.dim == 0) throw StructuralError("dim must be positive");
        for (const auto& p : j.at("parity")) a.parity.push_back(p.get<int>() ? 1 : 0);
        a.mult.assign(a.dim * a.dim * a.dim, Rational());
        for (const auto& e : j.at("mult")) {
            if (!e.is_array() || e.size() != 4)
                throw StructuralError("mult entries must be [i, j, k, \"p/q\"]");
            std::size_t i = e[0].get<std::size_t>(), jj = e[1].get<std::size_t>(),
                        k = e[2].get<std::size_t>();
            if (i >= a.dim || jj >= a.dim || k >= a.dim)
                throw StructuralError("mult index out of range");
            a.m(i, jj, k) = rational_from_string(e[3].get<std::string>());
        }
        a.diff = sparse_matrix_from_json(j.at("diff"), a.dim, "diff");
        a.pairing = sparse_matrix_from_json(j.at("pairing"), a.dim, "pairing");
        if (j.contains("unit") && !j.at("unit").is_null())
            a.unit = j.at("unit").get<std::size_t>();
    } catch (const json::exception& e) {
        throw StructuralError(std::string("algebra JSON: ") + e.what());
    }
    check_sizes(a);
    return a;
}

std::string algebra_to_json(const DgFrobeniusAlgebra& a) {
    json j;
    j["dim"] = a.dim;
    j["parity"] = a.parity;
    json mult = json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k)
            for (std::size_t l = 0; l < a.dim; ++l)
                if (sgn(a.m(i, k, l)) != 0)
                    mult.push_back({i, k, l, rational_to_string(a.m(i, k, l))});
    j["mult"] = mult;
    j["diff"] = sparse_matrix_to_json(a.diff);
    j["pairing"] = sparse_matrix_to_json(a.pairing);
    if (a.unit)
        j["unit"] = *a.unit;
    else
        j["unit"] = nullptr;
    return j.dump(2);
}

HodgeDecomposition hodge_from_json(const DgFrobeniusAlgebra& a, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("hodge JSON parse error: ") + e.what());
    }
    try {
        Matrix s = sparse_matrix_from_json(j.at("s"), a.dim, "s");
        Matrix pi = sparse_matrix_from_json(j.at("pi"), a.dim, "pi");
        return HodgeDecomposition::from_parts(a, std::move(s), std::move(pi));
    } catch (const json::exception& e) {
        throw StructuralError(std::string("hodge JSON: ") + e.what());
    }
}

std::string hodge_to_json(const HodgeDecomposition& h) {
    json j;
    j["s"] = sparse_matrix_to_json(h.s);
    j["pi"] = sparse_matrix_to_json(h.pi);
    return j.dump(2);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

DgFrobeniusAlgebra load_algebra_file(const std::string& path) {
    return algebra_from_json(slurp(path));
}

HodgeDecomposition load_hodge_file(const DgFrobeniusAlgebra& a, const std::string& path) {
    return hodge_from_json(a, slurp(path));
}

} // namespace orbicell
