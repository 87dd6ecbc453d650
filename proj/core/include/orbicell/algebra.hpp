#pragma once

#include "orbicell/matrix.hpp"
#include "orbicell/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbicell {

// Structural problems (malformed arrays, unreadable files) are thrown as
// StructuralError; axiom violations are collected in ValidationReport so a
// caller can see every failing identity with a witness.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValidationReport {
    struct Violation {
        std::string axiom;        // e.g. "associativity", "pairing_nondegenerate"
        std::vector<int> witness; // basis indices exhibiting the failure
        std::string detail;
    };
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string axiom, std::vector<int> witness, std::string detail = {});
    std::string to_string() const;
};

// Finite-dimensional differential Z/2-graded Frobenius algebra over Q.
// mult[i][j][k] is the coefficient of x_k in x_i * x_j; diff columns are the
// images of basis vectors (d(x_j) = sum_i diff[i][j] x_i); pairing[i][j] is
// <x_i, x_j>.
struct DgFrobeniusAlgebra {
    std::size_t dim = 0;
    std::vector<std::uint8_t> parity;
    std::vector<Rational> mult; // dense, dim^3, index (i*dim + j)*dim + k
    Matrix diff;
    Matrix pairing;
    std::optional<std::size_t> unit;

    const Rational& m(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }
    Rational& m(std::size_t i, std::size_t j, std::size_t k) {
        return mult[(i * dim + j) * dim + k];
    }

    // x_j * acc accumulated into dense coordinate vectors.
    std::vector<Rational> multiply(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;
    Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

    // Stable fingerprint of the defining data, used to tag derived values.
    std::string fingerprint() const;
};

// Abstract Hodge decomposition: odd s and even pi with the side conditions
// ds+sd = id-pi, s^2 = 0, pi^2 = pi, d pi = pi d = 0, pi s = s pi = 0 and
// the two self-adjointness identities. laplacian caches ds+sd.
struct HodgeDecomposition {
    Matrix s;
    Matrix pi;
    Matrix laplacian;

    static HodgeDecomposition from_parts(const DgFrobeniusAlgebra& a, Matrix s, Matrix pi);
    std::string fingerprint() const;
};

ValidationReport validate_frobenius(const DgFrobeniusAlgebra& a);
ValidationReport validate_hodge(const DgFrobeniusAlgebra& a, const HodgeDecomposition& h);

// Inverse of the pairing matrix; throws StructuralError when the pairing is
// singular (callers should have run validate_frobenius first).
Matrix copairing_matrix(const DgFrobeniusAlgebra& a);

struct HodgeResult {
    std::optional<HodgeDecomposition> hodge;
    std::string diagnostic; // nonempty when construction failed
};

// Exact construction: splits A into hyperbolic acyclic quadruples plus a
// harmonic part orthogonal to them, then reads off (s, pi). Always succeeds
// for a valid algebra over Q; the diagnostic branch survives as a guard for
// invalid input.
HodgeResult construct_hodge(const DgFrobeniusAlgebra& a);

// JSON (de)serialization per the file formats of the CLI.
DgFrobeniusAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const DgFrobeniusAlgebra& a);
HodgeDecomposition hodge_from_json(const DgFrobeniusAlgebra& a, const std::string& text);
std::string hodge_to_json(const HodgeDecomposition& h);

DgFrobeniusAlgebra load_algebra_file(const std::string& path);
HodgeDecomposition load_hodge_file(const DgFrobeniusAlgebra& a, const std::string& path);

} // namespace orbicell
