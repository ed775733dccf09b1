#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cohom1/matrix.hpp"
#include "cohom1/rational.hpp"

namespace cohom1 {

// One nonzero structure constant Gamma_{ij}^u = Q([e_i, e_j], e_u).
struct GammaEntry {
    int i, j, u;
    Rational v;
};

// Isometric intertwiner between two irreducible isotropy submodules,
// f(e_i) = sum c e_j, together with optional complex structures on the
// source module (one for complex type, three for symplectic type).
struct Equivalence {
    enum class Group { H, K };
    enum class Type { Real, Complex, Symplectic };
    Group group = Group::H;
    Type type = Type::Real;
    std::vector<int> space_a, space_b;
    std::vector<std::tuple<int, int, Rational>> map;
    std::vector<std::vector<std::tuple<int, int, Rational>>> complex_structures;

    int channels() const {
        switch (type) {
            case Type::Real: return 1;
            case Type::Complex: return 2;
            default: return 4;
        }
    }
};

struct SmoothnessTerm {
    Rational c = 1;
    int d = 0;               // power of t
    int phi = -1;            // index of the even coefficient function, or -1
    std::string param;       // named constant factor, or empty
};

struct SmoothnessConstraint {
    std::vector<std::tuple<int, int, Rational>> a;  // entries (i, j, coeff)
    int d = 0;                                      // leading power t^d
};

struct SmoothnessData {
    std::vector<std::string> functions;
    std::vector<SmoothnessConstraint> constraints;
    // metric entry (i, j) -> sum of terms c * t^d * phi_k(t^2) * param
    std::map<std::pair<int, int>, std::vector<SmoothnessTerm>> ansatz;
};

// Full input for one cohomogeneity one germ: the algebra g = h + p + m
// with structure constants in a Q-orthonormal frame of n = p + m, the
// module decompositions, declared equivalences, and the smoothness data.
struct FibrationData {
    std::string name, description;
    std::vector<std::string> basis;
    int dim_h = 0;
    std::vector<GammaEntry> gamma;
    std::vector<int> index_I, index_J;
    std::vector<int> p0, p1, p2;               // Ad_H blocks of p
    std::vector<int> m0;                       // trivial K-module in m
    std::vector<std::vector<int>> m_irr;       // irreducible K-modules in m
    std::vector<std::vector<int>> adh_modules; // Ad_H-irreducible refinement of n
    std::vector<Equivalence> equivalences;
    std::map<std::string, Rational> parameters;
    // Squared norms of the basis vectors in the background invariant form
    // (one per basis vector; empty means all 1).  Bases whose blocks carry
    // different normalizations encode the ratios here so the bracket
    // skew-symmetry checks are taken against the right form.
    std::vector<Rational> q_norms;
    std::optional<SmoothnessData> smoothness;

    // derived
    bool unimodular = true;
    std::vector<Rational> trace_ad;  // sum_s Gamma_{ks}^s over the full basis
    std::vector<int> n_basis;        // I then J, fixing the row order of P
    std::vector<int> pos_in_n;       // basis index -> position in n (or -1)

    int dim() const { return static_cast<int>(basis.size()); }
    int dim_p() const { return static_cast<int>(index_I.size()); }
    int dim_m() const { return static_cast<int>(index_J.size()); }
    int dim_n() const { return dim_p() + dim_m(); }

    Rational gamma_at(int i, int j, int u) const {
        auto it = dense_.find(key(i, j, u));
        return it == dense_.end() ? Rational(0) : it->second;
    }
    Rational q_norm(int u) const { return q_norms.empty() ? Rational(1) : q_norms[u]; }
    bool in_I(int u) const { return pos_in_n[u] >= 0 && pos_in_n[u] < dim_p(); }
    bool in_J(int u) const { return pos_in_n[u] >= dim_p(); }

    // Call after filling the declared fields; computes the derived ones.
    void finalize();

private:
    static long key(int i, int j, int u) { return (static_cast<long>(i) * 4096 + j) * 4096 + u; }
    std::map<long, Rational> dense_;
};

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<std::string> warnings;
    bool passed() const { return issues.empty(); }
};

// Checks antisymmetry, the Ad_K symmetry properties, the exact Jacobi
// identity, and that each K-equivalence intertwines the bracket data.
ValidationReport validate(const FibrationData& data);

// B_{uv} = sum_{a,b} Gamma_{ua}^b Gamma_{vb}^a over the full g basis.
RationalMatrix killing_form(const FibrationData& data);

// True iff no declared equivalence pairs a p-submodule with an m-submodule.
bool check_condition_star(const FibrationData& data);

// JSON (de)serialization; rationals as "p/q" strings, bit-exact.
FibrationData load_fibration(const std::string& path);
FibrationData parse_fibration(const std::string& json_text);
std::string serialize_fibration(const FibrationData& data);

}  // namespace cohom1
