#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "powersum/conditions.hpp"
#include "powersum/genalg.hpp"
#include "powersum/series.hpp"

namespace powersum {

// --- family descriptors ---------------------------------------------------

/// a_i given verbatim.
struct ExplicitSeq {
    std::vector<Rat> a;
};
/// a_i = c^i (q^i - 1)/(1 - t^i).
struct CQT {
    Rat c, q, t;
};
/// a_i = c^i a.
struct ConstA {
    Rat c, a;
};

struct Type11 {
    std::variant<ExplicitSeq, CQT, ConstA> source;
};

struct ClassicalSource {
    Rat a;
};
struct QTSource {
    Rat c{1}, q, t;
};

struct TypeRS {
    int r, s;
    std::variant<ClassicalSource, QTSource> source;
};

struct Type1RS {
    int r, s;
    std::variant<ClassicalSource, QTSource> source;
};

struct MQuasi {
    int r, s, m;
    bool trig = false;
};

using FamilySpec = std::variant<Type11, TypeRS, Type1RS, MQuasi>;

// --- admissibility ----------------------------------------------------------

struct Admissibility {
    bool ok = true;
    std::string violated;  // first violated rule when !ok
};

/// Screens the paper's finite-generation and genericity hypotheses up to the
/// given multiplicative depth. Deterministic in (spec, depth).
Admissibility admissible(const FamilySpec& spec, int depth);

// --- constructions ----------------------------------------------------------

/// Generators Q_i / P_i for 1 <= i <= D with parameters substituted exactly.
/// Not defined for MQuasi variants (those algebras come from conditions).
GeneratorSet family_generators(const FamilySpec& spec, int D);

/// Closed-form Hilbert series prediction, expanded to degree D (lattice 1,
/// except MQuasi which lives on the 1/(2m) lattice).
GradedSeries predicted_hilbert(const FamilySpec& spec, long D);

/// h_{r,s}(u) = (1/(u;u)_r) sum_{i=0}^{s} u^{i(r+1)}/(u;u)_i.
GradedSeries hrs_series(int r, int s, long D);

/// Conditions + symmetry realizing the family (empty when no condition route
/// exists, e.g. an explicit sequence with no rational (c,q,t)).
struct ConditionRoute {
    std::vector<ConditionSpec> conds;
    SymmetrySpec sym;
};
std::optional<ConditionRoute> condition_route(const FamilySpec& spec);

// --- the (c,q,t) inverse problem -------------------------------------------

struct CqtSolutions {
    std::vector<std::array<Rat, 3>> solutions;  // (c, q, t), forward-verified
    bool possibly_irrational_or_degenerate = false;
};

/// All rational (c,q,t) with a_i = c^i (q^i - 1)/(1 - t^i) for i = 1,2,3.
CqtSolutions solve_cqt(const Rat& a1, const Rat& a2, const Rat& a3);

/// Forward evaluation a_i = c^i (q^i - 1)/(1 - t^i).
Rat cqt_value(const Rat& c, const Rat& q, const Rat& t, int i);

// --- diagnosis --------------------------------------------------------------

struct CmReport {
    GradedDims computed;               // generator route (or condition route for MQuasi)
    std::vector<Rat> predicted;        // closed-form coefficients 0..D
    GradedDims condition_dims;         // empty when no condition route exists
    GradedDims quotient_dims;          // empty for MQuasi variants
    CmVerdict verdict;
    int first_deviation = -1;          // computed vs predicted; -1 if none
};

/// End-to-end workflow: generators -> dimensions, quotient by the parameter
/// subalgebra, freeness test, plus the conditions route.
CmReport cm_diagnose(const FamilySpec& spec, int D);

// --- section 4 polynomials ---------------------------------------------------

/// prod_{j<=r+1, l<=s+1} (y_j - z_l)^2 on (r+1)+(s+1) variables.
Polynomial d_polynomial(int r, int s);
/// prod (y_j - z_l)(y_j - b z_l); b = 1 recovers d_polynomial.
Polynomial d_polynomial_b(int r, int s, const Rat& b);

/// Restriction of the TypeRS{r+1, s+1} generators to y_{r+1} = z_{s+1} = x,
/// in the (x, y_1..y_r, z_1..z_s) layout; equals the Type1RS{r,s} generators.
GeneratorSet restrict_to_type1rs(const TypeRS& spec, int D);

/// Substitution images realizing y_{r+1} = z_{s+1} = x for an (r+1, s+1)
/// ambient, mapping into the (x, y_1..y_r, z_1..z_s) layout.
std::vector<Polynomial> merge_last_pair_images(int r, int s);

}  // namespace powersum
