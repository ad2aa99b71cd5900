#pragma once

#include <variant>
#include <vector>

#include "powersum/polynomial.hpp"

namespace powersum {

// Quasi-invariance conditions on coefficient spaces. Each condition expands,
// after substitution onto its hyperplane, into one linear functional per
// residual monomial. Ambient layouts:
//   line conditions:        (y, z)
//   hyperplane conditions:  (y_1..y_r, z_1..z_s)
//   type (1,r,s) conditions: (x, y_1..y_r, z_1..z_s)
//   A1 conditions:          (x)

/// f(t*x, q*x) = f(x, x) on C[y,z].
struct MultiplicativeLine {
    Rat q, t;
};

/// ((a d_z - d_y) f)(x, x) = 0.
struct InfinitesimalLine {
    Rat a;
};

/// f(..., t*y_j, ..., q*z_l, ...) = f at y_j = z_l, all pairs (j, l).
struct QTHyperplane {
    Rat q, t;
    int r, s;
};

/// ((a d_{z_l} - d_{y_j}) f) = 0 at y_j = z_l, all pairs.
struct ClassicalHyperplane {
    Rat a;
    int r, s;
};

/// f - swap_{jk}(f) divisible by (y_j - y_k)^{2m+1} over the y block.
struct SwapDivisibility {
    int m;  // order 2m+1
    int r, s;
};

/// f(..., y_j + 1, ..., z_l - m, ...) = f at y_j = z_l.
struct TrigShiftHyperplane {
    int m;
    int r, s;
};

/// f - swap_{jk}(f) divisible by prod_{p=-m}^{m} (y_j - y_k - p).
struct TrigSwapDivisibility {
    int m;
    int r, s;
};

/// Conditions (1)-(4) for the type (1,r,s) q,t family.
struct Type1RS_QT {
    Rat q, t;
    int r, s;
};

/// Conditions (1)-(4) for the type (1,r,s) classical family.
struct Type1RS_Classical {
    Rat a;
    int r, s;
};

/// f(j) = f(-j) for j = 1..m on C[x].
struct A1EvenPoints {
    int m;
};

using ConditionSpec =
    std::variant<MultiplicativeLine, InfinitesimalLine, QTHyperplane, ClassicalHyperplane,
                 SwapDivisibility, TrigShiftHyperplane, TrigSwapDivisibility, Type1RS_QT,
                 Type1RS_Classical, A1EvenPoints>;

/// Variable blocks required symmetric, as (start, length) ranges.
struct SymmetrySpec {
    std::vector<std::pair<int, int>> blocks;

    static SymmetrySpec none() { return {}; }
    /// S_r on the y block and S_s on the z block of an (r,s) layout.
    static SymmetrySpec full_rs(int r, int s, int offset = 0);
    /// S_s on the z block only.
    static SymmetrySpec z_only(int r, int s, int offset = 0);
};

int condition_nvars(const ConditionSpec& c);
bool condition_is_filtered(const ConditionSpec& c);
void validate_condition(const ConditionSpec& c);

/// Residual polynomials of f under one condition; f satisfies the condition
/// iff every residual vanishes identically.
std::vector<Polynomial> condition_residuals(const ConditionSpec& c, const Polynomial& f);

/// Basis of orbit sums of monomials under the block symmetry: exact degree d,
/// or all degrees <= d when filtered.
std::vector<Polynomial> orbit_basis(int nvars, const SymmetrySpec& sym, int d, bool filtered);

/// Compiled linear system on the symmetrized coefficient space.
struct CompiledSystem {
    long space_dim = 0;  // symmetrized basis size
    long rank = 0;       // independent functionals

    long solution_dim() const { return space_dim - rank; }
};

CompiledSystem compile(const std::vector<ConditionSpec>& conds, const SymmetrySpec& sym, int d);
long solution_dimension(const std::vector<ConditionSpec>& conds, const SymmetrySpec& sym, int d);

/// True iff f passes every compiled functional (symmetry is not imposed here;
/// it is the caller's basis choice).
bool check_satisfies(const Polynomial& f, const std::vector<ConditionSpec>& conds);

/// A1 rational Macdonald-Ruijsenaars operator: returns
/// ((x-m)(f(x+1)-f(x)) + (x+m)(f(x-1)-f(x))) / x, exact.
/// Throws NonPolynomialResult when x does not divide the numerator.
struct NonPolynomialResult : std::domain_error {
    using std::domain_error::domain_error;
};
Polynomial a1_mr_apply(const Polynomial& f, int m);

}  // namespace powersum
