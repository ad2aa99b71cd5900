#pragma once

#include <map>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Exponent vector over a fixed ambient variable set. Graded lex order.
struct Monomial {
    std::vector<int> exps;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }

    bool operator==(const Monomial& o) const = default;

    // graded lexicographic: compare total degree, then exponents left to right
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return exps < o.exps;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no stored coefficient is zero; all monomials share nvars().
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    /// Coefficient of a monomial (zero if absent).
    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const = default;

    /// Image under variable -> images[variable]; the images share one target
    /// context and every ambient variable must be covered.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    Polynomial derivative(int var) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    /// Coefficient polynomials of var^0 .. var^k (the var exponent stripped).
    std::vector<Polynomial> coefficients_in(int var, int max_power) const;

    /// Extracts the homogeneous part of total degree d.
    Polynomial homogeneous_part(int d) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<Monomial, Rat> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

/// Substitution images for the identity map, to be edited pointwise.
std::vector<Polynomial> identity_images(int nvars);

/// Taylor coefficients of p with x_j -> w + eps, x_k -> w, in powers of eps;
/// slot j carries eps and slot k carries w in the returned polynomials.
/// Reconstruction: sum_i (x_j - x_k)^i * result[i] == p.
std::vector<Polynomial> direction_expansion(const Polynomial& p, int j, int k, int order);

/// All monomials of the exact degree d in nvars variables, graded lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace powersum
