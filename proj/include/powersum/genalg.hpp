#pragma once

#include <optional>
#include <vector>

#include "powersum/echelon.hpp"
#include "powersum/polynomial.hpp"
#include "powersum/series.hpp"

namespace powersum {

/// Homogeneous generators of a graded subalgebra of a polynomial ring.
struct GeneratorSet {
    int nvars = 0;
    std::vector<Polynomial> gens;

    void validate() const;
    std::vector<int> degrees() const;
};

/// dim_0 .. dim_D of a graded algebra (or module).
using GradedDims = std::vector<long>;

/// Outcome of an experimental Cohen-Macaulayness check over a degree window.
/// ConsistentCM is evidence up to the window; RefutedAt carries an exact
/// witness of series inequality.
struct CmVerdict {
    bool consistent = true;
    long window = 0;        // D when consistent
    int refuted_at = -1;    // first failing degree otherwise
    Rat expected;           // predicted coefficient at the failing degree
    Rat computed;
};

/// Graded span of all products of a homogeneous generator set, built
/// degree by degree. A_0 = constants, A_d = sum_i g_i * A_{d - deg g_i}.
class GradedAlgebra {
public:
    explicit GradedAlgebra(GeneratorSet gens);

    const GeneratorSet& generators() const { return gens_; }
    int nvars() const { return gens_.nvars; }

    /// Extends the computation through degree D (idempotent).
    void extend(int D);

    /// Echelonized polynomial basis of the degree-d component.
    const std::vector<Polynomial>& basis(int d);

    long dim(int d);
    GradedDims dims(int D);

    /// True iff the homogeneous f lies in the algebra.
    bool contains(const Polynomial& f);

private:
    GeneratorSet gens_;
    std::vector<std::vector<Polynomial>> basis_;  // per degree
};

GradedDims graded_dimensions(const GeneratorSet& gens, int D);

bool membership(const Polynomial& f, const GeneratorSet& gens);

/// dim_d of A_d / sum_j q_j A_{d - deg q_j}. Every ideal generator must be a
/// homogeneous member of the algebra.
GradedDims quotient_by_ideal_dims(const GeneratorSet& gens,
                                  const std::vector<Polynomial>& ideal_gens, int D);

/// Checks h_alg(u) = h_quot(u) * prod_i 1/(1 - u^{e_i}) coefficientwise.
CmVerdict freeness_test(const GradedDims& alg, const GradedDims& quot,
                        const std::vector<int>& parameter_degrees, int D);

/// dim_d of { f in A_d : f(substitution) = 0 }.
GradedDims restriction_kernel_dims(const GeneratorSet& gens,
                                   const std::vector<Polynomial>& images, int D);

/// Coefficient vector of a homogeneous-degree component over the graded lex
/// monomial index of that degree.
std::vector<Rat> poly_to_vector(const Polynomial& p, const std::vector<Monomial>& index);

}  // namespace powersum
