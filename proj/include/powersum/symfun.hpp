#pragma once

#include <map>
#include <vector>

#include "powersum/rational.hpp"
#include "powersum/series.hpp"

namespace powersum {

/// Integer partition: weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);

/// All partitions of n, descending lexicographic (refines dominance).
std::vector<Partition> partitions_of(int n);

/// z_mu = prod k^{m_k} m_k!; |C_mu| = n!/z_mu.
mpz_class zee(const Partition& mu);
mpz_class factorial(int n);

/// Irreducible S_n character value chi^lambda(C_mu), Murnaghan-Nakayama.
long long character(const Partition& lambda, const Partition& mu);

/// dim lambda = chi^lambda(identity).
long long dim_partition(const Partition& lambda);

/// Kostka matrix and its inverse over partitions_of(n) in the fixed order:
/// K[mu][lambda] = multiplicity of chi^mu in the induced character
/// from the Young subgroup of lambda (= SSYT of shape mu, content lambda).
struct KostkaPair {
    std::vector<Partition> order;
    std::vector<std::vector<long long>> K;
    std::vector<std::vector<long long>> Kinv;
};
KostkaPair kostka_pair(int n);

/// Finite Schur expansion with integer coefficients.
using PlethysmExpansion = std::map<Partition, long long>;

/// c^nu_{lambda;m}: coefficient of s_nu in s_lambda(x_1^m, x_2^m, ...).
PlethysmExpansion plethysm_c(const Partition& lambda, int m);

/// Partitions nu >= mu with nu/mu a horizontal strip of size s.
std::vector<Partition> pieri(const Partition& mu, int s);

/// b^nu_{lambda,s;m} = sum over mu with nu/mu a horizontal s-strip of c^mu.
PlethysmExpansion b_coeffs(const Partition& lambda, int s, int m);

/// Sum of box contents (column - row) of nu.
long kappa(const Partition& nu);

/// prod over boxes of t^{leg}/(1 - t^{hook}), expanded exactly.
GradedSeries chi_series(const Partition& nu, long lattice, long trunc_num);

/// Addable corner boxes of nu with content divisible by m.
std::vector<Partition> add_box_candidates(const Partition& nu, int m);

/// Raised when fractional lattice exponents fail to cancel.
struct FractionalResidue : std::domain_error {
    using std::domain_error::domain_error;
};

/// Hilbert series of Lambda_{r,s}(m) on the 1/(2m) lattice, n = mr + s:
/// sum over lambda |- r, nu |- n of dim(lambda) b^nu t^{(n(n-1)-2kappa(nu))/2m} chi_nu(t).
/// Requires m > s; the result is checked to be an integral nonnegative series
/// with constant term 1.
GradedSeries hilbert_P(int r, int s, int m, long D);

/// s = 1 variants through the box-adding rule and the inverse Kostka matrix;
/// both must agree with hilbert_P(r, 1, m, D).
GradedSeries hilbert_P_form2(int r, int m, long D);
GradedSeries hilbert_P_form3(int r, int m, long D);

struct GorensteinReport {
    std::vector<Rat> numerator;  // N(t) = P_{r;m}(t) * prod_{i=1}^{r+1} (1 - t^i)
    bool stabilized = false;
    bool palindromic = false;
    long degree = -1;            // deg N within the window
    long expected_degree = -1;   // from the functional equation
};

/// Computes N(t) within the degree-D window and tests palindromy.
/// Throws std::runtime_error when the window is too small to stabilize.
GorensteinReport gorenstein_check(int r, int m, long D);

}  // namespace powersum
