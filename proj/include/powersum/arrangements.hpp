#pragma once

#include <cstdint>
#include <vector>

#include "powersum/genalg.hpp"
#include "powersum/symfun.hpp"

namespace powersum {

/// Union of coordinate subspaces of C^N: some lambda_1 coordinates equal,
/// another lambda_2 equal, and so on. Components are set partitions of the
/// coordinate indices with block sizes lambda, each counted once.
struct Arrangement {
    int N = 0;
    Partition lambda;
    /// assign[c][i] = block index of coordinate i on component c; blocks are
    /// numbered by their smallest member and have sizes a permutation of lambda.
    std::vector<std::vector<int>> assign;
    /// block_size[c][j]
    std::vector<std::vector<int>> block_sizes;

    int num_components() const { return (int)assign.size(); }
    int dim() const { return (int)lambda.size(); }
};

Arrangement components(const Partition& lambda);

/// N! / (prod lambda_i! * prod m_k!) -- the set-partition count.
mpz_class component_count(const Partition& lambda);

/// dim O(X_lambda)_d for d = 0..D: rank of the restriction map from ambient
/// degree-d polynomials into the direct sum of block-coordinate rings.
GradedDims hilbert_function(const Partition& lambda, int D);

/// Experimental CM test: quotient by dim-many seeded generic linear forms,
/// freeness test with all parameter degrees 1. Degenerate draws (quotient not
/// vanishing at the top of the window) are redrawn up to a retry bound.
CmVerdict cm_test(const Partition& lambda, int D, std::uint64_t seed);

/// Quotient dims used by cm_test, exposed for inspection.
GradedDims cm_quotient_dims(const Partition& lambda, int D, std::uint64_t seed);

struct MergeKernelReport {
    GradedDims dims;             // kernel of O(X_{m^(n)}) -> O(X_{(2m, m^(n-2))})
    std::vector<Rat> predicted;  // #components * u^{n(n-1)/2} / (1-u)^n
    bool matches = false;
};

MergeKernelReport merge_kernel_dims(int m, int n, int D);

/// True iff lambda lies in one of the conjectured CM families:
/// (m^(r), 1^(s)) with m > s >= 0, (2^(r), 1^(s)), or (2m, m^(s)).
bool conjecture_classifier(const Partition& lambda);

struct ScanRow {
    Partition lambda;
    bool in_family = false;
    CmVerdict verdict;
};

/// cm_test over all lambda |- N <= N_max, tabulated.
std::vector<ScanRow> conjecture_scan(int N_max, int D, std::uint64_t seed);

}  // namespace powersum
