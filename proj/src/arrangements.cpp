#include "powersum/arrangements.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace powersum {

namespace {

/// Row-echelon rank accumulator over sparse rational rows (forward
/// elimination only; rows keep their span).
class SparseEchelon {
public:
    /// Returns true iff the row was independent of the current span.
    bool insert(std::map<long, Rat> row) {
        while (!row.empty()) {
            long piv = row.begin()->first;
            auto it = rows_.find(piv);
            if (it == rows_.end()) {
                Rat lead = row.begin()->second;
                for (auto& [k, v] : row) v /= lead;
                rows_.emplace(piv, std::move(row));
                return true;
            }
            Rat f = row.begin()->second;
            for (const auto& [k, v] : it->second) {
                auto jt = row.find(k);
                Rat nv = (jt == row.end() ? Rat(0) : jt->second) - f * v;
                if (nv == 0) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[k] = nv;
                }
            }
        }
        return false;
    }

    long rank() const { return (long)rows_.size(); }
    const std::map<long, std::map<long, Rat>>& rows() const { return rows_; }

private:
    std::map<long, std::map<long, Rat>> rows_;  // pivot -> reduced row
};

void enumerate_components(int N, std::vector<int>& sizes_left, std::vector<int>& assign,
                          int next_block, Arrangement& out) {
    int leader = -1;
    for (int i = 0; i < N; ++i)
        if (assign[i] < 0) {
            leader = i;
            break;
        }
    if (leader < 0) {
        out.assign.push_back(assign);
        std::vector<int> bs(next_block, 0);
        for (int i = 0; i < N; ++i) ++bs[assign[i]];
        out.block_sizes.push_back(bs);
        return;
    }
    std::vector<int> rest;
    for (int i = leader + 1; i < N; ++i)
        if (assign[i] < 0) rest.push_back(i);

    std::set<int> tried;
    for (size_t si = 0; si < sizes_left.size(); ++si) {
        int k = sizes_left[si];
        if (!tried.insert(k).second) continue;
        std::vector<int> left = sizes_left;
        left.erase(left.begin() + si);
        // choose k-1 companions for the leader from rest
        std::vector<int> pick(k - 1);
        std::vector<int> idx(k - 1);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == k - 1) {
                assign[leader] = next_block;
                for (int p : pick) assign[p] = next_block;
                enumerate_components(N, left, assign, next_block + 1, out);
                assign[leader] = -1;
                for (int p : pick) assign[p] = -1;
                return;
            }
            for (int t = start; t < (int)rest.size(); ++t) {
                pick[pos] = rest[t];
                self(self, pos + 1, t + 1);
            }
        };
        rec(rec, 0, 0);
        (void)idx;
    }
}

/// Degree-d block-monomial index on ell variables (graded lex, same order as
/// monomials_of_degree) plus the reverse lookup.
struct MonIndex {
    std::vector<Monomial> mons;
    std::map<std::vector<int>, long> pos;

    explicit MonIndex(int ell, int d) {
        mons = monomials_of_degree(ell, d);
        for (long i = 0; i < (long)mons.size(); ++i) pos.emplace(mons[i].exps, i);
    }
    long size() const { return (long)mons.size(); }
};

/// Per-degree echelonized bases of the image of the restriction map,
/// represented as sparse vectors on the (component, block monomial) index.
class RestrictionModel {
public:
    explicit RestrictionModel(const Partition& lambda)
        : arr_(components(lambda)), ell_(arr_.dim()) {}

    const Arrangement& arrangement() const { return arr_; }
    int ell() const { return ell_; }

    const MonIndex& index(int d) {
        while ((int)idx_.size() <= d) idx_.emplace_back(ell_, (int)idx_.size());
        return idx_[d];
    }

    long slot(int c, long m, int d) { return (long)c * index(d).size() + m; }

    /// Restriction of the ambient monomial alpha (degree d) -- one entry per
    /// component, coefficient 1.
    std::map<long, Rat> restrict_monomial(const std::vector<int>& alpha, int d) {
        std::map<long, Rat> row;
        const MonIndex& ix = index(d);
        for (int c = 0; c < arr_.num_components(); ++c) {
            std::vector<int> beta(ell_, 0);
            for (int i = 0; i < arr_.N; ++i) beta[arr_.assign[c][i]] += alpha[i];
            row[(long)c * ix.size() + ix.pos.at(beta)] = 1;
        }
        return row;
    }

    const std::map<long, std::map<long, Rat>>& basis(int d) {
        while ((int)bases_.size() <= d) {
            int dd = (int)bases_.size();
            SparseEchelon ech;
            long width = (long)arr_.num_components() * index(dd).size();
            for (const Monomial& m : monomials_of_degree(arr_.N, dd)) {
                ech.insert(restrict_monomial(m.exps, dd));
                if (ech.rank() == width) break;
            }
            bases_.push_back(ech.rows());
        }
        return bases_[d];
    }

    long dim(int d) { return (long)basis(d).size(); }

    /// theta restricted to component c in block coordinates: coefficient of
    /// b_j is the sum of theta's coefficients over block j.
    std::vector<std::vector<Rat>> restrict_linear(const std::vector<Rat>& theta) const {
        std::vector<std::vector<Rat>> t(arr_.num_components(), std::vector<Rat>(ell_, Rat(0)));
        for (int c = 0; c < arr_.num_components(); ++c)
            for (int i = 0; i < arr_.N; ++i) t[c][arr_.assign[c][i]] += theta[i];
        return t;
    }

    /// theta * v, v sparse on degree d-1, result on degree d.
    std::map<long, Rat> multiply(const std::vector<std::vector<Rat>>& t,
                                 const std::map<long, Rat>& v, int d) {
        const MonIndex& lo = index(d - 1);
        const MonIndex& hi = index(d);
        std::map<long, Rat> out;
        for (const auto& [key, coeff] : v) {
            int c = (int)(key / lo.size());
            std::vector<int> beta = lo.mons[key % lo.size()].exps;
            for (int j = 0; j < ell_; ++j) {
                if (t[c][j] == 0) continue;
                ++beta[j];
                long k = (long)c * hi.size() + hi.pos.at(beta);
                --beta[j];
                Rat nv = out[k] + t[c][j] * coeff;
                if (nv == 0)
                    out.erase(k);
                else
                    out[k] = nv;
            }
        }
        return out;
    }

private:
    Arrangement arr_;
    int ell_;
    std::vector<MonIndex> idx_;
    std::vector<std::map<long, std::map<long, Rat>>> bases_;
};

/// Deterministic integer coefficients in [-9, 9] (splitmix64 stream; avoids
/// distribution classes whose output is implementation-defined).
struct CoeffGen {
    std::uint64_t state;
    explicit CoeffGen(std::uint64_t seed) : state(seed) {}
    int next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return (int)(z % 19) - 9;
    }
};

GradedDims quotient_dims_for_draw(RestrictionModel& model,
                                  const std::vector<std::vector<Rat>>& thetas, int D) {
    std::vector<std::vector<std::vector<Rat>>> tr;
    tr.reserve(thetas.size());
    for (const auto& th : thetas) tr.push_back(model.restrict_linear(th));

    GradedDims quot;
    quot.push_back(model.dim(0));  // constants survive
    for (int d = 1; d <= D; ++d) {
        SparseEchelon ech;
        for (const auto& t : tr)
            for (const auto& [piv, row] : model.basis(d - 1)) {
                (void)piv;
                ech.insert(model.multiply(t, row, d));
            }
        quot.push_back(model.dim(d) - ech.rank());
    }
    return quot;
}

struct CmRun {
    GradedDims alg, quot;
    CmVerdict verdict;
};

CmRun cm_run(const Partition& lambda, int D, std::uint64_t seed) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    RestrictionModel model(lambda);
    int ell = model.ell();
    int N = model.arrangement().N;

    GradedDims alg;
    for (int d = 0; d <= D; ++d) alg.push_back(model.dim(d));

    CoeffGen gen(seed * 0x100000001b3ULL + 0xcbf29ce484222325ULL);
    const int retries = 8;
    GradedDims quot;
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<std::vector<Rat>> thetas(ell, std::vector<Rat>(N));
        for (auto& th : thetas)
            for (auto& c : th) c = Rat(gen.next());
        quot = quotient_dims_for_draw(model, thetas, D);
        std::vector<int> ones(ell, 1);
        CmVerdict v = freeness_test(alg, quot, ones, D);
        // refutation is data; the top-of-window vanishing guard only protects
        // a ConsistentCM claim from a degenerate draw
        if (!v.consistent || quot[D] == 0) return {alg, quot, v};
    }
    throw std::runtime_error("cm_test: degenerate linear forms after retry bound");
}

}  // namespace

mpz_class component_count(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    int N = partition_size(lambda);
    mpz_class denom = 1;
    std::map<int, int> mult;
    for (int p : lambda) {
        denom *= factorial(p);
        ++mult[p];
    }
    for (const auto& [k, m] : mult) {
        (void)k;
        denom *= factorial(m);
    }
    return factorial(N) / denom;
}

Arrangement components(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    Arrangement out;
    out.lambda = lambda;
    out.N = partition_size(lambda);
    std::vector<int> sizes(lambda.begin(), lambda.end());
    std::vector<int> assign(out.N, -1);
    enumerate_components(out.N, sizes, assign, 0, out);
    if (mpz_class((long)out.assign.size()) != component_count(lambda))
        throw std::logic_error("component enumeration does not match the closed form");
    return out;
}

GradedDims hilbert_function(const Partition& lambda, int D) {
    RestrictionModel model(lambda);
    GradedDims h;
    for (int d = 0; d <= D; ++d) h.push_back(model.dim(d));
    return h;
}

CmVerdict cm_test(const Partition& lambda, int D, std::uint64_t seed) {
    return cm_run(lambda, D, seed).verdict;
}

GradedDims cm_quotient_dims(const Partition& lambda, int D, std::uint64_t seed) {
    return cm_run(lambda, D, seed).quot;
}

MergeKernelReport merge_kernel_dims(int m, int n, int D) {
    if (n < 3 || m < 1) throw std::invalid_argument("merge_kernel_dims needs n >= 3, m >= 1");
    Partition fine(n, m);
    Partition merged;
    merged.push_back(2 * m);
    for (int i = 0; i < n - 2; ++i) merged.push_back(m);

    GradedDims h1 = hilbert_function(fine, D);
    GradedDims h2 = hilbert_function(merged, D);

    MergeKernelReport rep;
    for (int d = 0; d <= D; ++d) rep.dims.push_back(h1[d] - h2[d]);

    long gdeg = (long)n * (n - 1) / 2;
    GradedSeries pred = GradedSeries::power(1, D, gdeg);
    for (int i = 0; i < n; ++i) pred = pred * GradedSeries::geometric(1, D, 1);
    Rat count(component_count(fine));
    pred = pred * count;
    rep.matches = true;
    for (int d = 0; d <= D; ++d) {
        rep.predicted.push_back(pred.coeff(d));
        if (Rat(rep.dims[d]) != rep.predicted[d]) rep.matches = false;
    }
    return rep;
}

bool conjecture_classifier(const Partition& lambda) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    if (lambda.empty()) return false;

    // (m^(r), 1^(s)), m > s >= 0
    {
        int m = lambda[0];
        size_t r = 0;
        while (r < lambda.size() && lambda[r] == m) ++r;
        size_t s = lambda.size() - r;
        bool tail_ones = true;
        for (size_t i = r; i < lambda.size(); ++i)
            if (lambda[i] != 1) tail_ones = false;
        if (tail_ones && m > (int)s) return true;
        if (m == 1) return true;  // (1^(N)) -- the whole space
    }
    // (2^(r), 1^(s))
    {
        bool ok = true;
        for (int p : lambda)
            if (p != 1 && p != 2) ok = false;
        if (ok && lambda[0] == 2) return true;
    }
    // (2m, m^(s))
    {
        if (lambda[0] % 2 == 0) {
            int m = lambda[0] / 2;
            bool ok = m >= 1;
            for (size_t i = 1; i < lambda.size(); ++i)
                if (lambda[i] != m) ok = false;
            if (ok) return true;
        }
    }
    return false;
}

std::vector<ScanRow> conjecture_scan(int N_max, int D, std::uint64_t seed) {
    std::vector<ScanRow> table;
    for (int N = 1; N <= N_max; ++N)
        for (const Partition& lam : partitions_of(N)) {
            ScanRow row;
            row.lambda = lam;
            row.in_family = conjecture_classifier(lam);
            row.verdict = cm_test(lam, D, seed);
            table.push_back(row);
        }
    return table;
}

}  // namespace powersum
