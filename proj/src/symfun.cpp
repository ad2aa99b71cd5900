#include "powersum/symfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace powersum {

int partition_size(const Partition& p) {
    int n = 0;
    for (int x : p) n += x;
    return n;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) c[j]++;
    return c;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;  // descending lexicographic by construction
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class zee(const Partition& mu) {
    std::map<int, int> mult;
    for (int k : mu) mult[k]++;
    mpz_class z(1);
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
    }
    return z;
}

namespace {

/// Murnaghan-Nakayama on beta-numbers: remove a border strip of size k.
long long mn_character(std::vector<int> betas, std::vector<int> cycles, size_t ci,
                       std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    if (ci == cycles.size()) return 1;
    auto key = std::make_pair(betas, std::vector<int>(cycles.begin() + ci, cycles.end()));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int k = cycles[ci];
    long long total = 0;
    std::set<int> present(betas.begin(), betas.end());
    for (size_t i = 0; i < betas.size(); ++i) {
        int target = betas[i] - k;
        if (target < 0 || present.count(target)) continue;
        int crossings = 0;  // beta numbers strictly between target and betas[i]
        for (int b : betas)
            if (b > target && b < betas[i]) crossings++;
        std::vector<int> next = betas;
        next[i] = target;
        std::sort(next.begin(), next.end());
        long long sub = mn_character(std::move(next), cycles, ci + 1, memo);
        total += (crossings % 2 == 0 ? sub : -sub);
    }
    memo[key] = total;
    return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw std::invalid_argument("inputs must be partitions");
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("character arguments must partition the same n");
    int ell = (int)lambda.size();
    std::vector<int> betas(ell);
    for (int i = 0; i < ell; ++i) betas[i] = lambda[i] + (ell - 1 - i);
    std::sort(betas.begin(), betas.end());
    std::vector<int> cycles = mu;
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    return mn_character(std::move(betas), std::move(cycles), 0, memo);
}

long long dim_partition(const Partition& lambda) {
    Partition id(partition_size(lambda), 1);
    return character(lambda, id);
}

namespace {

bool is_horizontal_strip(const Partition& nu, const Partition& mu) {
    // mu subset nu, at most one box per column: nu_i >= mu_i >= nu_{i+1}
    for (size_t i = 0; i < nu.size(); ++i) {
        int mui = i < mu.size() ? mu[i] : 0;
        if (mui > nu[i]) return false;
        if (i + 1 < nu.size() && mui < nu[i + 1]) return false;
    }
    return true;
}

long long kostka_count(const Partition& mu, const Partition& lambda,
                       std::map<std::pair<Partition, Partition>, long long>& memo) {
    // SSYT of shape mu, content lambda: peel the cells holding the largest entry
    if (lambda.empty()) return mu.empty() ? 1 : 0;
    if (mu.empty()) return 0;
    auto key = std::make_pair(mu, lambda);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int last = lambda.back();
    Partition rest(lambda.begin(), lambda.end() - 1);
    long long total = 0;
    // enumerate mu' with mu/mu' a horizontal strip of size last
    Partition sub;
    auto rec = [&](auto&& self, size_t row, int removed) -> void {
        if (row == mu.size()) {
            if (removed == last) {
                Partition trimmed = sub;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                total += kostka_count(trimmed, rest, memo);
            }
            return;
        }
        int lo = row + 1 < mu.size() ? mu[row + 1] : 0;
        int hi = row == 0 ? mu[0] : std::min(mu[row], sub[row - 1]);
        for (int v = hi; v >= lo; --v) {
            int rm = mu[row] - v;
            if (removed + rm > last) continue;
            sub.push_back(v);
            self(self, row + 1, removed + rm);
            sub.pop_back();
        }
    };
    rec(rec, 0, 0);
    memo[key] = total;
    return total;
}

}  // namespace

KostkaPair kostka_pair(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    KostkaPair kp;
    kp.order = partitions_of(n);
    size_t N = kp.order.size();
    kp.K.assign(N, std::vector<long long>(N, 0));
    std::map<std::pair<Partition, Partition>, long long> memo;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            kp.K[i][j] = kostka_count(kp.order[i], kp.order[j], memo);

    // K is unitriangular in the descending-lex order (K[i][j] != 0 => i <= j)
    kp.Kinv.assign(N, std::vector<long long>(N, 0));
    for (size_t j = 0; j < N; ++j) {
        for (size_t i = j + 1; i-- > 0;) {
            long long v = (i == j) ? 1 : 0;
            for (size_t k = i + 1; k <= j; ++k) v -= kp.K[i][k] * kp.Kinv[k][j];
            kp.Kinv[i][j] = v;  // K[i][i] == 1
        }
    }
    return kp;
}

PlethysmExpansion plethysm_c(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    int r = partition_size(lambda);
    PlethysmExpansion out;
    auto mus = partitions_of(r);
    auto nus = partitions_of(m * r);
    for (const auto& nu : nus) {
        Rat acc(0);
        for (const auto& mu : mus) {
            Partition mmu;
            for (int part : mu) mmu.push_back(m * part);
            std::sort(mmu.begin(), mmu.end(), std::greater<int>());
            Rat term((long)character(lambda, mu));
            term *= (long)character(nu, mmu);
            Rat z(zee(mu));
            acc += term / z;
        }
        if (!is_integer(acc))
            throw std::domain_error("non-integral plethysm coefficient (character table bug)");
        long v = rat_to_long(acc);
        if (v != 0) out[nu] = v;
    }
    return out;
}

std::vector<Partition> pieri(const Partition& mu, int s) {
    if (s < 0) throw std::invalid_argument("strip size must be >= 0");
    std::vector<Partition> out;
    // nu_1 >= mu_1 >= nu_2 >= mu_2 >= ..., |nu| = |mu| + s
    size_t rows = mu.size() + 1;
    Partition nu;
    auto rec = [&](auto&& self, size_t row, int added) -> void {
        if (row == rows) {
            if (added == s) {
                Partition v = nu;
                while (!v.empty() && v.back() == 0) v.pop_back();
                out.push_back(v);
            }
            return;
        }
        int mui = row < mu.size() ? mu[row] : 0;
        int lo = mui;
        int hi;
        if (row == 0) hi = mui + s;
        else hi = std::min(row - 1 < mu.size() ? mu[row - 1] : 0, mui + (s - added));
        for (int v = hi; v >= lo; --v) {
            int add = v - mui;
            if (added + add > s) continue;
            nu.push_back(v);
            self(self, row + 1, added + add);
            nu.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

PlethysmExpansion b_coeffs(const Partition& lambda, int s, int m) {
    PlethysmExpansion c = plethysm_c(lambda, m);
    PlethysmExpansion b;
    for (const auto& [mu, coeff] : c)
        for (const auto& nu : pieri(mu, s)) {
            b[nu] += coeff;
            if (b[nu] == 0) b.erase(nu);
        }
    return b;
}

long kappa(const Partition& nu) {
    long k = 0;
    for (size_t i = 0; i < nu.size(); ++i)
        for (int j = 1; j <= nu[i]; ++j) k += j - (long)(i + 1);
    return k;
}

GradedSeries chi_series(const Partition& nu, long lattice, long trunc_num) {
    Partition conj = conjugate(nu);
    long legsum = 0;
    GradedSeries s = GradedSeries::one(lattice, trunc_num);
    for (size_t i = 0; i < nu.size(); ++i) {
        for (int j = 1; j <= nu[i]; ++j) {
            int leg = conj[j - 1] - (int)(i + 1);
            int arm = nu[i] - j;
            int hook = arm + leg + 1;
            legsum += leg;
            s = s * GradedSeries::geometric(lattice, trunc_num, hook);
        }
    }
    return s.shifted(legsum * lattice);
}

std::vector<Partition> add_box_candidates(const Partition& nu, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::vector<Partition> out;
    for (size_t i = 0; i <= nu.size(); ++i) {
        int row = (int)i;
        int cur = i < nu.size() ? nu[i] : 0;
        int above = i == 0 ? -1 : nu[i - 1];
        if (i > 0 && cur >= above) continue;  // not addable
        long content = (long)cur - row;       // new box at (row, cur), 0-based
        if (content % m != 0) continue;
        Partition v = nu;
        if (i < v.size()) v[i]++;
        else v.push_back(1);
        out.push_back(v);
    }
    return out;
}

namespace {

GradedSeries finalize_quasi_series(GradedSeries s, long lattice) {
    for (const auto& [key, c] : s.raw()) {
        if (key % lattice != 0)
            throw FractionalResidue("fractional exponent " + std::to_string(key) + "/" +
                                    std::to_string(lattice) + " survived summation");
        if (!is_integer(c) || c < 0)
            throw std::domain_error("non-integral or negative series coefficient");
    }
    if (s.coeff(0) != 1) throw std::domain_error("constant term is not 1");
    return s;
}

}  // namespace

GradedSeries hilbert_P(int r, int s, int m, long D) {
    if (r < 1 || s < 1 || m < 1) throw std::invalid_argument("r, s, m must be >= 1");
    if (m <= s) throw std::invalid_argument("hilbert_P requires m > s");
    int n = m * r + s;
    long lattice = 2L * m;
    long tmax = D * lattice;
    GradedSeries acc(lattice, tmax);
    for (const auto& lambda : partitions_of(r)) {
        long long dim = dim_partition(lambda);
        PlethysmExpansion b = b_coeffs(lambda, s, m);
        for (const auto& [nu, coeff] : b) {
            long shift = (long)n * (n - 1) - 2 * kappa(nu);  // key on the 1/(2m) lattice
            if (shift < 0) throw std::logic_error("negative exponent shift");
            GradedSeries term = chi_series(nu, lattice, tmax).shifted(shift);
            acc += term * Rat((long)(dim * coeff));
        }
    }
    return finalize_quasi_series(std::move(acc), lattice);
}

GradedSeries hilbert_P_form2(int r, int m, long D) {
    if (r < 1 || m < 2) throw std::invalid_argument("form2 requires r >= 1, m >= 2");
    int n = m * r + 1;
    long lattice = 2L * m;
    long tmax = D * lattice;
    GradedSeries acc(lattice, tmax);
    for (const auto& lambda : partitions_of(r)) {
        long long dim = dim_partition(lambda);
        PlethysmExpansion c = plethysm_c(lambda, m);
        for (const auto& [nu, coeff] : c) {
            for (const auto& nuhat : add_box_candidates(nu, m)) {
                long shift = (long)r * n * m - 2 * kappa(nuhat);  // (rn/2 - kappa/m) * 2m
                if (shift < 0) throw std::logic_error("negative exponent shift");
                GradedSeries term = chi_series(nuhat, lattice, tmax).shifted(shift);
                acc += term * Rat((long)(dim * coeff));
            }
        }
    }
    return finalize_quasi_series(std::move(acc), lattice);
}

GradedSeries hilbert_P_form3(int r, int m, long D) {
    if (r < 1 || m < 2) throw std::invalid_argument("form3 requires r >= 1, m >= 2");
    int n = m * r + 1;
    long lattice = 2L * m;
    long tmax = D * lattice;
    KostkaPair kp = kostka_pair(m * r);
    std::map<Partition, size_t> pos;
    for (size_t i = 0; i < kp.order.size(); ++i) pos[kp.order[i]] = i;

    GradedSeries acc(lattice, tmax);
    for (const auto& alpha : partitions_of(r)) {
        // weight r!/alpha!
        mpz_class w = factorial(r);
        for (int part : alpha) w /= factorial(part);
        Partition malpha;
        for (int part : alpha) malpha.push_back(m * part);
        size_t row = pos.at(malpha);
        for (size_t j = 0; j < kp.order.size(); ++j) {
            long long kinv = kp.Kinv[row][j];
            if (kinv == 0) continue;
            const Partition& nu = kp.order[j];
            for (const auto& nuhat : add_box_candidates(nu, m)) {
                long shift = (long)r * n * m - 2 * kappa(nuhat);
                GradedSeries term = chi_series(nuhat, lattice, tmax).shifted(shift);
                acc += term * Rat(mpz_class(w * (long)kinv));
            }
        }
    }
    return finalize_quasi_series(std::move(acc), lattice);
}

GorensteinReport gorenstein_check(int r, int m, long D) {
    if (m < 2) throw std::invalid_argument("gorenstein_check requires m >= 2");
    GradedSeries P = hilbert_P(r, 1, m, D);
    GradedSeries N(1, D);
    for (long d = 0; d <= D; ++d) N.set_key(d, P.coeff(d));
    for (int i = 1; i <= r + 1; ++i) N = N * GradedSeries::one_minus_power(1, D, i);

    GorensteinReport rep;
    rep.numerator.reserve(D + 1);
    for (long d = 0; d <= D; ++d) rep.numerator.push_back(N.coeff(d));

    long tail = std::max((long)r + 1, 3L);
    rep.stabilized = true;
    for (long d = D - tail + 1; d <= D; ++d)
        if (rep.numerator[d] != 0) rep.stabilized = false;
    if (!rep.stabilized)
        throw std::runtime_error("numerator did not stabilize within the window; raise D");

    long deg = -1;
    for (long d = 0; d <= D; ++d)
        if (rep.numerator[d] != 0) deg = d;
    rep.degree = deg;
    int n = m * r + 1;
    rep.expected_degree = (long)(r + 1) * (r + 2) / 2 + (long)n * (r - 1);

    rep.palindromic = deg >= 0;
    for (long d = 0; d <= deg; ++d)
        if (rep.numerator[d] != rep.numerator[deg - d]) rep.palindromic = false;
    return rep;
}

}  // namespace powersum
