// Acceptance harness: one pass/fail line per criterion, exact arithmetic
// throughout. Exit code is the number of failed criteria.
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "powersum/arrangements.hpp"
#include "powersum/conditions.hpp"
#include "powersum/families.hpp"
#include "powersum/genalg.hpp"
#include "powersum/symfun.hpp"

using namespace powersum;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& note = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", num, ok ? "PASS" : "FAIL", name.c_str(),
                note.empty() ? "" : "\n    ", note.c_str());
    if (!ok) ++failures;
}

template <typename F>
void guarded(int num, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(num, name, false, std::string("exception: ") + e.what());
    }
}

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rat small_rat(std::uint64_t& s) {
    long num = (long)(splitmix64(s) % 13) - 6;
    long den = (long)(splitmix64(s) % 6) + 1;
    return rat(num, den);
}

// --- criterion 1: type (1,1) triple-route agreement ------------------------

void c1() {
    FamilySpec spec{Type11{CQT{Rat(1), Rat(2), Rat(3)}}};
    auto gens_dims = graded_dimensions(family_generators(spec, 12), 12);
    auto route = condition_route(spec);
    GradedSeries closed = predicted_hilbert(spec, 12);
    bool ok = (bool)route;
    for (int d = 0; d <= 12 && ok; ++d) {
        long cond = solution_dimension(route->conds, route->sym, d);
        long want = d <= 1 ? 1 : d;
        ok = gens_dims[d] == want && cond == want && closed.coeff(d) == Rat(want);
    }
    report(1, "type (1,1) triple-route agreement, d <= 12", ok);
}

// --- criterion 2: type (1,1) refutation -------------------------------------

void c2() {
    std::vector<Rat> a;
    for (int i = 1; i <= 8; ++i) a.push_back(cqt_value(Rat(1), Rat(2), Rat(3), i));
    a[3] = Rat(1);
    CmReport rep = cm_diagnose(FamilySpec{Type11{ExplicitSeq{a}}}, 8);
    bool ok = !rep.verdict.consistent && rep.verdict.refuted_at == 4 &&
              rep.verdict.computed == Rat(5) && rep.verdict.expected == Rat(4);
    report(2, "type (1,1) refutation at degree 4 (computed 5 vs predicted 4)", ok);
}

// --- criterion 3: solve_cqt round-trip --------------------------------------

void c3() {
    auto sols = solve_cqt(rat(-1, 2), rat(-3, 8), rat(-7, 26));
    bool ok = sols.solutions.size() == 2 &&
              sols.solutions[0] == std::array<Rat, 3>{Rat(1), Rat(2), Rat(3)} &&
              sols.solutions[1] == std::array<Rat, 3>{rat(2, 3), rat(1, 2), rat(1, 3)};
    for (const auto& s : sols.solutions)
        for (int i = 1; i <= 3 && ok; ++i)
            ok = cqt_value(s[0], s[1], s[2], i) ==
                 (i == 1 ? rat(-1, 2) : i == 2 ? rat(-3, 8) : rat(-7, 26));
    std::uint64_t st = 42;
    int done = 0;
    while (done < 50 && ok) {
        Rat c = small_rat(st), q = small_rat(st), t = small_rat(st);
        if (c == 0 || q == 1 || t == 1 || t == -1 || t == 0 || q * t == 1 || q == t) continue;
        Rat a1 = cqt_value(c, q, t, 1), a2 = cqt_value(c, q, t, 2), a3 = cqt_value(c, q, t, 3);
        if (a1 == 0 || a2 == 0 || a3 == 0) continue;
        auto rt = solve_cqt(a1, a2, a3);
        bool found = false;
        for (const auto& s : rt.solutions)
            if (s == std::array<Rat, 3>{c, q, t}) found = true;
        ok = found;
        ++done;
    }
    report(3, "solve_cqt exact inverse + 50 seeded round-trips", ok);
}

// --- criterion 4: type (r,s) series ------------------------------------------

void c4() {
    bool ok = true;
    for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (FamilySpec spec : {FamilySpec{TypeRS{r, s, ClassicalSource{Rat(5)}}},
                                FamilySpec{TypeRS{r, s, QTSource{Rat(1), Rat(2), Rat(3)}}}}) {
            if (!admissible(spec, 12).ok) {
                ok = false;
                continue;
            }
            auto dims = graded_dimensions(family_generators(spec, 10), 10);
            GradedSeries h = hrs_series(r, s, 10);
            for (int d = 0; d <= 10 && ok; ++d) ok = Rat(dims[d]) == h.coeff(d);
        }
        if (!ok) break;
    }
    report(4, "type (r,s) dims equal h_{r,s}(u), both sources, d <= 10", ok);
}

// --- criterion 5: restriction kernel and difference formula -----------------

void c5() {
    FamilySpec big{TypeRS{2, 2, ClassicalSource{Rat(5)}}};
    GeneratorSet gens = family_generators(big, 10);
    auto kernel = restriction_kernel_dims(gens, merge_last_pair_images(1, 1), 10);
    GradedSeries pred = GradedSeries::power(1, 10, 8) * GradedSeries::inv_pochhammer(1, 10, 2) *
                        GradedSeries::inv_pochhammer(1, 10, 2);
    bool ok = true;
    for (int d = 0; d <= 7 && ok; ++d) ok = kernel[d] == 0;
    ok = ok && kernel[8] == 1;
    for (int d = 0; d <= 10 && ok; ++d) ok = Rat(kernel[d]) == pred.coeff(d);

    auto a_dims = graded_dimensions(
        family_generators(FamilySpec{Type1RS{1, 1, ClassicalSource{Rat(5)}}}, 10), 10);
    GradedSeries h22 = hrs_series(2, 2, 10);
    for (int d = 0; d <= 10 && ok; ++d) ok = Rat(a_dims[d]) == h22.coeff(d) - pred.coeff(d);
    report(5, "restriction kernel u^8/((u;u)_2)^2 and difference formula, d <= 10", ok);
}

// --- criterion 6: type (1,r,s) condition route -------------------------------

void c6() {
    bool ok = true;
    for (FamilySpec spec : {FamilySpec{Type1RS{1, 1, ClassicalSource{Rat(5)}}},
                            FamilySpec{Type1RS{1, 1, QTSource{Rat(1), Rat(2), Rat(3)}}}}) {
        auto dims = graded_dimensions(family_generators(spec, 10), 10);
        auto route = condition_route(spec);
        if (!route) {
            ok = false;
            break;
        }
        for (int d = 0; d <= 10 && ok; ++d)
            ok = solution_dimension(route->conds, route->sym, d) == dims[d];
    }
    report(6, "type (1,1,1) condition dims equal generator dims, d <= 10", ok);
}

// --- criterion 7: arrangements -----------------------------------------------

void c7() {
    bool ok = true;
    std::string note;
    auto h21 = hilbert_function({2, 1}, 6);
    std::vector<long> want21 = {1, 3, 6, 9, 12, 15, 18};
    for (int d = 0; d <= 6 && ok; ++d) ok = h21[d] == want21[d];
    for (Partition lam : {Partition{2, 1}, {2, 2}, {2, 1, 1}, {4, 2}})
        ok = ok && cm_test(lam, 10, 1).consistent;
    MergeKernelReport mk = merge_kernel_dims(1, 3, 5);
    std::vector<long> wantmk = {0, 0, 0, 1, 3, 6};
    ok = ok && mk.matches;
    for (int d = 0; d <= 5 && ok; ++d) ok = mk.dims[d] == wantmk[d];

    CmVerdict v32 = cm_test({3, 2}, 12, 1);
    bool refuted32 = !v32.consistent;
    if (!refuted32) {
        note =
            "cm_test((3,2)) is expected to refute but returns consistent through degree 12. "
            "Exact computation supports consistency: the Hilbert series of X_(3,2) is "
            "(1+3u+6u^2)/(1-u)^2, the quotient by two generic linear forms has dimensions "
            "1,3,6,0,... (verified through degree 20), and Koszul homology of five generic "
            "linear parameters gives Tor_1..Tor_5 dimensions 10,15,6,0,0 in degrees 3,4,5, "
            "so projective dimension 3 = 5 - 2 and depth = Krull dimension = 2. "
            "No honest exact test refutes this instance; this clause is reported red rather "
            "than weakened.";
    }
    report(7, "arrangements: hilbert/cm/merge-kernel oracles + (3,2) refutation",
           ok && refuted32, note);
}

// --- criterion 8: character engine --------------------------------------------

void c8() {
    bool ok = true;
    for (int n = 2; n <= 8 && ok; ++n) {
        auto parts = partitions_of(n);
        mpz_class nf = factorial(n);
        for (size_t i = 0; i < parts.size() && ok; ++i)
            for (size_t j = i; j < parts.size() && ok; ++j) {
                mpz_class acc = 0;
                for (const auto& mu : parts)
                    acc += (nf / zee(mu)) * mpz_class((long)character(parts[i], mu)) *
                           mpz_class((long)character(parts[j], mu));
                ok = acc == (i == j ? nf : mpz_class(0));
            }
    }
    for (int n = 2; n <= 8 && ok; ++n) {
        auto kp = kostka_pair(n);
        size_t sz = kp.order.size();
        for (size_t i = 0; i < sz && ok; ++i)
            for (size_t j = 0; j < sz && ok; ++j) {
                long long acc = 0;
                for (size_t k = 0; k < sz; ++k) acc += kp.K[i][k] * kp.Kinv[k][j];
                ok = acc == (i == j ? 1 : 0);
            }
    }
    // transpose sign rule: c^nu_{lambda;m} = (-1)^{(m-1) r} c^{nu'}_{lambda';m}
    for (int r = 1; r <= 3 && ok; ++r)
        for (int m = 1; m <= 3 && ok; ++m)
            for (const auto& lam : partitions_of(r)) {
                auto c = plethysm_c(lam, m);
                auto cT = plethysm_c(conjugate(lam), m);
                long long sign = ((m - 1) * r) % 2 == 0 ? 1 : -1;
                for (const auto& [nu, coeff] : c) {
                    auto it = cT.find(conjugate(nu));
                    if (it == cT.end() || it->second * sign != coeff) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
    // sum over lambda |- r of dim(lambda) chi_lambda(t) = (1-t)^{-r}
    for (int r = 1; r <= 5 && ok; ++r) {
        GradedSeries acc = GradedSeries::zero(1, 12);
        for (const auto& lam : partitions_of(r))
            acc += chi_series(lam, 1, 12) * Rat((long)dim_partition(lam));
        GradedSeries geo = GradedSeries::geometric(1, 12, 1);
        GradedSeries want = GradedSeries::one(1, 12);
        for (int i = 0; i < r; ++i) want = want * geo;
        ok = acc == want;
    }
    report(8, "characters: orthogonality, Kostka inverse, sign rule, chi identity", ok);
}

// --- criterion 9: appendix Hilbert series -------------------------------------

void c9() {
    bool ok = true;
    // (1 - t + t^2)/(1 - t)^2
    {
        GradedSeries h = hilbert_P(1, 1, 2, 8);
        GradedSeries geo = GradedSeries::geometric(1, 8, 1);
        GradedSeries closed = (GradedSeries::one(1, 8) - GradedSeries::power(1, 8, 1) +
                               GradedSeries::power(1, 8, 2)) *
                              geo * geo;
        for (int d = 0; d <= 8 && ok; ++d) ok = h.coeff(d) == closed.coeff(d);
        ok = ok && h.integral() && h.coeff(0) == Rat(1);
    }
    // (1 - t + t^3)/((1 - t)^2 (1 - t^2))
    {
        GradedSeries h = hilbert_P(1, 2, 3, 8);
        GradedSeries closed = (GradedSeries::one(1, 8) - GradedSeries::power(1, 8, 1) +
                               GradedSeries::power(1, 8, 3)) *
                              GradedSeries::geometric(1, 8, 1) * GradedSeries::geometric(1, 8, 1) *
                              GradedSeries::geometric(1, 8, 2);
        for (int d = 0; d <= 8 && ok; ++d) ok = h.coeff(d) == closed.coeff(d);
        ok = ok && h.integral() && h.coeff(0) == Rat(1);
    }
    for (auto [r, m] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        if (!ok) break;
        GradedSeries h1 = hilbert_P(r, 1, m, 8);
        GradedSeries h2 = hilbert_P_form2(r, m, 8);
        GradedSeries h3 = hilbert_P_form3(r, m, 8);
        for (int d = 0; d <= 8 && ok; ++d)
            ok = h1.coeff(d) == h2.coeff(d) && h2.coeff(d) == h3.coeff(d);
        ok = ok && h1.coeff(0) == Rat(1);
    }
    report(9, "appendix series: closed forms and three-form agreement, d <= 8", ok);
}

// --- criterion 10: appendix <-> conditions bridge ------------------------------

void c10() {
    GradedSeries h = hilbert_P(2, 1, 2, 8);
    auto route = condition_route(FamilySpec{MQuasi{2, 1, 2, false}});
    bool ok = (bool)route;
    for (int d = 0; d <= 8 && ok; ++d)
        ok = Rat(solution_dimension(route->conds, route->sym, d)) == h.coeff(d);
    report(10, "hilbert_P(2,1,2) equals condition-space dims, d <= 8", ok);
}

// --- criterion 11: Gorenstein numerators ---------------------------------------

void c11() {
    auto g1 = gorenstein_check(1, 2, 20);
    bool ok = g1.stabilized && g1.palindromic && g1.degree == 3 && g1.expected_degree == 3 &&
              g1.numerator.size() >= 4 && g1.numerator[0] == Rat(1) && g1.numerator[1] == Rat(0) &&
              g1.numerator[2] == Rat(0) && g1.numerator[3] == Rat(1);
    auto g2 = gorenstein_check(2, 2, 20);
    ok = ok && g2.stabilized && g2.palindromic && g2.degree == g2.expected_degree;
    report(11, "Gorenstein numerators: (1,2) = 1 + t^3, (2,2) palindromic in D = 20", ok);
}

// --- criterion 12: trigonometric degeneration ----------------------------------

void c12() {
    auto rat_route = condition_route(FamilySpec{MQuasi{2, 1, 2, false}});
    auto trig_route = condition_route(FamilySpec{MQuasi{2, 1, 2, true}});
    bool ok = rat_route && trig_route;
    long cumulative = 0;
    for (int d = 0; d <= 6 && ok; ++d) {
        cumulative += solution_dimension(rat_route->conds, rat_route->sym, d);
        ok = solution_dimension(trig_route->conds, trig_route->sym, d) == cumulative;
    }
    for (int m = 1; m <= 3 && ok; ++m) {
        std::vector<ConditionSpec> even = {A1EvenPoints{m}};
        Polynomial x = Polynomial::variable(1, 0);
        // a solution basis of the filtered space through degree 10: the even
        // powers, plus the minimal odd solution and its even multiples
        for (int k = 0; 2 * k <= 10 && ok; ++k) {
            Polynomial f = k == 0 ? Polynomial::constant(1, Rat(1))
                                  : Polynomial::variable(1, 0, 2 * k);
            ok = check_satisfies(f, even) && check_satisfies(a1_mr_apply(f, m), even);
        }
        // the minimal odd solution x prod (x^2 - j^2) and its even multiples
        Polynomial f = x;
        for (int j = 1; j <= m; ++j) f = f * (x * x - Polynomial::constant(1, Rat(j * j)));
        while (ok && f.degree() <= 10) {
            ok = check_satisfies(f, even) && check_satisfies(a1_mr_apply(f, m), even);
            f = f * x * x;
        }
    }
    report(12, "trigonometric filtration matches + MR operator preserves invariants", ok);
}

}  // namespace

int main() {
    guarded(1, "type (1,1) triple-route agreement, d <= 12", c1);
    guarded(2, "type (1,1) refutation at degree 4", c2);
    guarded(3, "solve_cqt round-trips", c3);
    guarded(4, "type (r,s) series", c4);
    guarded(5, "restriction kernel and difference formula", c5);
    guarded(6, "type (1,1,1) condition route", c6);
    guarded(7, "arrangements", c7);
    guarded(8, "character engine", c8);
    guarded(9, "appendix Hilbert series", c9);
    guarded(10, "appendix-conditions bridge", c10);
    guarded(11, "Gorenstein numerators", c11);
    guarded(12, "trigonometric degeneration", c12);
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures;
}
