#include "powersum/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "powersum/symfun.hpp"

namespace powersum {

Rat cqt_value(const Rat& c, const Rat& q, const Rat& t, int i) {
    Rat ti = rat_pow(t, i);
    if (ti == 1) throw std::domain_error("t^i = 1: pole in the (c,q,t) formula");
    return rat_pow(c, i) * (rat_pow(q, i) - 1) / (Rat(1) - ti);
}

namespace {

bool is_root_of_unity(const Rat& x, int depth) {
    if (x == 0) return false;
    Rat p(1);
    for (int k = 1; k <= depth; ++k) {
        p *= x;
        if (p == 1) return true;
    }
    return false;
}

/// q^m = t^{+-n} for 1 <= m <= mmax, 1 <= n <= nmax.
bool small_multiplicative_relation(const Rat& q, const Rat& t, int mmax, int nmax) {
    for (int m = 1; m <= mmax; ++m) {
        Rat qm = rat_pow(q, m);
        for (int n = 1; n <= nmax; ++n) {
            Rat tn = rat_pow(t, n);
            if (qm == tn) return true;
            if (tn != 0 && qm == Rat(1) / tn) return true;
        }
    }
    return false;
}

Admissibility fail(const std::string& rule) { return Admissibility{false, rule}; }

Admissibility screen_qt(const Rat& q, const Rat& t, int r, int s, int depth) {
    if (q == 0 || t == 0) return fail("q and t must be nonzero");
    if (is_root_of_unity(q, depth)) return fail("q is a root of unity of order <= depth");
    if (is_root_of_unity(t, depth)) return fail("t is a root of unity of order <= depth");
    if (q == t) return fail("q = t");
    if (q * t == 1) return fail("qt = 1");
    if (small_multiplicative_relation(q, t, r + 1, s + 1))
        return fail("q^m = t^{+-n} for small m, n");
    return {};
}

Admissibility screen_classical(const Rat& a, int r, int s) {
    if (a == 0) return fail("a must be nonzero");
    for (int m = 1; m <= r; ++m)
        for (int n = 1; n <= s; ++n)
            if (a * m == Rat(-n)) return fail("a = -n/m for small m, n");
    return {};
}

std::vector<Rat> a_sequence(const Type11& spec, int D) {
    std::vector<Rat> a;
    a.reserve(D);
    if (const auto* e = std::get_if<ExplicitSeq>(&spec.source)) {
        if ((int)e->a.size() < D)
            throw std::invalid_argument("explicit sequence shorter than the degree bound");
        a.assign(e->a.begin(), e->a.begin() + D);
    } else if (const auto* c = std::get_if<CQT>(&spec.source)) {
        for (int i = 1; i <= D; ++i) a.push_back(cqt_value(c->c, c->q, c->t, i));
    } else {
        const auto& v = std::get<ConstA>(spec.source);
        for (int i = 1; i <= D; ++i) a.push_back(rat_pow(v.c, i) * v.a);
    }
    return a;
}

Polynomial power_sum_block(int nvars, int first, int count, int i, const Rat& coeff) {
    Polynomial p(nvars);
    for (int j = 0; j < count; ++j) p += Polynomial::variable(nvars, first + j, i) * coeff;
    return p;
}

}  // namespace

Admissibility admissible(const FamilySpec& spec, int depth) {
    if (const auto* t11 = std::get_if<Type11>(&spec)) {
        std::vector<Rat> a;
        try {
            a = a_sequence(*t11, std::max(3, std::min(depth, 3)));
        } catch (const std::exception& e) {
            return fail(e.what());
        }
        if (const auto* c = std::get_if<CQT>(&t11->source)) {
            if (c->c == 0) return fail("c must be nonzero");
            auto v = screen_qt(c->q, c->t, 1, 1, depth);
            if (!v.ok) return v;
        }
        if (const auto* v = std::get_if<ConstA>(&t11->source)) {
            if (v->c == 0) return fail("c must be nonzero");
            if (v->a == 0) return fail("a must be nonzero");
            if (v->a == 1 || v->a == -1) return fail("a = +-1");
        }
        for (const auto& ai : a)
            if (ai == 0) return fail("a_i must be nonzero");
        if (a[1] == -a[0] * a[0]) return fail("a2 = -a1^2");
        if (a[1] == a[0] * a[0] && a[2] == a[0] * a[0] * a[0])
            return fail("(a2, a3) = (a1^2, a1^3)");
        return {};
    }
    if (const auto* rs = std::get_if<TypeRS>(&spec)) {
        if (rs->r < 1 || rs->s < 1) return fail("r, s must be >= 1");
        if (const auto* cl = std::get_if<ClassicalSource>(&rs->source)) {
            auto v = screen_classical(cl->a, rs->r, rs->s);
            if (!v.ok) return v;
            if (rs->r == 1 && rs->s == 1 && (cl->a == 1 || cl->a == -1)) return fail("a = +-1");
            return {};
        }
        const auto& qt = std::get<QTSource>(rs->source);
        if (qt.c == 0) return fail("c must be nonzero");
        return screen_qt(qt.q, qt.t, rs->r, rs->s, depth);
    }
    if (const auto* t1 = std::get_if<Type1RS>(&spec)) {
        if (t1->r < 1 || t1->s < 1) return fail("r, s must be >= 1");
        if (const auto* cl = std::get_if<ClassicalSource>(&t1->source)) {
            // screened through the lift to type (r+1, s+1)
            return screen_classical(cl->a, t1->r + 1, t1->s + 1);
        }
        const auto& qt = std::get<QTSource>(t1->source);
        if (qt.c != 1) return fail("type (1,r,s) q,t sources are normalized to c = 1");
        return screen_qt(qt.q, qt.t, t1->r, t1->s, depth);
    }
    const auto& mq = std::get<MQuasi>(spec);
    if (mq.r < 1 || mq.s < 1) return fail("r, s must be >= 1");
    if (mq.m <= mq.s) return fail("m-quasi-invariants require m > s");
    return {};
}

GeneratorSet family_generators(const FamilySpec& spec, int D) {
    auto adm = admissible(spec, D);
    if (!adm.ok) throw std::invalid_argument("inadmissible family: " + adm.violated);
    if (D < 1) throw std::invalid_argument("degree bound must be >= 1");

    GeneratorSet out;
    if (const auto* t11 = std::get_if<Type11>(&spec)) {
        auto a = a_sequence(*t11, D);
        out.nvars = 2;
        for (int i = 1; i <= D; ++i) {
            Polynomial q = Polynomial::variable(2, 0, i) * a[i - 1] + Polynomial::variable(2, 1, i);
            out.gens.push_back(q);
        }
    } else if (const auto* rs = std::get_if<TypeRS>(&spec)) {
        int n = rs->r + rs->s;
        out.nvars = n;
        for (int i = 1; i <= D; ++i) {
            Rat ai = std::holds_alternative<ClassicalSource>(rs->source)
                         ? std::get<ClassicalSource>(rs->source).a
                         : cqt_value(std::get<QTSource>(rs->source).c,
                                     std::get<QTSource>(rs->source).q,
                                     std::get<QTSource>(rs->source).t, i);
            Polynomial q = power_sum_block(n, 0, rs->r, i, ai) +
                           power_sum_block(n, rs->r, rs->s, i, Rat(1));
            out.gens.push_back(q);
        }
    } else if (const auto* t1 = std::get_if<Type1RS>(&spec)) {
        int n = 1 + t1->r + t1->s;
        out.nvars = n;
        for (int i = 1; i <= D; ++i) {
            Rat xc, yc;
            if (const auto* cl = std::get_if<ClassicalSource>(&t1->source)) {
                xc = cl->a + 1;
                yc = cl->a;
            } else {
                const auto& qt = std::get<QTSource>(t1->source);
                Rat ti = rat_pow(qt.t, i);
                xc = (rat_pow(qt.q, i) - ti) / (Rat(1) - ti);
                yc = (rat_pow(qt.q, i) - 1) / (Rat(1) - ti);
            }
            Polynomial p = Polynomial::variable(n, 0, i) * xc +
                           power_sum_block(n, 1, t1->r, i, yc) +
                           power_sum_block(n, 1 + t1->r, t1->s, i, Rat(1));
            out.gens.push_back(p);
        }
    } else {
        throw std::invalid_argument(
            "m-quasi-invariant algebras are defined by conditions, not generators");
    }
    out.validate();
    return out;
}

GradedSeries hrs_series(int r, int s, long D) {
    GradedSeries acc(1, D);
    for (int i = 0; i <= s; ++i) {
        GradedSeries term = GradedSeries::power(1, D, (long)i * (r + 1));
        term = term * GradedSeries::inv_pochhammer(1, D, i);
        acc += term;
    }
    return acc * GradedSeries::inv_pochhammer(1, D, r);
}

GradedSeries predicted_hilbert(const FamilySpec& spec, long D) {
    auto adm = admissible(spec, (int)D);
    if (!adm.ok) throw std::invalid_argument("inadmissible family: " + adm.violated);

    if (std::holds_alternative<Type11>(spec)) {
        // (1 + u^3)/((1 - u)(1 - u^2))
        GradedSeries num = GradedSeries::one(1, D) + GradedSeries::power(1, D, 3);
        return num * GradedSeries::inv_pochhammer(1, D, 2);
    }
    if (const auto* rs = std::get_if<TypeRS>(&spec)) return hrs_series(rs->r, rs->s, D);
    if (const auto* t1 = std::get_if<Type1RS>(&spec)) {
        int R = t1->r + 1, S = t1->s + 1;
        GradedSeries h = hrs_series(R, S, D);
        GradedSeries corr = GradedSeries::power(1, D, 2L * R * S) *
                            GradedSeries::inv_pochhammer(1, D, R) *
                            GradedSeries::inv_pochhammer(1, D, S);
        return h - corr;
    }
    const auto& mq = std::get<MQuasi>(spec);
    return hilbert_P(mq.r, mq.s, mq.m, D);
}

std::optional<ConditionRoute> condition_route(const FamilySpec& spec) {
    if (const auto* t11 = std::get_if<Type11>(&spec)) {
        if (const auto* c = std::get_if<CQT>(&t11->source))
            return ConditionRoute{{MultiplicativeLine{c->q, c->t}}, SymmetrySpec::none()};
        if (const auto* v = std::get_if<ConstA>(&t11->source))
            return ConditionRoute{{InfinitesimalLine{v->a}}, SymmetrySpec::none()};
        const auto& e = std::get<ExplicitSeq>(t11->source);
        if (e.a.size() >= 3) {
            auto sol = solve_cqt(e.a[0], e.a[1], e.a[2]);
            if (!sol.solutions.empty())
                return ConditionRoute{{MultiplicativeLine{sol.solutions[0][1], sol.solutions[0][2]}},
                                      SymmetrySpec::none()};
            // constant pattern a_i = c^i a
            if (e.a[0] != 0 && e.a[1] != 0 && e.a[1] * e.a[1] == e.a[0] * e.a[2]) {
                Rat c = e.a[1] / e.a[0];
                if (c != 0) return ConditionRoute{{InfinitesimalLine{e.a[0] * e.a[0] / e.a[1]}},
                                                  SymmetrySpec::none()};
            }
        }
        return std::nullopt;
    }
    if (const auto* rs = std::get_if<TypeRS>(&spec)) {
        SymmetrySpec sym = SymmetrySpec::full_rs(rs->r, rs->s);
        if (const auto* cl = std::get_if<ClassicalSource>(&rs->source))
            return ConditionRoute{{ClassicalHyperplane{cl->a, rs->r, rs->s}}, sym};
        const auto& qt = std::get<QTSource>(rs->source);
        return ConditionRoute{{QTHyperplane{qt.q, qt.t, rs->r, rs->s}}, sym};
    }
    if (const auto* t1 = std::get_if<Type1RS>(&spec)) {
        SymmetrySpec sym = SymmetrySpec::full_rs(t1->r, t1->s, 1);
        if (const auto* cl = std::get_if<ClassicalSource>(&t1->source))
            return ConditionRoute{{Type1RS_Classical{cl->a, t1->r, t1->s}}, sym};
        const auto& qt = std::get<QTSource>(t1->source);
        return ConditionRoute{{Type1RS_QT{qt.q, qt.t, t1->r, t1->s}}, sym};
    }
    const auto& mq = std::get<MQuasi>(spec);
    SymmetrySpec sym = SymmetrySpec::z_only(mq.r, mq.s);
    if (mq.trig)
        return ConditionRoute{{ConditionSpec{TrigShiftHyperplane{mq.m, mq.r, mq.s}},
                               ConditionSpec{TrigSwapDivisibility{mq.m, mq.r, mq.s}}},
                              sym};
    return ConditionRoute{{ConditionSpec{ClassicalHyperplane{Rat(mq.m), mq.r, mq.s}},
                           ConditionSpec{SwapDivisibility{mq.m, mq.r, mq.s}}},
                          sym};
}

CqtSolutions solve_cqt(const Rat& a1, const Rat& a2, const Rat& a3) {
    if (a1 == 0 || a2 == 0 || a3 == 0)
        throw std::invalid_argument("solve_cqt needs nonzero inputs");
    CqtSolutions out;

    // Normalize out c: b_i = a_i / a1^i. The two defining identities reduce to
    //   q [b2(1+t) - (1-t)] = b2(1+t) + (1-t)
    //   4 b3 (1 + t + t^2) = 3 b2^2 (1+t)^2 + (1-t)^2,
    // a quadratic A t^2 + B t + A whose roots pair as t <-> 1/t.
    Rat b2 = a2 / (a1 * a1);
    Rat b3 = a3 / (a1 * a1 * a1);
    Rat A = Rat(3) * b2 * b2 + 1 - Rat(4) * b3;
    Rat B = Rat(6) * b2 * b2 - 2 - Rat(4) * b3;

    std::vector<Rat> roots;
    if (A == 0 && B == 0) {
        out.possibly_irrational_or_degenerate = true;  // identically satisfied
    } else if (A == 0) {
        roots.push_back(Rat(0));
    } else {
        Rat disc = B * B - Rat(4) * A * A;
        auto sq = rat_sqrt(disc);
        if (!sq) {
            out.possibly_irrational_or_degenerate = true;
        } else {
            roots.push_back((-B + *sq) / (Rat(2) * A));
            roots.push_back((-B - *sq) / (Rat(2) * A));
            if (roots[0] == roots[1]) roots.pop_back();
        }
    }

    for (const Rat& t : roots) {
        if (t == 1) continue;  // pole
        Rat den = b2 * (1 + t) - (Rat(1) - t);
        if (den == 0) continue;
        Rat q = (b2 * (1 + t) + (Rat(1) - t)) / den;
        if (q == 1) continue;  // c pole
        Rat c = a1 * (Rat(1) - t) / (q - 1);
        // exact forward verification for i = 1, 2, 3
        bool ok = true;
        const Rat as[3] = {a1, a2, a3};
        for (int i = 1; i <= 3 && ok; ++i) {
            try {
                ok = (cqt_value(c, q, t, i) == as[i - 1]);
            } catch (const std::domain_error&) {
                ok = false;
            }
        }
        if (ok) out.solutions.push_back({c, q, t});
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const auto& x, const auto& y) { return x[2] > y[2]; });
    return out;
}

CmReport cm_diagnose(const FamilySpec& spec, int D) {
    auto adm = admissible(spec, D);
    if (!adm.ok) throw std::invalid_argument("inadmissible family: " + adm.violated);

    CmReport rep;
    GradedSeries pred = predicted_hilbert(spec, D);
    rep.predicted.reserve(D + 1);
    for (int d = 0; d <= D; ++d) rep.predicted.push_back(pred.coeff(d));

    auto route = condition_route(spec);

    if (const auto* mq = std::get_if<MQuasi>(&spec)) {
        // condition-defined algebra: the condition route is the computation
        GradedDims dims;
        for (int d = 0; d <= D; ++d)
            dims.push_back(solution_dimension(route->conds, route->sym, d));
        if (mq->trig) {
            // filtered dims against cumulative graded prediction
            rep.condition_dims = dims;
            Rat cum(0);
            rep.computed = dims;
            for (int d = 0; d <= D; ++d) {
                cum += rep.predicted[d];
                rep.predicted[d] = cum;
            }
        } else {
            rep.computed = dims;
            rep.condition_dims = dims;
        }
        rep.verdict.consistent = true;
        rep.verdict.window = D;
        for (int d = 0; d <= D; ++d) {
            if (Rat(rep.computed[d]) != rep.predicted[d]) {
                rep.first_deviation = d;
                rep.verdict.consistent = false;
                rep.verdict.refuted_at = d;
                rep.verdict.expected = rep.predicted[d];
                rep.verdict.computed = Rat(rep.computed[d]);
                break;
            }
        }
        return rep;
    }

    GeneratorSet gens = family_generators(spec, D);
    rep.computed = graded_dimensions(gens, D);

    // parameter subalgebra: the first (#variables) generators
    int k = gens.nvars;
    std::vector<Polynomial> params(gens.gens.begin(), gens.gens.begin() + std::min<size_t>(k, gens.gens.size()));
    rep.quotient_dims = quotient_by_ideal_dims(gens, params, D);
    std::vector<int> pdeg;
    for (const auto& p : params) pdeg.push_back(p.degree());
    rep.verdict = freeness_test(rep.computed, rep.quotient_dims, pdeg, D);

    for (int d = 0; d <= D; ++d) {
        if (Rat(rep.computed[d]) != rep.predicted[d]) {
            rep.first_deviation = d;
            break;
        }
    }
    // fold a predicted-series mismatch into the verdict when it comes first
    if (rep.first_deviation >= 0 &&
        (rep.verdict.consistent || rep.first_deviation <= rep.verdict.refuted_at)) {
        rep.verdict.consistent = false;
        rep.verdict.refuted_at = rep.first_deviation;
        rep.verdict.expected = rep.predicted[rep.first_deviation];
        rep.verdict.computed = Rat(rep.computed[rep.first_deviation]);
    }

    if (route) {
        for (int d = 0; d <= D; ++d)
            rep.condition_dims.push_back(solution_dimension(route->conds, route->sym, d));
    }
    return rep;
}

Polynomial d_polynomial(int r, int s) { return d_polynomial_b(r, s, Rat(1)); }

Polynomial d_polynomial_b(int r, int s, const Rat& b) {
    if (r < 0 || s < 0) throw std::invalid_argument("r, s must be >= 0");
    int R = r + 1, S = s + 1, n = R + S;
    Polynomial p = Polynomial::constant(n, Rat(1));
    for (int j = 0; j < R; ++j) {
        for (int l = 0; l < S; ++l) {
            Polynomial y = Polynomial::variable(n, j);
            Polynomial z = Polynomial::variable(n, R + l);
            p = p * (y - z) * (y - z * b);
        }
    }
    return p;
}

std::vector<Polynomial> merge_last_pair_images(int r, int s) {
    int R = r + 1, S = s + 1;
    int nt = 1 + r + s;
    std::vector<Polynomial> images;
    images.reserve(R + S);
    for (int j = 0; j < R; ++j)
        images.push_back(Polynomial::variable(nt, j < r ? 1 + j : 0));
    for (int l = 0; l < S; ++l)
        images.push_back(Polynomial::variable(nt, l < s ? 1 + r + l : 0));
    return images;
}

GeneratorSet restrict_to_type1rs(const TypeRS& spec, int D) {
    if (spec.r < 2 || spec.s < 2)
        throw std::invalid_argument("restriction needs a type (r+1, s+1) source with r, s >= 2");
    GeneratorSet src = family_generators(FamilySpec{spec}, D);
    auto images = merge_last_pair_images(spec.r - 1, spec.s - 1);
    GeneratorSet out;
    out.nvars = 1 + (spec.r - 1) + (spec.s - 1);
    for (const auto& g : src.gens) out.gens.push_back(g.substitute(images));
    out.validate();
    return out;
}

}  // namespace powersum
