#include "powersum/conditions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "powersum/echelon.hpp"

namespace powersum {

SymmetrySpec SymmetrySpec::full_rs(int r, int s, int offset) {
    SymmetrySpec sym;
    if (r > 1) sym.blocks.push_back({offset, r});
    if (s > 1) sym.blocks.push_back({offset + r, s});
    return sym;
}

SymmetrySpec SymmetrySpec::z_only(int r, int s, int offset) {
    SymmetrySpec sym;
    if (s > 1) sym.blocks.push_back({offset + r, s});
    return sym;
}

int condition_nvars(const ConditionSpec& c) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MultiplicativeLine> ||
                          std::is_same_v<T, InfinitesimalLine>)
                return 2;
            else if constexpr (std::is_same_v<T, A1EvenPoints>)
                return 1;
            else if constexpr (std::is_same_v<T, Type1RS_QT> ||
                               std::is_same_v<T, Type1RS_Classical>)
                return 1 + v.r + v.s;
            else
                return v.r + v.s;
        },
        c);
}

bool condition_is_filtered(const ConditionSpec& c) {
    return std::holds_alternative<TrigShiftHyperplane>(c) ||
           std::holds_alternative<TrigSwapDivisibility>(c) ||
           std::holds_alternative<A1EvenPoints>(c);
}

void validate_condition(const ConditionSpec& c) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MultiplicativeLine>) {
                if (v.q == 0 || v.t == 0) throw std::invalid_argument("q, t must be nonzero");
            } else if constexpr (std::is_same_v<T, QTHyperplane> || std::is_same_v<T, Type1RS_QT>) {
                if (v.q == 0 || v.t == 0) throw std::invalid_argument("q, t must be nonzero");
                if (v.r < 1 || v.s < 1) throw std::invalid_argument("r, s must be >= 1");
            } else if constexpr (std::is_same_v<T, ClassicalHyperplane> ||
                                 std::is_same_v<T, Type1RS_Classical>) {
                if (v.r < 1 || v.s < 1) throw std::invalid_argument("r, s must be >= 1");
            } else if constexpr (std::is_same_v<T, SwapDivisibility> ||
                                 std::is_same_v<T, TrigShiftHyperplane> ||
                                 std::is_same_v<T, TrigSwapDivisibility>) {
                if (v.m < 1) throw std::invalid_argument("m must be >= 1");
                if (v.r < 1 || v.s < 0) throw std::invalid_argument("bad block sizes");
            } else if constexpr (std::is_same_v<T, A1EvenPoints>) {
                if (v.m < 1) throw std::invalid_argument("m must be >= 1");
            }
        },
        c);
}

namespace {

// layout helpers for (y_1..y_r, z_1..z_s) and (x, y_1..y_r, z_1..z_s)
int yvar(int j, int /*r*/) { return j; }
int zvar(int l, int r) { return r + l; }

Polynomial scaled_var(int n, int i, const Rat& c) {
    return Polynomial::variable(n, i) * c;
}

std::vector<Polynomial> residuals_multiplicative(const MultiplicativeLine& c, const Polynomial& f) {
    // target: one variable x
    std::vector<Polynomial> lhs = {scaled_var(1, 0, c.t), scaled_var(1, 0, c.q)};
    std::vector<Polynomial> rhs = {Polynomial::variable(1, 0), Polynomial::variable(1, 0)};
    return {f.substitute(lhs) - f.substitute(rhs)};
}

std::vector<Polynomial> residuals_infinitesimal(const InfinitesimalLine& c, const Polynomial& f) {
    Polynomial g = f.derivative(1) * c.a - f.derivative(0);
    std::vector<Polynomial> diag = {Polynomial::variable(1, 0), Polynomial::variable(1, 0)};
    return {g.substitute(diag)};
}

std::vector<Polynomial> residuals_qt_hyperplane(const QTHyperplane& c, const Polynomial& f) {
    int n = c.r + c.s;
    std::vector<Polynomial> out;
    for (int j = 0; j < c.r; ++j) {
        for (int l = 0; l < c.s; ++l) {
            auto scal = identity_images(n);
            scal[yvar(j, c.r)] = scaled_var(n, yvar(j, c.r), c.t);
            scal[zvar(l, c.r)] = scaled_var(n, zvar(l, c.r), c.q);
            Polynomial g = f.substitute(scal) - f;
            auto diag = identity_images(n);
            diag[zvar(l, c.r)] = Polynomial::variable(n, yvar(j, c.r));
            out.push_back(g.substitute(diag));
        }
    }
    return out;
}

std::vector<Polynomial> residuals_classical_hyperplane(const ClassicalHyperplane& c,
                                                       const Polynomial& f) {
    int n = c.r + c.s;
    std::vector<Polynomial> out;
    for (int j = 0; j < c.r; ++j) {
        for (int l = 0; l < c.s; ++l) {
            Polynomial g = f.derivative(zvar(l, c.r)) * c.a - f.derivative(yvar(j, c.r));
            auto diag = identity_images(n);
            diag[zvar(l, c.r)] = Polynomial::variable(n, yvar(j, c.r));
            out.push_back(g.substitute(diag));
        }
    }
    return out;
}

Polynomial swap_vars(const Polynomial& f, int i, int j) {
    auto im = identity_images(f.nvars());
    std::swap(im[i], im[j]);
    return f.substitute(im);
}

std::vector<Polynomial> residuals_swap_divisibility(const SwapDivisibility& c, const Polynomial& f) {
    std::vector<Polynomial> out;
    for (int j = 0; j < c.r; ++j) {
        for (int k = j + 1; k < c.r; ++k) {
            Polynomial h = f - swap_vars(f, j, k);
            auto coeffs = direction_expansion(h, j, k, 2 * c.m);
            out.insert(out.end(), coeffs.begin(), coeffs.end());
        }
    }
    return out;
}

std::vector<Polynomial> residuals_trig_shift(const TrigShiftHyperplane& c, const Polynomial& f) {
    int n = c.r + c.s;
    std::vector<Polynomial> out;
    for (int j = 0; j < c.r; ++j) {
        for (int l = 0; l < c.s; ++l) {
            auto sh = identity_images(n);
            sh[yvar(j, c.r)] = Polynomial::variable(n, yvar(j, c.r)) +
                               Polynomial::constant(n, Rat(1));
            sh[zvar(l, c.r)] = Polynomial::variable(n, zvar(l, c.r)) -
                               Polynomial::constant(n, Rat(c.m));
            Polynomial g = f.substitute(sh) - f;
            auto diag = identity_images(n);
            diag[zvar(l, c.r)] = Polynomial::variable(n, yvar(j, c.r));
            out.push_back(g.substitute(diag));
        }
    }
    return out;
}

std::vector<Polynomial> residuals_trig_swap(const TrigSwapDivisibility& c, const Polynomial& f) {
    int n = c.r + c.s;
    std::vector<Polynomial> out;
    for (int j = 0; j < c.r; ++j) {
        for (int k = j + 1; k < c.r; ++k) {
            Polynomial h = f - swap_vars(f, j, k);
            // divisibility by prod_p (y_j - y_k - p) via evaluation y_j = y_k + p
            for (int p = -c.m; p <= c.m; ++p) {
                auto im = identity_images(n);
                im[j] = Polynomial::variable(n, k) + Polynomial::constant(n, Rat(p));
                out.push_back(h.substitute(im));
            }
        }
    }
    return out;
}

// type (1,r,s) layout: x = 0, y_j = 1..r, z_l = r+1..r+s
std::vector<Polynomial> residuals_type1rs_qt(const Type1RS_QT& c, const Polynomial& f) {
    int n = 1 + c.r + c.s;
    int x = 0, yr = c.r, zs = c.r + c.s;  // representative pair per S_r x S_s orbit
    std::vector<Polynomial> out;

    // (1) f(x; .., u; .., u) = f(u; .., x; .., x), u in the z_s slot
    {
        auto lhs = identity_images(n);
        lhs[yr] = Polynomial::variable(n, zs);
        auto rhs = identity_images(n);
        rhs[x] = Polynomial::variable(n, zs);
        rhs[yr] = Polynomial::variable(n, x);
        rhs[zs] = Polynomial::variable(n, x);
        out.push_back(f.substitute(lhs) - f.substitute(rhs));
    }
    // (2) f(x; .., u; .., u) = f(x; .., t u; .., q u)
    {
        auto lhs = identity_images(n);
        lhs[yr] = Polynomial::variable(n, zs);
        auto rhs = identity_images(n);
        rhs[yr] = scaled_var(n, zs, c.t);
        rhs[zs] = scaled_var(n, zs, c.q);
        out.push_back(f.substitute(lhs) - f.substitute(rhs));
    }
    // (3) f(x; .., (t/q) x; z) = f(x/q; .., x; z)
    {
        auto lhs = identity_images(n);
        lhs[yr] = scaled_var(n, x, c.t / c.q);
        auto rhs = identity_images(n);
        rhs[x] = scaled_var(n, x, Rat(1) / c.q);
        rhs[yr] = Polynomial::variable(n, x);
        out.push_back(f.substitute(lhs) - f.substitute(rhs));
    }
    // (4) f(x; y; .., (q/t) x) = f(x/t; y; .., x)
    {
        auto lhs = identity_images(n);
        lhs[zs] = scaled_var(n, x, c.q / c.t);
        auto rhs = identity_images(n);
        rhs[x] = scaled_var(n, x, Rat(1) / c.t);
        rhs[zs] = Polynomial::variable(n, x);
        out.push_back(f.substitute(lhs) - f.substitute(rhs));
    }
    return out;
}

std::vector<Polynomial> residuals_type1rs_classical(const Type1RS_Classical& c,
                                                    const Polynomial& f) {
    int n = 1 + c.r + c.s;
    int x = 0, yr = c.r, zs = c.r + c.s;
    std::vector<Polynomial> out;

    // (1) f(x; .., u; .., u) = f(u; .., x; .., x)
    {
        auto lhs = identity_images(n);
        lhs[yr] = Polynomial::variable(n, zs);
        auto rhs = identity_images(n);
        rhs[x] = Polynomial::variable(n, zs);
        rhs[yr] = Polynomial::variable(n, x);
        rhs[zs] = Polynomial::variable(n, x);
        out.push_back(f.substitute(lhs) - f.substitute(rhs));
    }
    // (2) ((d_{y_r} - a d_{z_s}) f) at y_r = z_s
    {
        Polynomial g = f.derivative(yr) - f.derivative(zs) * c.a;
        auto diag = identity_images(n);
        diag[yr] = Polynomial::variable(n, zs);
        out.push_back(g.substitute(diag));
    }
    // (3) (((a+1) d_{y_r} - a d_x) f) at y_r = x
    {
        Polynomial g = f.derivative(yr) * (c.a + 1) - f.derivative(x) * c.a;
        auto diag = identity_images(n);
        diag[yr] = Polynomial::variable(n, x);
        out.push_back(g.substitute(diag));
    }
    // (4) (((a+1) d_{z_s} - d_x) f) at z_s = x
    {
        Polynomial g = f.derivative(zs) * (c.a + 1) - f.derivative(x);
        auto diag = identity_images(n);
        diag[zs] = Polynomial::variable(n, x);
        out.push_back(g.substitute(diag));
    }
    return out;
}

std::vector<Polynomial> residuals_a1_even(const A1EvenPoints& c, const Polynomial& f) {
    std::vector<Polynomial> out;
    for (int j = 1; j <= c.m; ++j) {
        Rat diff = f.evaluate({Rat(j)}) - f.evaluate({Rat(-j)});
        out.push_back(Polynomial::constant(1, diff));
    }
    return out;
}

}  // namespace

std::vector<Polynomial> condition_residuals(const ConditionSpec& c, const Polynomial& f) {
    validate_condition(c);
    if (f.nvars() != condition_nvars(c))
        throw std::invalid_argument("polynomial ambient does not match condition context");
    return std::visit(
        [&](const auto& v) -> std::vector<Polynomial> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MultiplicativeLine>) return residuals_multiplicative(v, f);
            else if constexpr (std::is_same_v<T, InfinitesimalLine>) return residuals_infinitesimal(v, f);
            else if constexpr (std::is_same_v<T, QTHyperplane>) return residuals_qt_hyperplane(v, f);
            else if constexpr (std::is_same_v<T, ClassicalHyperplane>) return residuals_classical_hyperplane(v, f);
            else if constexpr (std::is_same_v<T, SwapDivisibility>) return residuals_swap_divisibility(v, f);
            else if constexpr (std::is_same_v<T, TrigShiftHyperplane>) return residuals_trig_shift(v, f);
            else if constexpr (std::is_same_v<T, TrigSwapDivisibility>) return residuals_trig_swap(v, f);
            else if constexpr (std::is_same_v<T, Type1RS_QT>) return residuals_type1rs_qt(v, f);
            else if constexpr (std::is_same_v<T, Type1RS_Classical>) return residuals_type1rs_classical(v, f);
            else return residuals_a1_even(v, f);
        },
        c);
}

std::vector<Polynomial> orbit_basis(int nvars, const SymmetrySpec& sym, int d, bool filtered) {
    for (auto [start, len] : sym.blocks)
        if (start < 0 || len < 1 || start + len > nvars)
            throw std::invalid_argument("symmetry block outside ambient variables");

    auto canonical = [&](Monomial m) {
        for (auto [start, len] : sym.blocks)
            std::sort(m.exps.begin() + start, m.exps.begin() + start + len, std::greater<int>());
        return m;
    };

    std::vector<Monomial> mons;
    int dlo = filtered ? 0 : d;
    for (int e = dlo; e <= d; ++e) {
        auto md = monomials_of_degree(nvars, e);
        mons.insert(mons.end(), md.begin(), md.end());
    }

    std::map<Monomial, bool> seen;
    std::vector<Polynomial> basis;
    for (const auto& m : mons) {
        Monomial cm = canonical(m);
        if (seen.count(cm)) continue;
        seen[cm] = true;
        // orbit sum: distinct rearrangements within each symmetric block
        std::vector<Monomial> orbit = {cm};
        for (auto [start, len] : sym.blocks) {
            std::vector<Monomial> next;
            for (const auto& base : orbit) {
                std::vector<int> blk(base.exps.begin() + start, base.exps.begin() + start + len);
                std::sort(blk.begin(), blk.end());
                do {
                    Monomial v = base;
                    std::copy(blk.begin(), blk.end(), v.exps.begin() + start);
                    next.push_back(v);
                } while (std::next_permutation(blk.begin(), blk.end()));
            }
            orbit = std::move(next);
        }
        Polynomial p(nvars);
        for (const auto& v : orbit) p.add_term(v, Rat(1));
        basis.push_back(std::move(p));
    }
    return basis;
}

CompiledSystem compile(const std::vector<ConditionSpec>& conds, const SymmetrySpec& sym, int d) {
    if (conds.empty()) throw std::invalid_argument("empty condition set");
    int n = condition_nvars(conds[0]);
    bool filtered = false;
    for (const auto& c : conds) {
        validate_condition(c);
        if (condition_nvars(c) != n)
            throw std::invalid_argument("conditions disagree on ambient context");
        filtered = filtered || condition_is_filtered(c);
    }

    auto basis = orbit_basis(n, sym, d, filtered);

    // residual vectors of all basis elements over a joint coordinate index
    std::vector<std::vector<Polynomial>> residuals;
    residuals.reserve(basis.size());
    for (const auto& b : basis) {
        std::vector<Polynomial> all;
        for (const auto& c : conds) {
            auto rs = condition_residuals(c, b);
            all.insert(all.end(), rs.begin(), rs.end());
        }
        residuals.push_back(std::move(all));
    }

    // coordinates: (residual slot, monomial)
    size_t slots = residuals.empty() ? 0 : residuals[0].size();
    std::vector<std::map<Monomial, size_t>> index(slots);
    for (const auto& rs : residuals)
        for (size_t k = 0; k < slots; ++k)
            for (const auto& [m, c] : rs[k].terms()) index[k].emplace(m, 0);
    std::vector<size_t> offset(slots + 1, 0);
    for (size_t k = 0; k < slots; ++k) {
        size_t i = offset[k];
        for (auto& [m, pos] : index[k]) pos = i++;
        offset[k + 1] = i;
    }

    EchelonBasis ech(offset[slots]);
    for (const auto& rs : residuals) {
        std::vector<Rat> v(offset[slots], Rat(0));
        for (size_t k = 0; k < slots; ++k)
            for (const auto& [m, c] : rs[k].terms()) v[index[k].at(m)] = c;
        ech.insert(std::move(v));
    }

    CompiledSystem sys;
    sys.space_dim = (long)basis.size();
    sys.rank = (long)ech.rank();
    return sys;
}

long solution_dimension(const std::vector<ConditionSpec>& conds, const SymmetrySpec& sym, int d) {
    return compile(conds, sym, d).solution_dim();
}

bool check_satisfies(const Polynomial& f, const std::vector<ConditionSpec>& conds) {
    for (const auto& c : conds)
        for (const auto& r : condition_residuals(c, f))
            if (!r.is_zero()) return false;
    return true;
}

Polynomial a1_mr_apply(const Polynomial& f, int m) {
    if (f.nvars() != 1) throw std::invalid_argument("a1_mr_apply expects a one-variable polynomial");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    Polynomial x = Polynomial::variable(1, 0);
    Polynomial cm = Polynomial::constant(1, Rat(m));
    Polynomial shift_up = f.substitute({x + Polynomial::constant(1, Rat(1))});
    Polynomial shift_dn = f.substitute({x - Polynomial::constant(1, Rat(1))});
    Polynomial numer = (x - cm) * (shift_up - f) + (x + cm) * (shift_dn - f);
    // exact division by x
    Polynomial out(1);
    for (const auto& [mon, c] : numer.terms()) {
        if (mon.exps[0] == 0)
            throw NonPolynomialResult("numerator not divisible by x (constant term " +
                                      rat_to_string(c) + ")");
        Monomial d = mon;
        d.exps[0]--;
        out.add_term(d, c);
    }
    return out;
}

}  // namespace powersum
