#include "powersum/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace powersum {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial{std::vector<int>(nvars, 0)}] = c;
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
    if (power < 0) throw std::invalid_argument("negative power");
    Polynomial p(nvars);
    Monomial m{std::vector<int>(nvars, 0)};
    m.exps[index] = power;
    p.terms_[m] = Rat(1);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // graded order: the last term has maximal degree
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if ((int)m.exps.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ambient variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ambient variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ambient variable count mismatch");
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (int i = 0; i < nvars_; ++i) m.exps[i] += mb.exps[i];
            r.add_term(m, Rat(ca * cb));
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if ((int)images.size() != nvars_)
        throw std::invalid_argument("substitution must cover every ambient variable");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw std::invalid_argument("substitution images disagree on target context");

    // cache powers of each image as needed
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(Polynomial::constant(target, Rat(1)));

    auto power_of = [&](int var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        while ((int)cache.size() <= e) cache.push_back(cache.back() * images[var]);
        return cache[e];
    };

    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (m.exps[i] > 0) term = term * power_of(i, m.exps[i]);
        out += term;
    }
    return out;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("variable index");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0) continue;
        Monomial d = m;
        int e = d.exps[var]--;
        r.add_term(d, Rat(c * e));
    }
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if ((int)point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            if (m.exps[i] > 0) t *= rat_pow(point[i], m.exps[i]);
        acc += t;
    }
    return acc;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var, int max_power) const {
    std::vector<Polynomial> out(max_power + 1, Polynomial(nvars_));
    for (const auto& [m, c] : terms_) {
        int e = m.exps[var];
        if (e > max_power) continue;
        Monomial stripped = m;
        stripped.exps[var] = 0;
        out[e].add_term(stripped, c);
    }
    return out;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_[m] = c;
    return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool printed = false;
        if (a != 1 || m.degree() == 0) {
            os << a.get_str();
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (m.exps[i] == 0) continue;
            if (printed) os << "*";
            if (i < (int)names.size()) os << names[i];
            else os << "x" << i;
            if (m.exps[i] > 1) os << "^" << m.exps[i];
            printed = true;
        }
    }
    return os.str();
}

std::vector<Polynomial> identity_images(int nvars) {
    std::vector<Polynomial> v;
    v.reserve(nvars);
    for (int i = 0; i < nvars; ++i) v.push_back(Polynomial::variable(nvars, i));
    return v;
}

std::vector<Polynomial> direction_expansion(const Polynomial& p, int j, int k, int order) {
    if (j == k) throw std::invalid_argument("direction_expansion needs distinct variables");
    // x_j -> eps + w with eps occupying slot j and w = x_k: substitute x_j -> x_j + x_k
    auto images = identity_images(p.nvars());
    images[j] = Polynomial::variable(p.nvars(), j) + Polynomial::variable(p.nvars(), k);
    return p.substitute(images).coefficients_in(j, order);
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial{{}});
        return out;
    }
    std::vector<int> e(nvars, 0);
    // enumerate compositions of d into nvars parts
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            e[pos] = rem;
            out.push_back(Monomial{e});
            e[pos] = 0;
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[pos] = v;
            self(self, pos + 1, rem - v);
        }
        e[pos] = 0;
    };
    rec(rec, 0, d);
    // already in descending lex per degree; sort for graded lex ascending consistency
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace powersum
