#include "powersum/genalg.hpp"

#include <map>
#include <stdexcept>

namespace powersum {

void GeneratorSet::validate() const {
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw std::invalid_argument("generator ambient mismatch");
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (!g.is_homogeneous()) throw std::invalid_argument("non-homogeneous generator");
    }
}

std::vector<int> GeneratorSet::degrees() const {
    std::vector<int> d;
    d.reserve(gens.size());
    for (const auto& g : gens) d.push_back(g.degree());
    return d;
}

std::vector<Rat> poly_to_vector(const Polynomial& p, const std::vector<Monomial>& index) {
    std::vector<Rat> v(index.size(), Rat(0));
    std::map<Monomial, size_t> pos;
    for (size_t i = 0; i < index.size(); ++i) pos[index[i]] = i;
    for (const auto& [m, c] : p.terms()) {
        auto it = pos.find(m);
        if (it == pos.end()) throw std::invalid_argument("monomial outside index");
        v[it->second] = c;
    }
    return v;
}

namespace {

Polynomial vector_to_poly(const std::vector<Rat>& v, const std::vector<Monomial>& index, int nvars) {
    Polynomial p(nvars);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(index[i], v[i]);
    return p;
}

/// Joint monomial index over a family of polynomials, then their vectors.
std::vector<std::vector<Rat>> vectorize(const std::vector<Polynomial>& polys) {
    std::map<Monomial, size_t> pos;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            pos.emplace(m, 0);
    size_t k = 0;
    for (auto& [m, i] : pos) i = k++;
    std::vector<std::vector<Rat>> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Rat> v(pos.size(), Rat(0));
        for (const auto& [m, c] : p.terms()) v[pos[m]] = c;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

GradedAlgebra::GradedAlgebra(GeneratorSet gens) : gens_(std::move(gens)) {
    gens_.validate();
    basis_.push_back({Polynomial::constant(gens_.nvars, Rat(1))});
}

void GradedAlgebra::extend(int D) {
    for (int d = (int)basis_.size(); d <= D; ++d) {
        std::vector<Monomial> index = monomials_of_degree(gens_.nvars, d);
        EchelonBasis ech(index.size());
        std::vector<Polynomial> rows;
        // incremental spanning set: generators times lower-degree basis vectors
        for (const auto& g : gens_.gens) {
            int gd = g.degree();
            if (gd > d) continue;
            for (const auto& b : basis_[d - gd]) {
                Polynomial p = g * b;
                if (p.is_zero()) continue;
                if (ech.insert(poly_to_vector(p, index))) rows.push_back(p);
                if (ech.rank() == index.size()) break;
            }
            if (ech.rank() == index.size()) break;
        }
        // store the reduced rows so later products reuse near-minimal bases
        std::vector<Polynomial> reduced;
        reduced.reserve(ech.rank());
        for (const auto& r : ech.rows()) reduced.push_back(vector_to_poly(r, index, gens_.nvars));
        basis_.push_back(std::move(reduced));
    }
}

const std::vector<Polynomial>& GradedAlgebra::basis(int d) {
    if (d < 0) throw std::out_of_range("negative degree");
    extend(d);
    return basis_[d];
}

long GradedAlgebra::dim(int d) { return (long)basis(d).size(); }

GradedDims GradedAlgebra::dims(int D) {
    extend(D);
    GradedDims out;
    out.reserve(D + 1);
    for (int d = 0; d <= D; ++d) out.push_back((long)basis_[d].size());
    return out;
}

bool GradedAlgebra::contains(const Polynomial& f) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw std::invalid_argument("membership requires a homogeneous input");
    int d = f.degree();
    std::vector<Monomial> index = monomials_of_degree(gens_.nvars, d);
    EchelonBasis ech(index.size());
    for (const auto& b : basis(d)) ech.insert(poly_to_vector(b, index));
    return ech.contains(poly_to_vector(f, index));
}

GradedDims graded_dimensions(const GeneratorSet& gens, int D) {
    if (D < 0) throw std::invalid_argument("negative degree bound");
    GradedAlgebra alg(gens);
    return alg.dims(D);
}

bool membership(const Polynomial& f, const GeneratorSet& gens) {
    GradedAlgebra alg(gens);
    return alg.contains(f);
}

GradedDims quotient_by_ideal_dims(const GeneratorSet& gens,
                                  const std::vector<Polynomial>& ideal_gens, int D) {
    GradedAlgebra alg(gens);
    alg.extend(D);
    for (const auto& q : ideal_gens) {
        if (!alg.contains(q))
            throw std::invalid_argument("ideal generator is not a member of the algebra");
    }
    GradedDims out;
    out.reserve(D + 1);
    for (int d = 0; d <= D; ++d) {
        std::vector<Monomial> index = monomials_of_degree(gens.nvars, d);
        EchelonBasis ech(index.size());
        for (const auto& q : ideal_gens) {
            int qd = q.degree();
            if (qd > d) continue;
            for (const auto& b : alg.basis(d - qd)) ech.insert(poly_to_vector(q * b, index));
        }
        out.push_back(alg.dim(d) - (long)ech.rank());
    }
    return out;
}

CmVerdict freeness_test(const GradedDims& alg, const GradedDims& quot,
                        const std::vector<int>& parameter_degrees, int D) {
    if ((int)alg.size() <= D || (int)quot.size() <= D)
        throw std::invalid_argument("dimension windows shorter than D");
    GradedSeries rhs(1, D);
    for (int d = 0; d <= D; ++d) rhs.set_key(d, Rat(quot[d]));
    for (int e : parameter_degrees) rhs = rhs * GradedSeries::geometric(1, D, e);
    for (int d = 0; d <= D; ++d) {
        if (rhs.coeff(d) != alg[d]) {
            CmVerdict v;
            v.consistent = false;
            v.refuted_at = d;
            v.expected = rhs.coeff(d);
            v.computed = Rat(alg[d]);
            return v;
        }
    }
    CmVerdict v;
    v.consistent = true;
    v.window = D;
    return v;
}

GradedDims restriction_kernel_dims(const GeneratorSet& gens,
                                   const std::vector<Polynomial>& images, int D) {
    GradedAlgebra alg(gens);
    GradedDims out;
    out.reserve(D + 1);
    for (int d = 0; d <= D; ++d) {
        const auto& basis = alg.basis(d);
        std::vector<Polynomial> imgs;
        imgs.reserve(basis.size());
        for (const auto& b : basis) imgs.push_back(b.substitute(images));
        auto vecs = vectorize(imgs);
        EchelonBasis ech(vecs.empty() ? 0 : vecs[0].size());
        for (auto& v : vecs) ech.insert(std::move(v));
        out.push_back((long)basis.size() - (long)ech.rank());
    }
    return out;
}

}  // namespace powersum
