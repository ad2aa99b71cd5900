#include "powersum/series.hpp"

#include <stdexcept>

namespace powersum {

void GradedSeries::check_compatible(const GradedSeries& o) const {
    if (lattice_ != o.lattice_ || tmax_ != o.tmax_)
        throw std::invalid_argument("series lattice/truncation mismatch");
}

GradedSeries GradedSeries::one(long lattice, long trunc_num) {
    GradedSeries s(lattice, trunc_num);
    s.c_[0] = Rat(1);
    return s;
}

GradedSeries GradedSeries::power(long lattice, long trunc_num, long num) {
    GradedSeries s(lattice, trunc_num);
    if (num < 0) throw std::invalid_argument("negative exponent");
    if (num <= trunc_num) s.c_[num] = Rat(1);
    return s;
}

GradedSeries GradedSeries::geometric(long lattice, long trunc_num, long k) {
    if (k < 1) throw std::invalid_argument("geometric factor needs k >= 1");
    GradedSeries s(lattice, trunc_num);
    for (long e = 0; e * k * lattice <= trunc_num; ++e) s.c_[e * k * lattice] = Rat(1);
    return s;
}

GradedSeries GradedSeries::one_minus_power(long lattice, long trunc_num, long k) {
    GradedSeries s = one(lattice, trunc_num);
    if (k * lattice <= trunc_num) s.c_[k * lattice] = Rat(-1);
    return s;
}

GradedSeries GradedSeries::inv_pochhammer(long lattice, long trunc_num, int m) {
    GradedSeries s = one(lattice, trunc_num);
    for (int k = 1; k <= m; ++k) s = s * geometric(lattice, trunc_num, k);
    return s;
}

Rat GradedSeries::coeff_key(long num) const {
    auto it = c_.find(num);
    return it == c_.end() ? Rat(0) : it->second;
}

void GradedSeries::set_key(long num, const Rat& c) {
    if (num < 0) throw std::invalid_argument("negative exponent");
    if (num > tmax_) return;
    if (c == 0) c_.erase(num);
    else c_[num] = c;
}

void GradedSeries::add_key(long num, const Rat& c) {
    if (num < 0) throw std::invalid_argument("negative exponent");
    if (num > tmax_ || c == 0) return;
    auto it = c_.find(num);
    if (it == c_.end()) c_[num] = c;
    else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
    check_compatible(o);
    GradedSeries r = *this;
    for (const auto& [k, v] : o.c_) r.add_key(k, v);
    return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    check_compatible(o);
    for (const auto& [k, v] : o.c_) add_key(k, v);
    return *this;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
    check_compatible(o);
    GradedSeries r = *this;
    for (const auto& [k, v] : o.c_) r.add_key(k, Rat(-v));
    return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
    check_compatible(o);
    GradedSeries r(lattice_, tmax_);
    for (const auto& [ka, va] : c_) {
        if (ka > tmax_) continue;
        for (const auto& [kb, vb] : o.c_) {
            if (ka + kb > tmax_) break;  // keys ascend
            r.add_key(ka + kb, Rat(va * vb));
        }
    }
    return r;
}

GradedSeries GradedSeries::operator*(const Rat& s) const {
    GradedSeries r(lattice_, tmax_);
    if (s == 0) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * s;
    return r;
}

GradedSeries GradedSeries::shifted(long num) const {
    GradedSeries r(lattice_, tmax_);
    for (const auto& [k, v] : c_) {
        long nk = k + num;
        if (nk < 0) throw std::domain_error("shift produced a negative exponent");
        if (nk <= tmax_) r.c_[nk] = v;
    }
    return r;
}

bool GradedSeries::integral() const {
    for (const auto& [k, v] : c_)
        if (k % lattice_ != 0) return false;
    return true;
}

std::vector<Rat> GradedSeries::integer_coeffs(long D) const {
    if (!integral()) throw std::domain_error("series has fractional exponents");
    std::vector<Rat> out;
    out.reserve(D + 1);
    for (long d = 0; d <= D; ++d) out.push_back(coeff(d));
    return out;
}

SeriesExpr SeriesExpr::scalar(const Rat& c) {
    SeriesExpr e;
    e.kind_ = Kind::Scalar;
    e.value_ = c;
    return e;
}

SeriesExpr SeriesExpr::u_pow(long j) {
    SeriesExpr e;
    e.kind_ = Kind::UPow;
    e.k_ = j;
    return e;
}

SeriesExpr SeriesExpr::t_pow(const Rat& exp) {
    SeriesExpr e;
    e.kind_ = Kind::TPow;
    e.value_ = exp;
    return e;
}

SeriesExpr SeriesExpr::one_minus_u_pow(long k) {
    SeriesExpr e;
    e.kind_ = Kind::OneMinus;
    e.k_ = k;
    return e;
}

SeriesExpr SeriesExpr::inv_one_minus_u_pow(long k) {
    SeriesExpr e;
    e.kind_ = Kind::InvOneMinus;
    e.k_ = k;
    return e;
}

SeriesExpr SeriesExpr::product(std::vector<SeriesExpr> factors) {
    SeriesExpr e;
    e.kind_ = Kind::Product;
    e.children_ = std::move(factors);
    return e;
}

SeriesExpr SeriesExpr::sum(std::vector<SeriesExpr> terms) {
    SeriesExpr e;
    e.kind_ = Kind::Sum;
    e.children_ = std::move(terms);
    return e;
}

GradedSeries SeriesExpr::expand(long lattice, long trunc_num) const {
    switch (kind_) {
        case Kind::Scalar:
            return GradedSeries::one(lattice, trunc_num) * value_;
        case Kind::UPow:
            return GradedSeries::power(lattice, trunc_num, k_ * lattice);
        case Kind::TPow: {
            Rat key = value_ * lattice;
            if (!is_integer(key))
                throw std::domain_error("t-power exponent off the series lattice");
            return GradedSeries::power(lattice, trunc_num, rat_to_long(key));
        }
        case Kind::OneMinus:
            return GradedSeries::one_minus_power(lattice, trunc_num, k_);
        case Kind::InvOneMinus:
            return GradedSeries::geometric(lattice, trunc_num, k_);
        case Kind::Product: {
            GradedSeries acc = GradedSeries::one(lattice, trunc_num);
            for (const auto& c : children_) acc = acc * c.expand(lattice, trunc_num);
            return acc;
        }
        case Kind::Sum: {
            GradedSeries acc(lattice, trunc_num);
            for (const auto& c : children_) acc += c.expand(lattice, trunc_num);
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace powersum
