#pragma once

#include <map>
#include <memory>
#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Truncated series with exponents on the lattice (1/d)Z, d fixed.
/// Coefficients are exact; every stored exponent is <= the truncation bound.
class GradedSeries {
public:
    GradedSeries(long lattice, long truncation_num)
        : lattice_(lattice), tmax_(truncation_num) {
        if (lattice < 1) throw std::invalid_argument("lattice denominator must be >= 1");
        if (truncation_num < 0) throw std::invalid_argument("negative truncation");
    }

    /// Lattice denominator d: exponents are key/d.
    long lattice() const { return lattice_; }
    /// Truncation bound numerator: exponents key <= tmax with key/d kept.
    long truncation_key() const { return tmax_; }
    Rat truncation() const { return Rat(tmax_, lattice_); }

    static GradedSeries zero(long lattice, long trunc_num) { return GradedSeries(lattice, trunc_num); }
    static GradedSeries one(long lattice, long trunc_num);
    /// u^(num/lattice).
    static GradedSeries power(long lattice, long trunc_num, long num);
    /// 1/(1-u^k), k >= 1 integer.
    static GradedSeries geometric(long lattice, long trunc_num, long k);
    /// 1 - u^k.
    static GradedSeries one_minus_power(long lattice, long trunc_num, long k);
    /// 1/((1-u)(1-u^2)...(1-u^m)) -- inverse q-Pochhammer (u;u)_m.
    static GradedSeries inv_pochhammer(long lattice, long trunc_num, int m);

    /// Coefficient of u^(num/lattice).
    Rat coeff_key(long num) const;
    /// Coefficient of the integer exponent d.
    Rat coeff(long d) const { return coeff_key(d * lattice_); }
    void set_key(long num, const Rat& c);
    void add_key(long num, const Rat& c);

    const std::map<long, Rat>& raw() const { return c_; }

    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries operator*(const Rat& s) const;
    GradedSeries& operator+=(const GradedSeries& o);
    bool operator==(const GradedSeries& o) const = default;

    /// Multiply by u^(num/lattice); terms pushed past the truncation drop.
    GradedSeries shifted(long num) const;

    /// True iff every exponent is a nonnegative integer.
    bool integral() const;
    /// Integer-exponent coefficients 0..D (requires integral()).
    std::vector<Rat> integer_coeffs(long D) const;

private:
    long lattice_;
    long tmax_;
    std::map<long, Rat> c_;
    void check_compatible(const GradedSeries& o) const;
};

/// Formal product/sum tree of series factors: rational scalars, u^j,
/// (1-u^k)^{+-1}, and t^e with rational exponent e.
class SeriesExpr {
public:
    static SeriesExpr scalar(const Rat& c);
    static SeriesExpr u_pow(long j);
    /// t^(p/q) with rational exponent; the expansion lattice must absorb q.
    static SeriesExpr t_pow(const Rat& e);
    static SeriesExpr one_minus_u_pow(long k);
    static SeriesExpr inv_one_minus_u_pow(long k);
    static SeriesExpr product(std::vector<SeriesExpr> factors);
    static SeriesExpr sum(std::vector<SeriesExpr> terms);

    GradedSeries expand(long lattice, long trunc_num) const;

private:
    enum class Kind { Scalar, UPow, TPow, OneMinus, InvOneMinus, Product, Sum };
    Kind kind_ = Kind::Scalar;
    Rat value_;
    long k_ = 0;
    std::vector<SeriesExpr> children_;
};

}  // namespace powersum
