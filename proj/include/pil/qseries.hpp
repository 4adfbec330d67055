#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pil/checked.hpp"

namespace pil::qseries {

/// Sparse exact-integer polynomial in the tracking variables z and w.
/// Terms are kept sorted by (z degree, w degree) with no zero coefficients.
class PolyZW {
public:
    struct Term {
        Int z = 0;
        Int w = 0;
        Int c = 0;
        friend auto operator<=>(const Term&, const Term&) = default;
    };

    PolyZW() = default;
    PolyZW(Int constant); // implicit: integer literals act as constant polynomials
    static PolyZW monomial(Int c, Int z_deg, Int w_deg);
    static PolyZW from_terms(std::vector<Term> terms); // sorts and combines
    static PolyZW one_minus_z() { return PolyZW(1) - monomial(1, 1, 0); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Int coeff(Int z_deg, Int w_deg) const;
    Int max_z_degree() const; // -1 for the zero polynomial
    Int max_w_degree() const;

    PolyZW& operator+=(const PolyZW& rhs);
    PolyZW& operator-=(const PolyZW& rhs);
    friend PolyZW operator+(PolyZW lhs, const PolyZW& rhs) { return lhs += rhs; }
    friend PolyZW operator-(PolyZW lhs, const PolyZW& rhs) { return lhs -= rhs; }
    friend PolyZW operator*(const PolyZW& lhs, const PolyZW& rhs);
    PolyZW operator-() const;

    PolyZW shifted(Int dz, Int dw) const; // multiply by z^dz w^dw
    PolyZW subst_w1() const;
    PolyZW subst_z1() const;
    PolyZW d_dw_at_1() const;

    friend bool operator==(const PolyZW&, const PolyZW&) = default;

    void dump(std::ostream& out) const; // "[ (z,w,c), ... ]", "[ ]" when zero

private:
    static std::vector<Term> normalized(std::vector<Term> terms);
    explicit PolyZW(std::vector<Term> terms) : terms_(normalized(std::move(terms))) {}
    std::vector<Term> terms_;
};

/// Formal power series in q with PolyZW coefficients, truncated at q^order.
/// All arithmetic is exact and closed under truncation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Int order);
    static TruncatedSeries one(Int order);
    static TruncatedSeries monomial(Int order, Int q_deg, PolyZW c);

    Int order() const noexcept { return order_; }
    const PolyZW& operator[](Int n) const;
    void set(Int n, PolyZW c);
    void add_at(Int n, const PolyZW& c);

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    TruncatedSeries scaled(const PolyZW& c) const;
    // Multiplicative inverse; requires the constant coefficient to be 1.
    TruncatedSeries inverse() const;

    TruncatedSeries subst_w1() const;
    TruncatedSeries subst_z1() const;
    // Formal d/dw followed by w = 1: coefficient of z^j q^n becomes
    // sum_m m * [z^j w^m q^n].
    TruncatedSeries d_dw_at_1() const;

    Int coeff(Int q_deg, Int z_deg, Int w_deg) const;
    Int max_z_degree() const;
    Int max_w_degree() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // One line per q-degree: "n: [ (z,w,c), ... ]", terms sorted by (z, w).
    std::string dump() const;

private:
    Int order_ = 0;
    std::vector<PolyZW> coeffs_; // indexed by q-degree, 0..order_
};

// prod_{m >= 0} (1 - c * w^w_exp * q^(offset + step*m)), truncated. Factors
// with offset + step*m > order are identically 1 at this truncation.
TruncatedSeries pochhammer(const PolyZW& c, Int w_exp, Int offset, Int step, Int order);

// prod_{m >= 1} (1 - c * w^w_exp * q^(step*m)): pochhammer with offset = step.
TruncatedSeries pochhammer_product(const PolyZW& c, Int w_exp, Int step, Int order);

// sum_{i >= 1} q^(step*i) / (1 - c * q^(step*i)), expanded as
// sum_{i >= 1} sum_{r >= 0} c^r q^(step*i*(r+1)).
TruncatedSeries geom_tail(Int step, const PolyZW& c, Int order);

// Generating functions. z tracks the class index j throughout; w tracks the
// per-function part statistic in the *_w and refined variants.
TruncatedSeries gf_O(Int k, Int b, Int order);
TruncatedSeries gf_D(Int k, Int b, Int order); // built via its own product route
TruncatedSeries gf_jO(Int k, Int b, Int order); // coefficients (j+1)*O_{j+1,k,b}(n)
TruncatedSeries gf_O_w(Int k, Int b, Int order);
TruncatedSeries gf_D_w(Int k, Int b, Int order);
TruncatedSeries gf_O_class(Int k, Int b, Int t, Int order); // 1 <= t <= k-1
TruncatedSeries gf_O_class0(Int k, Int b, Int order);
TruncatedSeries gf_D_resmult(Int k, Int b, Int t, Int order); // 1 <= t <= k-1
TruncatedSeries gf_Dbar(Int k, Int b, Int order);

// Product-rule differentiation of a product of factors:
// sum_i (d/dw F_i at w=1) * prod_{j != i} (F_j at w=1).
// Secondary path used to cross-check d_dw_at_1; not used by the builders.
TruncatedSeries leibniz_d_dw_at_1(std::span<const TruncatedSeries> factors);

} // namespace pil::qseries
