#include "pil/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pil::qseries {

std::vector<PolyZW::Term> PolyZW::normalized(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::pair{a.z, a.w} < std::pair{b.z, b.w};
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        if (!out.empty() && out.back().z == t.z && out.back().w == t.w) {
            out.back().c = checked_add(out.back().c, t.c);
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(t);
        }
    }
    return out;
}

PolyZW::PolyZW(Int constant) {
    if (constant != 0) terms_.push_back({0, 0, constant});
}

PolyZW PolyZW::monomial(Int c, Int z_deg, Int w_deg) {
    if (z_deg < 0 || w_deg < 0) throw std::invalid_argument("monomial degrees must be >= 0");
    PolyZW p;
    if (c != 0) p.terms_.push_back({z_deg, w_deg, c});
    return p;
}

PolyZW PolyZW::from_terms(std::vector<Term> terms) {
    return PolyZW(std::move(terms));
}

Int PolyZW::coeff(Int z_deg, Int w_deg) const {
    for (const auto& t : terms_) {
        if (t.z == z_deg && t.w == w_deg) return t.c;
    }
    return 0;
}

Int PolyZW::max_z_degree() const {
    Int m = -1;
    for (const auto& t : terms_) m = std::max(m, t.z);
    return m;
}

Int PolyZW::max_w_degree() const {
    Int m = -1;
    for (const auto& t : terms_) m = std::max(m, t.w);
    return m;
}

PolyZW& PolyZW::operator+=(const PolyZW& rhs) {
    // Merge two sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    auto key = [](const Term& t) { return std::pair{t.z, t.w}; };
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && key(*a) < key(*b))) {
            out.push_back(*a++);
        } else if (a == terms_.end() || key(*b) < key(*a)) {
            out.push_back(*b++);
        } else {
            Int c = checked_add(a->c, b->c);
            if (c != 0) out.push_back({a->z, a->w, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

PolyZW& PolyZW::operator-=(const PolyZW& rhs) { return *this += -rhs; }

PolyZW PolyZW::operator-() const {
    PolyZW out = *this;
    for (auto& t : out.terms_) t.c = checked_sub(0, t.c);
    return out;
}

PolyZW operator*(const PolyZW& lhs, const PolyZW& rhs) {
    std::vector<PolyZW::Term> prod;
    prod.reserve(lhs.terms().size() * rhs.terms().size());
    for (const auto& a : lhs.terms()) {
        for (const auto& b : rhs.terms()) {
            prod.push_back({checked_add(a.z, b.z), checked_add(a.w, b.w), checked_mul(a.c, b.c)});
        }
    }
    return PolyZW(std::move(prod));
}

PolyZW PolyZW::shifted(Int dz, Int dw) const {
    if (dz < 0 || dw < 0) throw std::invalid_argument("shift degrees must be >= 0");
    PolyZW out = *this;
    for (auto& t : out.terms_) {
        t.z = checked_add(t.z, dz);
        t.w = checked_add(t.w, dw);
    }
    return out;
}

PolyZW PolyZW::subst_w1() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({t.z, 0, t.c});
    return PolyZW(std::move(terms));
}

PolyZW PolyZW::subst_z1() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({0, t.w, t.c});
    return PolyZW(std::move(terms));
}

PolyZW PolyZW::d_dw_at_1() const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({t.z, 0, checked_mul(t.c, t.w)});
    return PolyZW(std::move(terms));
}

void PolyZW::dump(std::ostream& out) const {
    if (terms_.empty()) {
        out << "[ ]";
        return;
    }
    out << "[ ";
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << ", ";
        first = false;
        out << '(' << t.z << ',' << t.w << ',' << t.c << ')';
    }
    out << " ]";
}

TruncatedSeries::TruncatedSeries(Int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(Int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = PolyZW(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(Int order, Int q_deg, PolyZW c) {
    TruncatedSeries s(order);
    s.set(q_deg, std::move(c));
    return s;
}

const PolyZW& TruncatedSeries::operator[](Int n) const {
    if (n < 0 || n > order_) throw std::invalid_argument("q-degree outside truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set(Int n, PolyZW c) {
    if (n < 0 || n > order_) throw std::invalid_argument("q-degree outside truncation order");
    coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

void TruncatedSeries::add_at(Int n, const PolyZW& c) {
    if (n < 0 || n > order_) throw std::invalid_argument("q-degree outside truncation order");
    coeffs_[static_cast<std::size_t>(n)] += c;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("mismatched truncation orders");
    }
}

// Dense scratch accumulation of sum_{i = i_begin}^{n} A[i] * B[n-i]. The
// convolution is exact: only input coefficients of q-degree <= n are read.
PolyZW convolve_at(const TruncatedSeries& A, const TruncatedSeries& B, Int n, Int i_begin,
                   std::vector<Int>& scratch) {
    Int zm = 0;
    Int wm = 0;
    bool any = false;
    for (Int i = i_begin; i <= n; ++i) {
        const PolyZW& a = A[i];
        const PolyZW& b = B[n - i];
        if (a.is_zero() || b.is_zero()) continue;
        any = true;
        zm = std::max(zm, a.max_z_degree() + b.max_z_degree());
        wm = std::max(wm, a.max_w_degree() + b.max_w_degree());
    }
    if (!any) return {};

    std::size_t width = static_cast<std::size_t>(wm) + 1;
    scratch.assign((static_cast<std::size_t>(zm) + 1) * width, 0);
    for (Int i = i_begin; i <= n; ++i) {
        const PolyZW& a = A[i];
        const PolyZW& b = B[n - i];
        if (a.is_zero() || b.is_zero()) continue;
        for (const auto& ta : a.terms()) {
            for (const auto& tb : b.terms()) {
                Int& cell = scratch[static_cast<std::size_t>(ta.z + tb.z) * width +
                                    static_cast<std::size_t>(ta.w + tb.w)];
                cell = checked_add(cell, checked_mul(ta.c, tb.c));
            }
        }
    }
    std::vector<PolyZW::Term> terms;
    for (Int z = 0; z <= zm; ++z) {
        for (Int w = 0; w <= wm; ++w) {
            Int c = scratch[static_cast<std::size_t>(z) * width + static_cast<std::size_t>(w)];
            if (c != 0) terms.push_back({z, w, c});
        }
    }
    return PolyZW::from_terms(std::move(terms));
}

// In-place multiplication by 1 + sum_e extras[e] * q^e with every e >= 1.
void mul_one_plus(TruncatedSeries& s, const std::vector<std::pair<Int, PolyZW>>& extras) {
    for (const auto& [e, p] : extras) {
        if (e < 1) throw std::invalid_argument("factor offsets must be >= 1");
        (void)p;
    }
    for (Int n = s.order(); n >= 1; --n) {
        for (const auto& [e, p] : extras) {
            if (e > n) continue;
            s.add_at(n, p * s[n - e]);
        }
    }
}

} // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (Int n = 0; n <= order_; ++n) coeffs_[static_cast<std::size_t>(n)] += rhs[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (Int n = 0; n <= order_; ++n) coeffs_[static_cast<std::size_t>(n)] -= rhs[n];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_order(lhs, rhs);
    TruncatedSeries out(lhs.order());
    std::vector<Int> scratch;
    for (Int n = 0; n <= lhs.order(); ++n) {
        out.set(n, convolve_at(lhs, rhs, n, 0, scratch));
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const PolyZW& c) const {
    TruncatedSeries out(order_);
    for (Int n = 0; n <= order_; ++n) out.set(n, (*this)[n] * c);
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if ((*this)[0] != PolyZW(1)) {
        throw std::invalid_argument("inverse requires constant coefficient 1");
    }
    TruncatedSeries out = TruncatedSeries::one(order_);
    std::vector<Int> scratch;
    for (Int n = 1; n <= order_; ++n) {
        out.set(n, -convolve_at(*this, out, n, 1, scratch));
    }
    return out;
}

TruncatedSeries TruncatedSeries::subst_w1() const {
    TruncatedSeries out(order_);
    for (Int n = 0; n <= order_; ++n) out.set(n, (*this)[n].subst_w1());
    return out;
}

TruncatedSeries TruncatedSeries::subst_z1() const {
    TruncatedSeries out(order_);
    for (Int n = 0; n <= order_; ++n) out.set(n, (*this)[n].subst_z1());
    return out;
}

TruncatedSeries TruncatedSeries::d_dw_at_1() const {
    TruncatedSeries out(order_);
    for (Int n = 0; n <= order_; ++n) out.set(n, (*this)[n].d_dw_at_1());
    return out;
}

Int TruncatedSeries::coeff(Int q_deg, Int z_deg, Int w_deg) const {
    return (*this)[q_deg].coeff(z_deg, w_deg);
}

Int TruncatedSeries::max_z_degree() const {
    Int m = -1;
    for (const auto& c : coeffs_) m = std::max(m, c.max_z_degree());
    return m;
}

Int TruncatedSeries::max_w_degree() const {
    Int m = -1;
    for (const auto& c : coeffs_) m = std::max(m, c.max_w_degree());
    return m;
}

std::string TruncatedSeries::dump() const {
    std::ostringstream out;
    for (Int n = 0; n <= order_; ++n) {
        out << n << ": ";
        (*this)[n].dump(out);
        out << '\n';
    }
    return out.str();
}

TruncatedSeries pochhammer(const PolyZW& c, Int w_exp, Int offset, Int step, Int order) {
    if (offset < 1) throw std::invalid_argument("pochhammer offset must be >= 1");
    if (step < 1) throw std::invalid_argument("pochhammer step must be >= 1");
    if (w_exp < 0) throw std::invalid_argument("w exponent must be >= 0");
    TruncatedSeries s = TruncatedSeries::one(order);
    PolyZW factor = -c.shifted(0, w_exp);
    for (Int e = offset; e <= order; e += step) {
        mul_one_plus(s, {{e, factor}});
    }
    return s;
}

TruncatedSeries pochhammer_product(const PolyZW& c, Int w_exp, Int step, Int order) {
    return pochhammer(c, w_exp, step, step, order);
}

TruncatedSeries geom_tail(Int step, const PolyZW& c, Int order) {
    if (step < 1) throw std::invalid_argument("step must be >= 1");
    TruncatedSeries s(order);
    for (Int base = step; base <= order; base += step) {
        PolyZW power(1);
        for (Int e = base; e <= order; e += base) {
            s.add_at(e, power);
            power = power * c;
        }
    }
    return s;
}

namespace {

void require_kb(Int k, Int b) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (b < 1) throw std::invalid_argument("b must be >= 1");
}

void require_t(Int k, Int t) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (t < 1 || t > k - 1) throw std::invalid_argument("t must lie in [1, k-1]");
}

// 1 / (w^a q^offset; q^step)_inf as a series factor.
TruncatedSeries poch_inv(Int w_exp, Int offset, Int step, Int order) {
    return pochhammer(PolyZW(1), w_exp, offset, step, order).inverse();
}

} // namespace

TruncatedSeries gf_O(Int k, Int b, Int order) {
    require_kb(k, b);
    Int kb = checked_mul(k, b);
    return pochhammer(PolyZW::one_minus_z(), 0, kb, kb, order) * poch_inv(0, 1, 1, order);
}

TruncatedSeries gf_D(Int k, Int b, Int order) {
    require_kb(k, b);
    Int kb = checked_mul(k, b);
    // Parts not divisible by b are free; parts divisible by b carry the
    // at-least-k-times tracking. Deliberately not cancelled down to the gf_O
    // product so the two routes stay independent.
    TruncatedSeries not_div_b = pochhammer(PolyZW(1), 0, b, b, order) * poch_inv(0, 1, 1, order);
    TruncatedSeries div_b = pochhammer(PolyZW::one_minus_z(), 0, kb, kb, order) * poch_inv(0, b, b, order);
    return not_div_b * div_b;
}

TruncatedSeries gf_jO(Int k, Int b, Int order) {
    require_kb(k, b);
    Int kb = checked_mul(k, b);
    return gf_O(k, b, order) * geom_tail(kb, PolyZW::one_minus_z(), order);
}

TruncatedSeries gf_O_w(Int k, Int b, Int order) {
    require_kb(k, b);
    Int kb = checked_mul(k, b);
    return pochhammer(PolyZW::one_minus_z(), 1, kb, kb, order) * poch_inv(1, 1, 1, order);
}

TruncatedSeries gf_D_w(Int k, Int b, Int order) {
    require_kb(k, b);
    Int kb = checked_mul(k, b);
    return pochhammer(PolyZW::one_minus_z(), k, kb, kb, order) * poch_inv(1, 1, 1, order);
}

TruncatedSeries gf_O_class(Int k, Int b, Int t, Int order) {
    require_kb(k, b);
    require_t(k, t);
    Int kb = checked_mul(k, b);
    Int tb = checked_mul(t, b);
    TruncatedSeries out = pochhammer(PolyZW::one_minus_z(), 0, kb, kb, order);
    out = out * pochhammer(PolyZW(1), 0, tb, kb, order);
    out = out * poch_inv(0, 1, 1, order);
    out = out * poch_inv(1, tb, kb, order);
    return out;
}

TruncatedSeries gf_O_class0(Int k, Int b, Int order) {
    require_kb(k, b);
    Int kb = checked_mul(k, b);
    TruncatedSeries out = pochhammer(PolyZW::one_minus_z(), 1, kb, kb, order);
    out = out * pochhammer(PolyZW(1), 0, kb, kb, order);
    out = out * poch_inv(1, kb, kb, order);
    out = out * poch_inv(0, 1, 1, order);
    return out;
}

TruncatedSeries gf_D_resmult(Int k, Int b, Int t, Int order) {
    require_kb(k, b);
    require_t(k, t);
    Int kb = checked_mul(k, b);
    TruncatedSeries out = pochhammer(PolyZW::one_minus_z(), 0, kb, kb, order);
    out = out * poch_inv(0, 1, 1, order);
    out = out * poch_inv(0, kb, kb, order);
    // Factor per i: 1 + (w - 1) q^(t*b*i) - w q^(k*b*i).
    PolyZW w_minus_1 = PolyZW::monomial(1, 0, 1) - PolyZW(1);
    PolyZW minus_w = PolyZW::monomial(-1, 0, 1);
    for (Int i = 1; checked_mul(t, checked_mul(b, i)) <= order; ++i) {
        std::vector<std::pair<Int, PolyZW>> extras;
        extras.emplace_back(t * b * i, w_minus_1);
        if (kb * i <= order) extras.emplace_back(kb * i, minus_w);
        mul_one_plus(out, extras);
    }
    return out;
}

TruncatedSeries gf_Dbar(Int k, Int b, Int order) {
    require_kb(k, b);
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    Int kb = checked_mul(k, b);
    // Parts not divisible by b, unrestricted.
    TruncatedSeries out = pochhammer(PolyZW(1), 0, b, b, order) * poch_inv(0, 1, 1, order);
    for (Int i = 1; checked_mul(b, i) <= order; ++i) {
        Int bi = b * i;
        // Residual multiplicities 1..k-1 of the part b*i.
        std::vector<std::pair<Int, PolyZW>> residuals;
        for (Int a = 1; a <= k - 1 && a * bi <= order; ++a) {
            residuals.emplace_back(a * bi, PolyZW(1));
        }
        if (!residuals.empty()) mul_one_plus(out, residuals);
        // Quotient blocks: r copies of k occurrences, tracked by z w^r.
        std::vector<std::pair<Int, PolyZW>> quotients;
        for (Int r = 1; checked_mul(r, checked_mul(kb, i)) <= order; ++r) {
            quotients.emplace_back(r * kb * i, PolyZW::monomial(1, 1, r));
        }
        if (!quotients.empty()) mul_one_plus(out, quotients);
    }
    return out;
}

TruncatedSeries leibniz_d_dw_at_1(std::span<const TruncatedSeries> factors) {
    if (factors.empty()) throw std::invalid_argument("need at least one factor");
    Int order = factors.front().order();
    std::vector<TruncatedSeries> at_w1;
    at_w1.reserve(factors.size());
    for (const auto& f : factors) {
        require_same_order(f, factors.front());
        at_w1.push_back(f.subst_w1());
    }
    TruncatedSeries total(order);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        TruncatedSeries term = factors[i].d_dw_at_1();
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j != i) term = term * at_w1[j];
        }
        total += term;
    }
    return total;
}

} // namespace pil::qseries
