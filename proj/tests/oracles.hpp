// Independent oracles for test expectations. Everything here is deliberately
// written against different algorithms than the library under test.
#pragma once

#include <random>
#include <vector>

#include "pil/checked.hpp"
#include "pil/qseries.hpp"

namespace oracles {

using pil::Int;

// Partition numbers via the pentagonal-number recurrence
// p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<Int> partition_numbers(Int n_max) {
    std::vector<Int> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (Int n = 1; n <= n_max; ++n) {
        Int total = 0;
        for (Int k = 1;; ++k) {
            Int g1 = k * (3 * k - 1) / 2;
            Int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) total = pil::checked_add(total, sign * p[static_cast<std::size_t>(n - g1)]);
            if (g2 <= n) total = pil::checked_add(total, sign * p[static_cast<std::size_t>(n - g2)]);
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

inline Int divisor_count(Int n) {
    Int count = 0;
    for (Int d = 1; d <= n; ++d) {
        if (n % d == 0) ++count;
    }
    return count;
}

// Straight convolution with PolyZW arithmetic, no scratch buffers: the
// reference implementation series multiplication is checked against.
inline pil::qseries::TruncatedSeries naive_mul(const pil::qseries::TruncatedSeries& a,
                                               const pil::qseries::TruncatedSeries& b) {
    pil::qseries::TruncatedSeries out(a.order());
    for (Int n = 0; n <= a.order(); ++n) {
        pil::qseries::PolyZW c;
        for (Int i = 0; i <= n; ++i) c += a[i] * b[n - i];
        out.set(n, c);
    }
    return out;
}

// Deterministic sparse random series for property-style checks.
inline pil::qseries::TruncatedSeries random_series(std::mt19937& rng, Int order, Int max_z,
                                                   Int max_w, Int max_abs_coeff) {
    std::uniform_int_distribution<Int> coeff(-max_abs_coeff, max_abs_coeff);
    std::uniform_int_distribution<Int> zdeg(0, max_z);
    std::uniform_int_distribution<Int> wdeg(0, max_w);
    std::uniform_int_distribution<int> nterms(0, 3);
    pil::qseries::TruncatedSeries out(order);
    for (Int n = 0; n <= order; ++n) {
        pil::qseries::PolyZW c;
        int count = nterms(rng);
        for (int i = 0; i < count; ++i) {
            c += pil::qseries::PolyZW::monomial(coeff(rng), zdeg(rng), wdeg(rng));
        }
        out.set(n, c);
    }
    return out;
}

} // namespace oracles
