#include "pil/bijection.hpp"

#include <map>

#include "pil/counting.hpp"

namespace pil::bijection {

namespace {

void validate_kb(Int k, Int b) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (b < 1) throw std::invalid_argument("b must be >= 1");
}

void emit(std::map<Int, Int>& acc, Int part, Int mult) {
    if (mult == 0) return;
    auto [it, inserted] = acc.try_emplace(part, mult);
    if (!inserted) it->second = checked_add(it->second, mult);
}

Partition collect(const std::map<Int, Int>& acc) {
    std::vector<PartPair> pairs;
    pairs.reserve(acc.size());
    for (const auto& [part, mult] : acc) pairs.push_back({part, mult});
    return Partition::from_pairs(std::move(pairs));
}

} // namespace

Partition phi(const Partition& p, Int k, Int b) {
    validate_kb(k, b);
    if (k == 1) return p;
    Int kb = checked_mul(k, b);
    std::map<Int, Int> acc;
    for (const auto& [part, mult] : p.pairs()) {
        if (part % kb == 0) {
            emit(acc, part / k, checked_mul(k, mult));
        } else if (part % b == 0) {
            MultDecomposition dec = mult_decomposition(p, part, k);
            emit(acc, part, dec.residual);
            Int scale = k;
            for (Int digit : dec.base_k_digits) {
                emit(acc, checked_mul(scale, part), digit);
                scale = checked_mul(scale, k);
            }
        } else {
            emit(acc, part, mult);
        }
    }
    return collect(acc);
}

Partition psi(const Partition& p, Int k, Int b) {
    validate_kb(k, b);
    if (k == 1) return p;
    std::map<Int, Int> acc;
    for (const auto& [part, mult] : p.pairs()) {
        if (part % b == 0) {
            Int residual = mult % k;
            Int quotient = mult / k;
            emit(acc, checked_mul(k, part), quotient);
            if (residual != 0) {
                KadicForm form = kadic_form(part, b, k);
                Int k_alpha = 1;
                for (Int e = 0; e < form.alpha; ++e) k_alpha = checked_mul(k_alpha, k);
                emit(acc, part / k_alpha, checked_mul(k_alpha, residual));
            }
        } else {
            emit(acc, part, mult);
        }
    }
    return collect(acc);
}

verify::VerificationReport verify_roundtrip(Int n_max, Int k, Int b) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (b < 1) throw std::invalid_argument("b must be >= 1");

    auto start = std::chrono::steady_clock::now();
    verify::VerificationReport report;
    report.check = "roundtrip";
    report.grid = {{"nmax", {n_max}}, {"k", {k}}, {"b", {b}}};

    for (Int n = 0; n <= n_max; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            auto fail = [&](const char* what, Int lhs, Int rhs) {
                report.failures.push_back({{{"n", n},
                                            {"k", k},
                                            {"b", b}},
                                           lhs,
                                           rhs,
                                           std::string(what) + ": " + p.str()});
            };
            Partition image = phi(p, k, b);
            Partition back = psi(image, k, b);
            if (back != p) fail("psi(phi(pi)) != pi", 0, 1);
            if (image.weight() != n) fail("phi weight", image.weight(), n);
            if (counting::d_index(image, k, b) != counting::o_index(p, k, b)) {
                fail("phi class transport", counting::d_index(image, k, b),
                     counting::o_index(p, k, b));
            }
            Partition pre = psi(p, k, b);
            Partition forth = phi(pre, k, b);
            if (forth != p) fail("phi(psi(pi)) != pi", 0, 1);
            if (pre.weight() != n) fail("psi weight", pre.weight(), n);
            if (counting::o_index(pre, k, b) != counting::d_index(p, k, b)) {
                fail("psi class transport", counting::o_index(pre, k, b),
                     counting::d_index(p, k, b));
            }
        });
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<std::pair<Partition, Partition>> table29_rows() {
    std::vector<std::pair<Partition, Partition>> rows;
    for_each_partition(29, [&](const Partition& p) {
        if (counting::o_index(p, 2, 2) == 3) {
            rows.emplace_back(p, phi(p, 2, 2));
        }
    });
    return rows;
}

std::string table29_text() {
    std::string out;
    for (const auto& [left, right] : table29_rows()) {
        out += left.exponent_str();
        out += " <-> ";
        out += right.exponent_str();
        out += '\n';
    }
    return out;
}

} // namespace pil::bijection
