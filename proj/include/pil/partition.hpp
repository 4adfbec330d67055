#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pil/checked.hpp"

namespace pil {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PartPair {
    Int part = 0;
    Int mult = 0;
    friend auto operator<=>(const PartPair&, const PartPair&) = default;
};

namespace detail {
struct PartitionAccess;
}

/// A partition in canonical form: (part, multiplicity) pairs, parts strictly
/// increasing, every part and multiplicity >= 1. The default-constructed
/// value is the empty partition of 0.
class Partition {
public:
    Partition() = default;

    // Canonicalizes (sorts, merges duplicate parts) and validates.
    static Partition from_pairs(std::vector<PartPair> pairs);
    static Partition from_parts(const std::vector<Int>& parts);

    // Accepts either exponent form ("4^5 6 12^7") or sum form ("3+1+1").
    // The empty (or all-whitespace) string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<PartPair>& pairs() const noexcept { return pairs_; }
    bool empty() const noexcept { return pairs_.empty(); }

    Int weight() const;
    Int multiplicity(Int part) const; // s_i; 0 for absent parts

    // Canonical text: ascending parts, exponent form, "^1" omitted.
    std::string str() const;
    // Ascending parts with every exponent written out ("1^1 4^1 8^1").
    std::string exponent_str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    friend struct detail::PartitionAccess;
    std::vector<PartPair> pairs_;
};

struct MultDecomposition {
    Int residual = 0;  // s mod k
    Int quotient = 0;  // floor(s / k)
    // Digits of the quotient base k, least significant first, so
    // s = residual + sum_i digits[i] * k^(i+1). Empty for k = 1 (no base-1
    // digit expansion) and for quotient 0.
    std::vector<Int> base_k_digits;
};

struct KadicForm {
    Int alpha = 0; // k-adic valuation of part/b
    Int core = 1;  // part / (b * k^alpha), not divisible by k
};

Int total_parts(const Partition& p);    // l(pi)
Int distinct_parts(const Partition& p); // lbar(pi)

// Number of parts == residue (mod modulus), counted with multiplicity.
Int parts_in_class(const Partition& p, Int modulus, Int residue);

// Multiplicity decomposition s = r + k*u of the given part's multiplicity.
MultDecomposition mult_decomposition(const Partition& p, Int part, Int k);

// Distinct parts divisible by b whose residual multiplicity mod k is >= t.
Int distinct_parts_resmult_at_least(const Partition& p, Int b, Int k, Int t);

// Writes part = b * k^alpha * core with k not dividing core. Requires b | part.
KadicForm kadic_form(Int part, Int b, Int k);

// All partitions of n, each exactly once, ordered by lexicographically
// decreasing flat part sequence (largest part first): for n = 5 the order is
// 5, 4+1, 3+2, 3+1+1, 2+2+1, 2+1+1+1, 1+1+1+1+1. n = 0 yields the empty
// partition.
std::vector<Partition> enumerate_partitions(Int n);

// Callback form of the same enumeration. The Partition reference passed to
// the callback is reused between calls; copy it to keep it.
void for_each_partition(Int n, const std::function<void(const Partition&)>& fn);

} // namespace pil
