#include "pil/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace pil {

namespace detail {
struct PartitionAccess {
    static std::vector<PartPair>& pairs(Partition& p) { return p.pairs_; }
};
} // namespace detail

Partition Partition::from_pairs(std::vector<PartPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Partition result;
    for (const auto& [part, mult] : pairs) {
        if (part < 1) throw std::invalid_argument("partition part must be >= 1");
        if (mult < 1) throw std::invalid_argument("partition multiplicity must be >= 1");
        if (!result.pairs_.empty() && result.pairs_.back().part == part) {
            result.pairs_.back().mult = checked_add(result.pairs_.back().mult, mult);
        } else {
            result.pairs_.push_back({part, mult});
        }
    }
    return result;
}

Partition Partition::from_parts(const std::vector<Int>& parts) {
    std::vector<PartPair> pairs;
    pairs.reserve(parts.size());
    for (Int p : parts) pairs.push_back({p, 1});
    return from_pairs(std::move(pairs));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

Int parse_number(std::string_view digits, std::string_view token, const char* what) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(std::string(what) + " out of range in token '" + std::string(token) + "'");
    }
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed token '" + std::string(token) + "'");
    }
    return value;
}

// Parses one exponent-form token, "P" or "P^M".
PartPair parse_token(std::string_view token) {
    std::string_view part_text = token;
    std::string_view mult_text;
    bool has_exp = false;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
        has_exp = true;
        part_text = token.substr(0, caret);
        mult_text = token.substr(caret + 1);
    }
    if (!part_text.empty() && part_text.front() == '-' && all_digits(part_text.substr(1))) {
        throw ParseError("negative part in token '" + std::string(token) + "'");
    }
    if (!all_digits(part_text) || (has_exp && !all_digits(mult_text))) {
        throw ParseError("malformed token '" + std::string(token) + "'");
    }
    Int part = parse_number(part_text, token, "part");
    if (part == 0) throw ParseError("zero part in token '" + std::string(token) + "'");
    Int mult = 1;
    if (has_exp) {
        mult = parse_number(mult_text, token, "exponent");
        if (mult == 0) throw ParseError("zero exponent in token '" + std::string(token) + "'");
    }
    return {part, mult};
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

} // namespace

Partition Partition::parse(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty()) return {};

    std::vector<PartPair> acc;
    if (body.find('+') != std::string_view::npos) {
        // Sum form: P+P+...+P
        size_t pos = 0;
        while (true) {
            size_t plus = body.find('+', pos);
            std::string_view piece = trim(body.substr(pos, plus == std::string_view::npos
                                                               ? std::string_view::npos
                                                               : plus - pos));
            if (piece.empty() || piece.find('^') != std::string_view::npos) {
                throw ParseError("malformed token '" + std::string(piece) + "' in sum form");
            }
            acc.push_back(parse_token(piece));
            if (plus == std::string_view::npos) break;
            pos = plus + 1;
        }
    } else {
        size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && is_space(body[pos])) ++pos;
            if (pos >= body.size()) break;
            size_t end = pos;
            while (end < body.size() && !is_space(body[end])) ++end;
            acc.push_back(parse_token(body.substr(pos, end - pos)));
            pos = end;
        }
    }
    return from_pairs(std::move(acc));
}

Int Partition::weight() const {
    Int total = 0;
    for (const auto& [part, mult] : pairs_) {
        total = checked_add(total, checked_mul(part, mult));
    }
    return total;
}

Int Partition::multiplicity(Int part) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), part,
                               [](const PartPair& pp, Int value) { return pp.part < value; });
    if (it != pairs_.end() && it->part == part) return it->mult;
    return 0;
}

std::string Partition::str() const {
    std::string out;
    for (const auto& [part, mult] : pairs_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(part);
        if (mult != 1) {
            out += '^';
            out += std::to_string(mult);
        }
    }
    return out;
}

std::string Partition::exponent_str() const {
    std::string out;
    for (const auto& [part, mult] : pairs_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(part);
        out += '^';
        out += std::to_string(mult);
    }
    return out;
}

Int total_parts(const Partition& p) {
    Int total = 0;
    for (const auto& pp : p.pairs()) total = checked_add(total, pp.mult);
    return total;
}

Int distinct_parts(const Partition& p) {
    return static_cast<Int>(p.pairs().size());
}

Int parts_in_class(const Partition& p, Int modulus, Int residue) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    if (residue < 0 || residue >= modulus) {
        throw std::invalid_argument("residue must lie in [0, modulus)");
    }
    Int total = 0;
    for (const auto& [part, mult] : p.pairs()) {
        if (part % modulus == residue) total = checked_add(total, mult);
    }
    return total;
}

MultDecomposition mult_decomposition(const Partition& p, Int part, Int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    Int s = p.multiplicity(part);
    MultDecomposition dec;
    dec.residual = s % k;
    dec.quotient = s / k;
    if (k >= 2) {
        for (Int u = dec.quotient; u > 0; u /= k) {
            dec.base_k_digits.push_back(u % k);
        }
    }
    return dec;
}

Int distinct_parts_resmult_at_least(const Partition& p, Int b, Int k, Int t) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (t < 0 || t > k - 1) throw std::invalid_argument("t must lie in [0, k-1]");
    Int count = 0;
    for (const auto& [part, mult] : p.pairs()) {
        if (part % b == 0 && mult % k >= t) ++count;
    }
    return count;
}

KadicForm kadic_form(Int part, Int b, Int k) {
    if (part < 1) throw std::invalid_argument("part must be >= 1");
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (part % b != 0) throw std::invalid_argument("part must be divisible by b");
    KadicForm form;
    Int core = part / b;
    while (core % k == 0) {
        core /= k;
        ++form.alpha;
    }
    form.core = core;
    return form;
}

namespace {

void generate(Int rem, Int max_part, std::vector<PartPair>& desc, Partition& scratch,
              const std::function<void(const Partition&)>& fn) {
    if (rem == 0) {
        auto& out = detail::PartitionAccess::pairs(scratch);
        out.assign(desc.rbegin(), desc.rend());
        fn(scratch);
        return;
    }
    for (Int p = std::min(rem, max_part); p >= 1; --p) {
        bool merged = !desc.empty() && desc.back().part == p;
        if (merged) {
            ++desc.back().mult;
        } else {
            desc.push_back({p, 1});
        }
        generate(rem - p, p, desc, scratch, fn);
        if (merged) {
            --desc.back().mult;
        } else {
            desc.pop_back();
        }
    }
}

} // namespace

void for_each_partition(Int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    Partition scratch;
    std::vector<PartPair> desc;
    generate(n, n, desc, scratch, fn);
}

std::vector<Partition> enumerate_partitions(Int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace pil
