#include "pil/counting.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace pil::counting {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void validate_jkb(Int j, Int k, Int b) {
    require(j >= 0, "j must be >= 0");
    require(k >= 1, "k must be >= 1");
    require(b >= 1, "b must be >= 1");
}

void validate_n(Int n) { require(n >= 0, "n must be >= 0"); }

// Counts partitions of n satisfying the predicate.
template <typename Pred>
Int count_where(Int n, Pred&& pred) {
    Int count = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (pred(p)) count = checked_add(count, 1);
    });
    return count;
}

} // namespace

Int o_index(const Partition& p, Int k, Int b) {
    Int kb = checked_mul(k, b);
    Int count = 0;
    for (const auto& pp : p.pairs()) {
        if (pp.part % kb == 0) ++count;
    }
    return count;
}

Int d_index(const Partition& p, Int k, Int b) {
    Int count = 0;
    for (const auto& pp : p.pairs()) {
        if (pp.part % b == 0 && pp.mult >= k) ++count;
    }
    return count;
}

bool is_in_O(const Partition& p, Int j, Int k, Int b) {
    validate_jkb(j, k, b);
    return o_index(p, k, b) == j;
}

bool is_in_D(const Partition& p, Int j, Int k, Int b) {
    validate_jkb(j, k, b);
    return d_index(p, k, b) == j;
}

Int u_sum(const Partition& p, Int b, Int k) {
    require(b >= 1, "b must be >= 1");
    require(k >= 1, "k must be >= 1");
    Int total = 0;
    for (const auto& [part, mult] : p.pairs()) {
        if (part % b == 0) total = checked_add(total, mult / k);
    }
    return total;
}

Int count_O(Int j, Int k, Int b, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    return count_where(n, [&](const Partition& p) { return o_index(p, k, b) == j; });
}

Int count_D(Int j, Int k, Int b, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    return count_where(n, [&](const Partition& p) { return d_index(p, k, b) == j; });
}

Int count_O_le(Int j, Int k, Int b, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    return count_where(n, [&](const Partition& p) { return o_index(p, k, b) <= j; });
}

Int count_D_le(Int j, Int k, Int b, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    return count_where(n, [&](const Partition& p) { return d_index(p, k, b) <= j; });
}

Int count_O_by_length(Int j, Int k, Int b, Int m, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    require(m >= 0, "m must be >= 0");
    return count_where(n, [&](const Partition& p) {
        return o_index(p, k, b) == j && total_parts(p) == m;
    });
}

Int count_D_by_length(Int j, Int k, Int b, Int m, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    require(m >= 0, "m must be >= 0");
    return count_where(n, [&](const Partition& p) {
        return d_index(p, k, b) == j && total_parts(p) == m;
    });
}

Int count_O_class(Int j, Int k, Int b, Int t, Int m, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    require(m >= 0, "m must be >= 0");
    require(t >= 0 && t <= k - 1, "t must lie in [0, k-1]");
    Int kb = checked_mul(k, b);
    Int residue = checked_mul(t, b);
    return count_where(n, [&](const Partition& p) {
        return o_index(p, k, b) == j && parts_in_class(p, kb, residue) == m;
    });
}

Int count_D_resmult(Int j, Int k, Int b, Int t, Int m, Int n) {
    validate_jkb(j, k, b);
    require(k >= 2, "k must be >= 2");
    validate_n(n);
    require(m >= 0, "m must be >= 0");
    require(t >= 0 && t <= k - 1, "t must lie in [0, k-1]");
    return count_where(n, [&](const Partition& p) {
        return d_index(p, k, b) == j && distinct_parts_resmult_at_least(p, b, k, t) == m;
    });
}

Int count_Dbar(Int j, Int k, Int b, Int m, Int n) {
    validate_jkb(j, k, b);
    require(k >= 2, "k must be >= 2");
    validate_n(n);
    require(m >= 0, "m must be >= 0");
    return count_where(n, [&](const Partition& p) {
        return d_index(p, k, b) == j && u_sum(p, b, k) == m;
    });
}

Int excess(Int j, Int k, Int b, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    Int total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (o_index(p, k, b) == j) total = checked_add(total, total_parts(p));
        if (d_index(p, k, b) == j) total = checked_sub(total, total_parts(p));
    });
    return total;
}

Int excess_cumulative(Int j, Int k, Int b, Int n) {
    validate_jkb(j, k, b);
    validate_n(n);
    Int total = 0;
    for (Int i = 0; i <= j; ++i) total = checked_add(total, excess(i, k, b, n));
    return total;
}

Int excess_refined(Int j, Int k, Int b, Int t, Int n) {
    validate_jkb(j, k, b);
    require(k >= 2, "k must be >= 2");
    require(t >= 1 && t <= k - 1, "t must lie in [1, k-1]");
    validate_n(n);
    Int kb = checked_mul(k, b);
    Int tb = checked_mul(t, b);
    Int total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (o_index(p, k, b) == j) {
            total = checked_add(total, parts_in_class(p, kb, tb));
            total = checked_sub(total, parts_in_class(p, kb, 0));
        }
        if (d_index(p, k, b) == j) {
            total = checked_sub(total, distinct_parts_resmult_at_least(p, b, k, t));
        }
    });
    return total;
}

Int count_O1k_u(Int k, Int u, Int n) {
    require(k >= 2, "k must be >= 2");
    require(u >= 1, "u must be >= 1");
    validate_n(n);
    return count_where(n, [&](const Partition& p) {
        Int seen = 0;
        Int mult = 0;
        for (const auto& pp : p.pairs()) {
            if (pp.part % k == 0) {
                ++seen;
                mult = pp.mult;
            }
        }
        return seen == 1 && mult == u;
    });
}

Int count_D1k_u(Int k, Int u, Int n) {
    require(k >= 2, "k must be >= 2");
    require(u >= 1, "u must be >= 1");
    validate_n(n);
    return count_where(n, [&](const Partition& p) {
        Int seen = 0;
        Int part = 0;
        for (const auto& pp : p.pairs()) {
            if (pp.mult >= k) {
                ++seen;
                part = pp.part;
            }
        }
        return seen == 1 && part == u;
    });
}

Int fu_tang_lhs(Int k, Int n) {
    require(k >= 2, "k must be >= 2");
    validate_n(n);
    Int total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (o_index(p, k, 1) == 0) total = checked_add(total, parts_in_class(p, k, 1));
        if (d_index(p, k, 1) == 0) total = checked_sub(total, distinct_parts(p));
    });
    return total;
}

Int andrews_second_lhs(Int n) {
    validate_n(n);
    Int total = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (d_index(p, 2, 1) == 0) total = checked_add(total, total_parts(p));
        if (o_index(p, 2, 1) == 0) total = checked_sub(total, distinct_parts(p));
    });
    return total;
}

Int andrews_second_rhs(Int n) {
    validate_n(n);
    return count_where(n, [&](const Partition& p) {
        Int triples = 0;
        for (const auto& pp : p.pairs()) {
            if (pp.mult == 3) {
                ++triples;
            } else if (pp.mult != 1) {
                return false;
            }
        }
        return triples == 1;
    });
}

void CountTable::insert(const Key& key, Int value, std::string provenance) {
    auto [it, inserted] = rows_.try_emplace(key, Row{value, std::move(provenance)});
    if (!inserted && it->second.value != value) {
        throw std::logic_error("conflicting values for count table key");
    }
}

void CountTable::merge(const CountTable& other) {
    for (const auto& [key, row] : other.rows_) insert(key, row.value, row.provenance);
}

std::optional<Int> CountTable::lookup(const Key& key) const {
    auto it = rows_.find(key);
    if (it == rows_.end()) return std::nullopt;
    return it->second.value;
}

namespace {

std::string field(const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::optional<Int> parse_field(std::string_view s) {
    if (s.empty()) return std::nullopt;
    Int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer field in count table: '" + std::string(s) + "'");
    }
    return value;
}

} // namespace

void CountTable::save_csv(std::ostream& out) const {
    out << "family,j,k,b,t,m,n,value\n";
    for (const auto& [key, row] : rows_) {
        out << key.family << ',' << field(key.j) << ',' << field(key.k) << ','
            << field(key.b) << ',' << field(key.t) << ',' << field(key.m) << ','
            << key.n << ',' << row.value << '\n';
    }
}

CountTable CountTable::load_csv(std::istream& in) {
    CountTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            if (line != "family,j,k,b,t,m,n,value") {
                throw std::invalid_argument("bad count table header: '" + line + "'");
            }
            continue;
        }
        if (line.empty()) continue;
        std::array<std::string_view, 8> fields;
        std::string_view rest = line;
        for (std::size_t i = 0; i < 8; ++i) {
            if (i == 7) {
                if (rest.find(',') != std::string_view::npos) {
                    throw std::invalid_argument("too many fields in count table row: '" + line + "'");
                }
                fields[i] = rest;
                break;
            }
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) {
                throw std::invalid_argument("too few fields in count table row: '" + line + "'");
            }
            fields[i] = rest.substr(0, comma);
            rest = rest.substr(comma + 1);
        }
        Key key;
        key.family = std::string(fields[0]);
        key.j = parse_field(fields[1]);
        key.k = parse_field(fields[2]);
        key.b = parse_field(fields[3]);
        key.t = parse_field(fields[4]);
        key.m = parse_field(fields[5]);
        auto n = parse_field(fields[6]);
        auto value = parse_field(fields[7]);
        if (!n || !value) throw std::invalid_argument("missing n or value in count table row: '" + line + "'");
        key.n = *n;
        table.insert(key, *value, "cache");
    }
    return table;
}

} // namespace pil::counting
