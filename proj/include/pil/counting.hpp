#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "pil/partition.hpp"

namespace pil::counting {

// The (j, k, b) triple selecting a counting family.
struct Params {
    Int j = 0;
    Int k = 1;
    Int b = 1;
    friend auto operator<=>(const Params&, const Params&) = default;
};

// Classification indices: a partition lies in exactly one O-class and one
// D-class for every (k, b).
Int o_index(const Partition& p, Int k, Int b); // distinct parts divisible by k*b
Int d_index(const Partition& p, Int k, Int b); // distinct parts divisible by b with mult >= k

bool is_in_O(const Partition& p, Int j, Int k, Int b);
bool is_in_D(const Partition& p, Int j, Int k, Int b);

// Sum of floor(s_i / k) over parts i divisible by b.
Int u_sum(const Partition& p, Int b, Int k);

// All counting below is by exhaustive enumeration of the partitions of n;
// this module is the oracle the series and bijection paths are checked
// against.
Int count_O(Int j, Int k, Int b, Int n);
Int count_D(Int j, Int k, Int b, Int n);
Int count_O_le(Int j, Int k, Int b, Int n); // sum of count_O over 0..j
Int count_D_le(Int j, Int k, Int b, Int n);

// Refinement by total number of parts.
Int count_O_by_length(Int j, Int k, Int b, Int m, Int n);
Int count_D_by_length(Int j, Int k, Int b, Int m, Int n);

// Members of the O-class with exactly m total parts == t*b (mod k*b).
Int count_O_class(Int j, Int k, Int b, Int t, Int m, Int n);

// Members of the D-class with exactly m distinct parts divisible by b whose
// residual multiplicity mod k is >= t.
Int count_D_resmult(Int j, Int k, Int b, Int t, Int m, Int n);

// Members of the D-class with u_sum == m.
Int count_Dbar(Int j, Int k, Int b, Int m, Int n);

// Excess in total parts of the O-class over the D-class.
Int excess(Int j, Int k, Int b, Int n);
Int excess_cumulative(Int j, Int k, Int b, Int n); // sum of excess over 0..j

// sum_{pi in O} (l_{kb,tb} - l_{kb,0}) - sum_{pi in D} lbar_{b,0,t}.
Int excess_refined(Int j, Int k, Int b, Int t, Int n);

// One distinct part divisible by k, repeated exactly u times.
Int count_O1k_u(Int k, Int u, Int n);
// One distinct part with multiplicity >= k, that part equal to u.
Int count_D1k_u(Int k, Int u, Int n);

// sum_{pi in O_{0,k}} l_{k,1} - sum_{pi in D_{0,k}} lbar.
Int fu_tang_lhs(Int k, Int n);
// sum_{pi in D_{0,2}} l - sum_{pi in O_{0,2}} lbar.
Int andrews_second_lhs(Int n);
// Partitions with exactly one part appearing exactly three times and every
// other part appearing exactly once: the counting side of Andrews' second
// companion identity. (Not the same family as count_D(1,3,1,n): that one
// admits higher multiplicities, e.g. 1^4 at n = 4, and does not match the
// excess sum.)
Int andrews_second_rhs(Int n);

// Persisted count rows, keyed by (family, j, k, b, t, m, n). Unused indices
// stay empty. Purely a cache: consumers decide when to trust it.
class CountTable {
public:
    struct Key {
        std::string family;
        std::optional<Int> j, k, b, t, m;
        Int n = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    struct Row {
        Int value = 0;
        std::string provenance = "enumeration";
    };

    // Inserting the same key twice with different values is an error.
    void insert(const Key& key, Int value, std::string provenance = "enumeration");
    void merge(const CountTable& other);
    std::optional<Int> lookup(const Key& key) const;
    std::size_t size() const { return rows_.size(); }

    // CSV with header "family,j,k,b,t,m,n,value", rows sorted by key.
    void save_csv(std::ostream& out) const;
    static CountTable load_csv(std::istream& in);

private:
    std::map<Key, Row> rows_;
};

} // namespace pil::counting
