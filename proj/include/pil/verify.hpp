#pragma once

#include <span>
#include <string_view>

#include "pil/report.hpp"

namespace pil::verify {

struct Grid {
    Int n_max = 30;
    Int j_max = 3;
    std::vector<Int> k_values{2, 3};
    std::vector<Int> b_values{1, 2};
};

// Each check computes its left- and right-hand sides through independent
// code paths (enumeration vs series vs bijection transport) and reports any
// disagreeing grid cell.

// count_O == count_D == [z^j q^n] gf_O == [z^j q^n] gf_D.
VerificationReport check_main_theorem(const Grid& grid);

// excess == (k-1)((j+1)O_{j+1} - j O_j), the D-side form, and (k-1) | excess.
// Rejects grids containing k = 1.
VerificationReport check_beck(const Grid& grid);

// Cumulative excess == (k-1)(j+1) O_{j+1}.
VerificationReport check_corollary(const Grid& grid);

// excess_refined(t) == (j+1)O_{j+1} - j O_j for every t in [1, k-1].
VerificationReport check_refinement(const Grid& grid);

// j = 0 specialization: count_O(0,k,b,n) == count_D(0,k,b,n).
VerificationReport check_hovey(const Grid& grid);

// b = 1 family: count_O(j,k,1,n) == count_D(j,k,1,n); the j = 0 rows are
// Glaisher's identity (Euler at k = 2), the rest Franklin's.
VerificationReport check_glaisher_franklin(const Grid& grid);

// count_O1k_u == count_D1k_u, plus sum over u recovers count_O(1,k,1,n).
VerificationReport check_aab(const Grid& grid);

// fu_tang_lhs == count_O(1,k,1,n) == count_D(1,k,1,n).
VerificationReport check_fu_tang(const Grid& grid);

// andrews_second_lhs == count_D(1,3,1,n) == count_O(1,3,1,n).
VerificationReport check_andrews_second(const Grid& grid);

// Exact series-level identities at truncation N:
//   d/dw(gf_O_w - gf_D_w)|_{w=1} == (k-1)(1-z) gf_jO
//   d/dw(gf_O_class(t) - gf_O_class0 - gf_D_resmult(t))|_{w=1} == (1-z) gf_jO
//   gf_Dbar == gf_O_class0
VerificationReport check_series_identities(Int order, std::span<const Int> k_set,
                                           std::span<const Int> b_set);

struct CheckInfo {
    std::string_view name;
    std::string_view summary;
    Grid default_grid;
    Int default_trunc = 0; // only series_identities uses it
};

std::span<const CheckInfo> check_registry();

// Dispatch by registry name; throws std::invalid_argument for unknown names.
VerificationReport run_check(std::string_view name, const Grid& grid, Int trunc_order);

} // namespace pil::verify
