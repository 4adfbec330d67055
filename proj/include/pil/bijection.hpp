#pragma once

#include <utility>
#include <vector>

#include "pil/partition.hpp"
#include "pil/report.hpp"

namespace pil::bijection {

// The map from the O-side to the D-side. Per part i with multiplicity s:
//   k*b | i          -> (i/k)^(k*s)
//   b | i, k*b !| i  -> i^r, (k*i)^(u_1), (k^2*i)^(u_2), ...
//                       with s = r + u_1*k + u_2*k^2 + ... base k
//   b !| i           -> unchanged
// Outputs landing on the same part value accumulate. k = 1 is the identity.
Partition phi(const Partition& p, Int k, Int b);

// The inverse map. Per part i with multiplicity s = r + k*u:
//   b | i   -> (k*i)^u, (i/k^alpha)^(k^alpha * r)   with i = b k^alpha m, k !| m
//   b !| i  -> unchanged
// Zero-multiplicity outputs are omitted. k = 1 is the identity.
Partition psi(const Partition& p, Int k, Int b);

// Exhaustively checks, for every partition of every n <= n_max, that both
// round trips are the identity and that phi/psi preserve weight and the
// class index j. Failures carry the witness partition.
verify::VerificationReport verify_roundtrip(Int n_max, Int k, Int b);

// The eight partitions with o_index 3 for (k,b) = (2,2) at n = 29, in
// enumeration order, paired with their phi images.
std::vector<std::pair<Partition, Partition>> table29_rows();

// Rendered two-column table, one "LEFT <-> RIGHT" row per line, explicit
// exponents. Byte-stable; compared against the checked-in golden file.
std::string table29_text();

} // namespace pil::bijection
