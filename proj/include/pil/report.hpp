#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pil/checked.hpp"

namespace pil::verify {

struct Failure {
    // Ordered (name, value) pairs identifying the failing grid cell.
    std::vector<std::pair<std::string, Int>> params;
    Int lhs = 0;
    Int rhs = 0;
    std::optional<std::string> witness; // partition text when applicable
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    std::string check;
    // Grid descriptor, ordered: single values render as numbers, sets as
    // arrays.
    std::vector<std::pair<std::string, std::vector<Int>>> grid;
    std::vector<Failure> failures;
    std::chrono::milliseconds elapsed{0};

    bool pass() const { return failures.empty(); }

    // {"check":..., "grid":{...}, "failures":[...], "pass":..., "elapsed_ms":...}
    // Deterministic apart from elapsed_ms; pass include_elapsed = false for
    // byte-stable output.
    std::string to_json(bool include_elapsed = true) const;
    std::string to_text() const;
};

} // namespace pil::verify
