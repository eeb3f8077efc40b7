#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "awm/bigint.hpp"
#include "awm/challenge.hpp"

namespace awm {

// Exact action/state counts of the abstraction levels.
//
//   level 1: |A| = 2N              states 2^(|A|-1)
//   level 2: |A| = 3N              states 2^(|A|-1)
//   level 3: |A| = 3(N + N*M*O)    states 2^(|A|-1)
//   level 4: |A| = 2N * sum_{i=0..M} C(M,i) O^i = 2N(1+O)^M  (P = M)
//            states 2^|A|
//
// All counts are arbitrary precision.

// Throws InvalidConfig for N = 0 or missing/zero M, O at level 3.
BigInt count_actions(Level level, std::uint64_t n, std::optional<std::uint64_t> m = std::nullopt,
                     std::optional<std::uint64_t> o = std::nullopt);
BigInt count_states(Level level, std::uint64_t n, std::optional<std::uint64_t> m = std::nullopt,
                    std::optional<std::uint64_t> o = std::nullopt);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// Level-4 count with parameter lists of any length up to M. The binomial sum
// and the closed form are both evaluated; disagreement throws std::logic_error.
BigInt count_actions_l4(std::uint64_t n, std::uint64_t m, std::uint64_t o);
BigInt count_actions_l4_sum(std::uint64_t n, std::uint64_t m, std::uint64_t o);
BigInt count_actions_l4_closed(std::uint64_t n, std::uint64_t m, std::uint64_t o);

// Level-4 count for a maximum list length P. Only P = 0, P = 1 and P = M have
// a known closed form; any other P throws InvalidConfig.
BigInt count_actions_l4(std::uint64_t n, std::uint64_t m, std::uint64_t o, std::uint64_t p);

// Materialising 2^|A| is refused above this many bits.
inline constexpr std::uint64_t kMaxStateExponent = std::uint64_t{1} << 22;

struct ComplexityReport {
    int level = 1;  // 1..4
    std::uint64_t n = 0;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> o;
    std::optional<std::uint64_t> p;  // level 4 only
    BigInt actions;
    BigInt states;
};

// Throws InvalidConfig for out-of-domain inputs or state counts above
// kMaxStateExponent bits.
ComplexityReport complexity_report(int level, std::uint64_t n, std::optional<std::uint64_t> m = std::nullopt,
                                   std::optional<std::uint64_t> o = std::nullopt,
                                   std::optional<std::uint64_t> p = std::nullopt);

// Mantissa/exponent rendering, e.g. 524288 -> "5.2e5" with 2 significant digits.
std::string scientific(const BigInt& value, int significant = 2);

// JSON object; big integers that do not fit in 64 bits are decimal strings.
std::string to_json(const ComplexityReport& report);

// Aligned text table with the column layout of the level's summary table
// (files | actions | states, plus M/O columns at level 3). Exact values up to
// 12 digits, "≈" mantissa form beyond.
std::string format_table(const std::vector<ComplexityReport>& rows);

// The (N, M, O) rows tabulated for each level 1..3.
std::vector<ComplexityReport> reference_rows(int level);

}  // namespace awm
