#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sl2 {

// All tiling and frieze entries are exact; values grow exponentially with
// polygon size, so nothing here is allowed to overflow.
using BigInt = mpz_class;

std::string to_string(const BigInt& value);

// Parses an optionally signed decimal integer of arbitrary length.
// Returns nullopt on anything else (empty, stray characters, "+-").
std::optional<BigInt> parse_bigint(std::string_view text);

// Exact quotient if `divisor` divides `dividend`, nullopt otherwise.
std::optional<BigInt> exact_quotient(const BigInt& dividend, const BigInt& divisor);

}  // namespace sl2
