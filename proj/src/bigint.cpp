#include "sl2tiling/bigint.hpp"

#include <cctype>

namespace sl2 {

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::optional<BigInt> parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
  }
  // mpz rejects a leading '+'.
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  BigInt value;
  if (value.set_str(digits, 10) != 0) return std::nullopt;
  return value;
}

std::optional<BigInt> exact_quotient(const BigInt& dividend, const BigInt& divisor) {
  if (divisor == 0) return std::nullopt;
  if (!mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t())) return std::nullopt;
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
  return quotient;
}

}  // namespace sl2
