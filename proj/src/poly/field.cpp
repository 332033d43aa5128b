#include "binext/poly/field.hpp"

#include <charconv>
#include <tuple>
#include <utility>

namespace binext::poly {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "characteristic must be an odd prime below 2^31, got " +
                                             std::to_string(p));
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  return from_int(t);
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

std::string FieldSpec::to_string() const {
  return prime ? std::to_string(*prime) : std::string("rational");
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "QQ" || text == "rationals") return rational();
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value >= (1ull << 31) ||
      !is_prime(value) || value < 3) {
    throw Error(ErrorCode::InvalidField,
                "expected \"rational\" or an odd prime below 2^31, got '" + std::string(text) + "'");
  }
  return gf(static_cast<std::uint32_t>(value));
}

}  // namespace binext::poly
