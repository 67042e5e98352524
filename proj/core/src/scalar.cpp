#include "rpa/scalar.hpp"

#include <stdexcept>

namespace rpa {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
  if (negative) n = -n;
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& s) { return s.get_str(10); }

}  // namespace rpa
