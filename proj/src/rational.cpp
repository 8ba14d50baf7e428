#include "braidrep/rational.hpp"

#include "braidrep/errors.hpp"

#include <cctype>

namespace braidrep {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), static_cast<long>(num));
  mpz_set_si(q.get_den_mpz_t(), static_cast<long>(den));
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  Rational q;
  q.get_num().set_str(std::string(num), 10);
  q.get_den().set_str(std::string(den), 10);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) q.get_num() = -q.get_num();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace braidrep
