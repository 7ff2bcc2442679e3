#include "lieprobe/rational.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "lieprobe/errors.hpp"

namespace lieprobe {

Limits& Limits::global() {
  static Limits limits;
  return limits;
}

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    std::size_t start = (!str.empty() && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
    if (start == str.size()) throw ParseError("invalid rational '" + str + "'");
    for (std::size_t i = start; i < str.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(str[i])))
        throw ParseError("invalid rational '" + str + "'");
    if (str[0] == '+') str.erase(0, 1);
    return mpz_class(str, 10);
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), mpz_class(1));
  mpz_class num = parse_int(trim(text.substr(0, slash)));
  mpz_class den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t Rational::floor_int() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw ResourceGuardError("integer part too large");
  return f.get_si();
}

Rational Rational::frac() const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(r, value_.get_den());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw ValidationError("reciprocal of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace lieprobe

std::size_t std::hash<lieprobe::Rational>::operator()(const lieprobe::Rational& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.mpq().get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(r.mpq().get_den_mpz_t());
  return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(r.sign() < 0);
}
