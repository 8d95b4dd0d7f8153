#include "gradrep/scalar.hpp"

#include <string>

#include "gradrep/error.hpp"

namespace gradrep {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (text[i] != ' ') {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

namespace detail {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InputError("element not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace detail

Field Field::prime(std::uint64_t p) {
  if (p > 0x7fffffffULL || !is_prime(p))
    throw InputError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  Field f;
  f.kind = Kind::Prime;
  f.modulus = static_cast<std::uint32_t>(p);
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad field tag '" + std::string(text) + "'");
    return prime(std::stoull(digits));
  }
  throw InputError("bad field tag '" + std::string(text) + "' (expected \"Q\" or \"Fp:<p>\")");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus);
}

Scalar Scalar::from_int(Field f, long value) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = value;
  } else {
    long m = value % static_cast<long>(f.modulus);
    if (m < 0) m += f.modulus;
    s.r_ = static_cast<std::uint32_t>(m);
  }
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
  } else {
    std::uint32_t num = reduce(q.get_num(), f.modulus);
    std::uint32_t den = reduce(q.get_den(), f.modulus);
    if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(f.modulus));
    s.r_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(num) * detail::mod_inverse(den, f.modulus)) % f.modulus);
  }
  return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string t = normalize_minus(text);
  if (t.empty()) throw InputError("empty scalar");
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InputError("bad scalar '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return from_rational(f, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw InputError("mixed field tags: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.modulus - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % field_.modulus);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + field_.modulus - o.r_) %
                                    field_.modulus);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) * o.r_) % field_.modulus);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = detail::mod_inverse(r_, field_.modulus);
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace gradrep
