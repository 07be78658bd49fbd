#include "obstruct/ring.hpp"

#include <charconv>

namespace obstruct {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_integral(const Scalar& x) { return x.get_den() == 1; }

}  // namespace

Ring Ring::integers() { return Ring(RingKind::Integers, 0); }
Ring Ring::rationals() { return Ring(RingKind::Rationals, 0); }

Ring Ring::prime_field(unsigned long p) {
  if (!is_prime(p)) {
    throw Error("ring: Z/" + std::to_string(p) + " is not a prime field");
  }
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    unsigned long p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return prime_field(p);
    }
  }
  throw Error("ring: unknown ring '" + std::string(text) + "' (expected Z, Q or Z/p)");
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "Z/" + std::to_string(p_);
  }
  return "?";
}

Scalar Ring::normalize(const Scalar& x) const {
  switch (kind_) {
    case RingKind::Rationals:
      return x;
    case RingKind::Integers:
      if (!is_integral(x)) throw Error("ring: " + x.get_str() + " is not an integer");
      return x;
    case RingKind::PrimeField: {
      if (!is_integral(x)) throw Error("ring: " + x.get_str() + " is not a residue");
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_num_mpz_t(), p_);
      return Scalar(r);
    }
  }
  return x;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Scalar Ring::neg(const Scalar& a) const {
  Scalar r = -a;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

bool Ring::is_unit(const Scalar& a) const {
  if (kind_ == RingKind::Integers) return a == 1 || a == -1;
  return a != 0;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw Error("ring: " + format(a) + " is not a unit in " + name());
  switch (kind_) {
    case RingKind::Integers:
      return a;
    case RingKind::Rationals:
      return 1 / a;
    case RingKind::PrimeField: {
      mpz_class inv;
      mpz_class p(p_);
      mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
      return Scalar(inv);
    }
  }
  return a;
}

Scalar Ring::canonical_associate(const Scalar& a) const {
  if (a == 0) return a;
  if (kind_ == RingKind::Integers) return abs(a);
  return Scalar(1);
}

Scalar Ring::unit_part(const Scalar& a) const {
  if (a == 0) return Scalar(1);
  if (kind_ == RingKind::Integers) return Scalar(a < 0 ? -1 : 1);
  return a;
}

mpz_class Ring::euclidean_size(const Scalar& a) const {
  if (kind_ == RingKind::Integers) return abs(a.get_num());
  return a == 0 ? mpz_class(0) : mpz_class(1);
}

std::pair<Scalar, Scalar> Ring::divmod(const Scalar& a, const Scalar& b) const {
  if (b == 0) throw Error("ring: division by zero");
  if (kind_ == RingKind::Integers) {
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return {Scalar(q), Scalar(r)};
  }
  return {mul(a, inverse(b)), Scalar(0)};
}

bool Ring::divides(const Scalar& d, const Scalar& a) const {
  if (d == 0) return a == 0;
  return divmod(a, d).second == 0;
}

std::string Ring::format(const Scalar& a) const { return a.get_str(); }

Scalar Ring::parse_scalar(std::string_view text) const {
  Scalar value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw Error("ring: malformed scalar literal '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw Error("ring: zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  if (kind_ != RingKind::Rationals && text.find('/') != std::string_view::npos) {
    throw Error("ring: fraction literal '" + std::string(text) + "' outside Q");
  }
  return normalize(value);
}

}  // namespace obstruct
