#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace obstruct {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact scalar. Integers and residues are stored with denominator 1.
using Scalar = mpq_class;

enum class RingKind { Integers, Rationals, PrimeField };

/// Coefficient ring: one of ZZ, QQ or ZZ/p. All arithmetic goes through the
/// ring so that entries stay reduced (residues in [0, p), fractions in
/// lowest terms).
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  /// Throws Error when p is not prime.
  static Ring prime_field(unsigned long p);
  /// Parses "Z", "Q" or "Z/p".
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  std::string name() const;

  /// Reduces a value into canonical form; throws when the value is not an
  /// element of the ring (a non-integral fraction over ZZ or ZZ/p).
  Scalar normalize(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  bool is_unit(const Scalar& a) const;
  /// Inverse of a unit; throws on non-units.
  Scalar inverse(const Scalar& a) const;
  /// Representative of the associate class: |a| over ZZ, 1 over fields.
  Scalar canonical_associate(const Scalar& a) const;
  /// The unit u with a = u * canonical_associate(a); 1 for a = 0.
  Scalar unit_part(const Scalar& a) const;

  /// Euclidean size used for pivot selection: |a| over ZZ, 0/1 over fields.
  mpz_class euclidean_size(const Scalar& a) const;
  /// (q, r) with a = q*b + r and size(r) < size(b); b must be nonzero.
  std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b) const;
  bool divides(const Scalar& d, const Scalar& a) const;

  std::string format(const Scalar& a) const;
  /// Parses an integer, "a/b" (QQ only) literal and normalizes it.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Ring(RingKind kind, unsigned long p) : kind_(kind), p_(p) {}

  RingKind kind_;
  unsigned long p_;
};

}  // namespace obstruct
