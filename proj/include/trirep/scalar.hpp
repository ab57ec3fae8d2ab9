#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace trirep {

// Exact rational. Small values live in two int64 words; anything that
// overflows is promoted to a GMP rational and demoted again when it fits.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int n) noexcept : num_(n) {}
  Rational(long n) noexcept : num_(n) {}
  Rational(long long n) noexcept : num_(n) {}
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational();

  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return big_ == nullptr && num_ == 0; }
  bool is_one() const noexcept { return big_ == nullptr && num_ == 1 && den_ == 1; }
  int sign() const noexcept;
  bool is_small() const noexcept { return big_ == nullptr; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;
  double to_double() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::size_t hash() const;

 private:
  void set_big(mpq_class&& q);
  void set_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  mpq_class* big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Prime field Z/P, used as an independent oracle for counts.
template <std::uint32_t P>
class Fp {
 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() noexcept = default;
  constexpr Fp(long long n) noexcept : v_(reduce(n)) {}
  constexpr Fp(int n) noexcept : v_(reduce(n)) {}
  constexpr Fp(long n) noexcept : v_(reduce(n)) {}

  static Fp from_rational(const Rational& q) {
    mpz_class p(P);
    mpz_class n = q.numerator() % p;
    mpz_class d = q.denominator() % p;
    if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(P));
    return Fp(static_cast<long long>(n.get_si())) / Fp(static_cast<long long>(d.get_si()));
  }
  static Fp parse(std::string_view text) { return from_rational(Rational::parse(text)); }

  constexpr std::uint32_t value() const noexcept { return v_; }
  constexpr bool is_zero() const noexcept { return v_ == 0; }
  constexpr bool is_one() const noexcept { return v_ == 1; }
  std::string str() const { return std::to_string(v_); }

  constexpr Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in prime field");
    long long a = v_, m = P, x0 = 1, x1 = 0;
    while (m != 0) {
      long long q = a / m;
      long long t = a - q * m; a = m; m = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0);
  }

  constexpr Fp& operator+=(Fp o) noexcept { v_ = (v_ + o.v_) % P; return *this; }
  constexpr Fp& operator-=(Fp o) noexcept { v_ = (v_ + P - o.v_) % P; return *this; }
  constexpr Fp& operator*=(Fp o) noexcept {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
    return *this;
  }
  constexpr Fp& operator/=(Fp o) { return *this *= o.inverse(); }
  friend constexpr Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend constexpr Fp operator/(Fp a, Fp b) { return a /= b; }
  constexpr Fp operator-() const noexcept { return Fp(0) - *this; }
  friend constexpr bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp a, Fp b) noexcept { return a.v_ != b.v_; }
  // Arbitrary total order so that Fp can key ordered containers.
  friend constexpr bool operator<(Fp a, Fp b) noexcept { return a.v_ < b.v_; }
  std::size_t hash() const noexcept { return v_; }

 private:
  static constexpr std::uint32_t reduce(long long n) noexcept {
    long long r = n % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  std::uint32_t v_ = 0;
};

template <std::uint32_t P>
std::ostream& operator<<(std::ostream& os, Fp<P> x) {
  return os << x.value();
}

using F101 = Fp<101>;

// Uniform helpers so templated code reads the same for every field.
template <class F> F field_from_rational(const Rational& q);
template <> inline Rational field_from_rational<Rational>(const Rational& q) { return q; }
template <> inline F101 field_from_rational<F101>(const Rational& q) { return F101::from_rational(q); }

template <class F> inline bool is_zero(const F& x) { return x.is_zero(); }

template <class F> struct FieldInfo;
template <> struct FieldInfo<Rational> {
  static constexpr std::uint32_t characteristic = 0;
  static constexpr const char* name = "Q";
};
template <> struct FieldInfo<F101> {
  static constexpr std::uint32_t characteristic = 101;
  static constexpr const char* name = "F101";
};

}  // namespace trirep

namespace Eigen {

template <>
struct NumTraits<trirep::Rational> : GenericNumTraits<trirep::Rational> {
  using Real = trirep::Rational;
  using NonInteger = trirep::Rational;
  using Nested = trirep::Rational;
  using Literal = trirep::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <std::uint32_t P>
struct NumTraits<trirep::Fp<P>> : GenericNumTraits<trirep::Fp<P>> {
  using Real = trirep::Fp<P>;
  using NonInteger = trirep::Fp<P>;
  using Nested = trirep::Fp<P>;
  using Literal = trirep::Fp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
