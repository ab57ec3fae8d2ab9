#include "trirep/scalar.hpp"

#include <limits>
#include <ostream>

namespace trirep {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

bool fits64(i128 x) {
  return x >= static_cast<i128>(std::numeric_limits<std::int64_t>::min()) + 1 &&
         x <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

mpz_class mpz_from_i128(i128 x) {
  bool neg = x < 0;
  u128 u = neg ? static_cast<u128>(-x) : static_cast<u128>(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  set_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  set_big(std::move(c));
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_ != nullptr) big_ = new mpq_class(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  if (o.big_ != nullptr) {
    if (big_ != nullptr) {
      *big_ = *o.big_;
    } else {
      big_ = new mpq_class(*o.big_);
    }
  } else {
    delete big_;
    big_ = nullptr;
  }
  num_ = o.num_;
  den_ = o.den_;
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  delete big_;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_;
  o.big_ = nullptr;
  return *this;
}

Rational::~Rational() { delete big_; }

void Rational::set_big(mpq_class&& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
      q.get_num() != std::numeric_limits<long>::min()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    delete big_;
    big_ = nullptr;
    return;
  }
  if (big_ != nullptr) {
    *big_ = std::move(q);
  } else {
    big_ = new mpq_class(std::move(q));
  }
  num_ = 0;
  den_ = 1;
}

void Rational::set_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    delete big_;
    big_ = nullptr;
    num_ = 0;
    den_ = 1;
    return;
  }
  u128 g = gcd_u128(static_cast<u128>(abs128(n)), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits64(n) && fits64(d)) {
    delete big_;
    big_ = nullptr;
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  set_big(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  // Accept the Unicode minus sign as well as ASCII '-'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      s.push_back('-');
      i += 2;
    } else if (text[i] != ' ') {
      s.push_back(text[i]);
    }
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t scale = s.size() - dot - 1;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    mpz_class den = 1;
    for (std::size_t i = 0; i < scale; ++i) den *= 10;
    return Rational(mpq_class(num, den));
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("zero denominator: " + s);
  return Rational(q);
}

int Rational::sign() const noexcept {
  if (big_ != nullptr) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_ != nullptr) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ != nullptr ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ != nullptr ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (big_ != nullptr) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_ != nullptr) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (big_ == nullptr && o.big_ == nullptr) {
    if (den_ == 1 && o.den_ == 1) {
      i128 n = static_cast<i128>(num_) + o.num_;
      if (fits64(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    set_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
             static_cast<i128>(den_) * o.den_);
    return *this;
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (big_ == nullptr && o.big_ == nullptr) {
    if (den_ == 1 && o.den_ == 1) {
      i128 n = static_cast<i128>(num_) - o.num_;
      if (fits64(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    set_i128(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
             static_cast<i128>(den_) * o.den_);
    return *this;
  }
  set_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Rational();
  if (big_ == nullptr && o.big_ == nullptr) {
    if (den_ == 1 && o.den_ == 1) {
      i128 n = static_cast<i128>(num_) * o.num_;
      if (fits64(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    set_i128(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return *this;
  if (big_ == nullptr && o.big_ == nullptr) {
    set_i128(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  set_big(to_mpq() / o.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  if (big_ == nullptr) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-*big_));
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.big_ == nullptr && b.big_ == nullptr) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ != nullptr && b.big_ != nullptr) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
  if (big_ == nullptr) {
    return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
  }
  return std::hash<std::string>()(big_->get_str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trirep
