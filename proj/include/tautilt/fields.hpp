#pragma once

// Exact scalar types for the whole library: a word-sized prime field with a
// runtime modulus, and arbitrary-precision rationals. Both plug into Eigen
// dense matrices through NumTraits specializations at the bottom of this file.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace tautilt {

/// Raised for malformed user input (files, flags, field mismatches). CLI exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computation cannot finish (budget exceeded, degenerate run,
/// retry limit). CLI exit 1.
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ===========================================================================
// FieldSpec: runtime description of the coefficient field
// ===========================================================================

/// Either F_p for a word-sized prime p, or Q. Validated at construction.
struct FieldSpec {
  enum class Kind { prime, rational };

  Kind kind = Kind::rational;
  std::uint64_t p = 0;  // modulus, meaningful only for Kind::prime

  [[nodiscard]] static bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    // trial division; instant for every modulus this library is meant for
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
      if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
  }

  [[nodiscard]] static FieldSpec prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 61))
      throw UsageError("prime field modulus must be < 2^61, got " + std::to_string(p));
    if (!is_prime_u64(p))
      throw UsageError("field modulus " + std::to_string(p) + " is not prime");
    FieldSpec fs;
    fs.kind = Kind::prime;
    fs.p = p;
    return fs;
  }

  [[nodiscard]] static FieldSpec rational() { return FieldSpec{}; }

  [[nodiscard]] bool finite() const { return kind == Kind::prime; }

  [[nodiscard]] std::string describe() const {
    return finite() ? "F_" + std::to_string(p) : "Q";
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && (a.kind != Kind::prime || a.p == b.p);
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

// ===========================================================================
// Fp: prime field element with per-value modulus
// ===========================================================================

/// Element of F_p. A value with modulus() == 0 is an integer literal that has
/// not met a modulus yet; Eigen materializes Scalar(0)/Scalar(1) that way, and
/// literals reduce into F_p on first contact with a modulus-carrying operand.
/// Arithmetic between two values with different nonzero moduli is a logic
/// error and throws.
class Fp {
 public:
  Fp() = default;
  Fp(long long n) : v_(static_cast<std::uint64_t>(n)) {}  // NOLINT: implicit for Eigen
  Fp(int n) : Fp(static_cast<long long>(n)) {}            // NOLINT

  /// n reduced into [0, p).
  [[nodiscard]] static Fp reduced(long long n, std::uint64_t p) {
    Fp x;
    x.p_ = p;
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    x.v_ = static_cast<std::uint64_t>(r);
    return x;
  }

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] bool is_literal() const { return p_ == 0; }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }

  /// Canonical representative in [0, p); literals return their raw value and
  /// must be nonnegative.
  [[nodiscard]] std::uint64_t canonical() const {
    if (p_ == 0 && static_cast<long long>(v_) < 0)
      throw std::logic_error("Fp::canonical on negative literal");
    return v_;
  }

  [[nodiscard]] std::string str() const {
    return p_ == 0 ? std::to_string(static_cast<long long>(v_)) : std::to_string(v_);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = merged(a, b);
    if (p == 0) return lit(add_literal(a.sv(), b.sv()));
    std::uint64_t s = a.rv(p) + b.rv(p);
    if (s >= p) s -= p;
    return make(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = merged(a, b);
    if (p == 0) return lit(add_literal(a.sv(), -b.sv()));
    std::uint64_t av = a.rv(p), bv = b.rv(p);
    return make(av >= bv ? av - bv : av + p - bv, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = merged(a, b);
    if (p == 0) return lit(mul_literal(a.sv(), b.sv()));
    return make(mulmod(a.rv(p), b.rv(p), p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    std::uint64_t p = merged(a, b);
    if (p == 0) {
      long long bv = b.sv();
      if (bv == 0) throw std::logic_error("Fp: division by zero");
      long long av = a.sv();
      if (av % bv != 0)
        throw std::logic_error("Fp: inexact literal division without a modulus");
      return lit(av / bv);
    }
    return make(mulmod(a.rv(p), inv_mod(b.rv(p), p), p), p);
  }
  Fp operator-() const {
    if (p_ == 0) return lit(-sv());
    return make(v_ == 0 ? 0 : p_ - v_, p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = merged(a, b);
    if (p == 0) return a.sv() == b.sv();
    return a.rv(p) == b.rv(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

 private:
  static Fp make(std::uint64_t v, std::uint64_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  static Fp lit(long long v) { return Fp(v); }

  [[nodiscard]] long long sv() const { return static_cast<long long>(v_); }

  /// Value reduced into [0, p), reducing a literal on the fly.
  [[nodiscard]] std::uint64_t rv(std::uint64_t p) const {
    if (p_ != 0) return v_;
    long long r = sv() % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
  }

  static std::uint64_t merged(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
    throw std::logic_error("Fp: mixing elements of F_" + std::to_string(a.p_) +
                           " and F_" + std::to_string(b.p_));
  }

  static long long add_literal(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > INT64_MAX || s < INT64_MIN) throw std::logic_error("Fp: literal overflow");
    return static_cast<long long>(s);
  }
  static long long mul_literal(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) * b;
    if (s > INT64_MAX || s < INT64_MIN) throw std::logic_error("Fp: literal overflow");
    return static_cast<long long>(s);
  }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }

  /// Inverse mod p by extended Euclid; p prime, a nonzero.
  static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::logic_error("Fp: division by zero in F_" + std::to_string(p));
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::logic_error("Fp: non-invertible element, modulus not prime?");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
  }

  std::uint64_t v_ = 0;  // canonical value, or bit-cast signed literal when p_ == 0
  std::uint64_t p_ = 0;
};

// ===========================================================================
// Rat: exact rational, value-semantics wrapper over boost::multiprecision
// ===========================================================================

/// Always stored normalized (coprime, positive denominator); the backend
/// guarantees that. The wrapper exists so Eigen's convertibility probing never
/// touches boost's greedy constructor templates.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : v_(n) {}  // NOLINT: implicit for Eigen
  Rat(int n) : v_(n) {}        // NOLINT

  /// Parses "n" or "n/d" with optional sign; rejects d == 0 and junk.
  [[nodiscard]] static Rat from_string(std::string_view s);

  [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
  [[nodiscard]] std::string str() const { return v_.str(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_.is_zero()) throw std::logic_error("Rat: division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

 private:
  explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline Rat Rat::from_string(std::string_view s) {
  auto parse_int = [](std::string_view t) -> boost::multiprecision::cpp_int {
    if (t.empty()) throw UsageError("empty number in coefficient string");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw UsageError("bare sign in coefficient string");
    for (std::size_t k = i; k < t.size(); ++k) {
      if (t[k] < '0' || t[k] > '9')
        throw UsageError("bad coefficient string '" + std::string(t) + "'");
    }
    return boost::multiprecision::cpp_int(std::string(t));
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    Rat r;
    r.v_ = boost::multiprecision::cpp_rational(parse_int(s));
    return r;
  }
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (den.is_zero()) throw UsageError("zero denominator in '" + std::string(s) + "'");
  Rat r;
  r.v_ = boost::multiprecision::cpp_rational(num, den);
  return r;
}

// ===========================================================================
// FieldContext: makes scalars of one concrete type from a FieldSpec
// ===========================================================================

template <class S>
struct FieldContext;

template <>
struct FieldContext<Fp> {
  using Scalar = Fp;
  static constexpr bool finite = true;
  FieldSpec spec;

  explicit FieldContext(FieldSpec fs) : spec(fs) {
    if (!fs.finite()) throw std::logic_error("FieldContext<Fp> needs a prime field");
  }

  [[nodiscard]] Fp from_int(long long n) const { return Fp::reduced(n, spec.p); }

  /// Coefficient strings are "n" or "n/d"; over F_p the quotient is n * d^-1.
  [[nodiscard]] Fp parse(std::string_view s) const {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_int(parse_ll(s));
    Fp num = from_int(parse_ll(s.substr(0, slash)));
    Fp den = from_int(parse_ll(s.substr(slash + 1)));
    if (den.is_zero()) throw UsageError("zero denominator in '" + std::string(s) + "'");
    return num / den;
  }

  [[nodiscard]] std::string to_string(const Fp& x) const { return x.str(); }

  template <class Rng>
  [[nodiscard]] Fp sample_uniform(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> d(0, spec.p - 1);
    return Fp::reduced(static_cast<long long>(d(rng)), spec.p);
  }

 private:
  static long long parse_ll(std::string_view t) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(std::string(t), &pos);
      if (pos != t.size()) throw UsageError("bad coefficient string '" + std::string(t) + "'");
      return v;
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad coefficient string '" + std::string(t) + "'");
    }
  }
};

template <>
struct FieldContext<Rat> {
  using Scalar = Rat;
  static constexpr bool finite = false;
  FieldSpec spec;

  explicit FieldContext(FieldSpec fs) : spec(fs) {
    if (fs.finite()) throw std::logic_error("FieldContext<Rat> needs the rational field");
  }

  [[nodiscard]] Rat from_int(long long n) const { return Rat(n); }
  [[nodiscard]] Rat parse(std::string_view s) const { return Rat::from_string(s); }
  [[nodiscard]] std::string to_string(const Rat& x) const { return x.str(); }

  /// Small integers; only exercised by randomized endomorphism draws.
  template <class Rng>
  [[nodiscard]] Rat sample_uniform(Rng& rng) const {
    std::uniform_int_distribution<int> d(-9, 9);
    return Rat(d(rng));
  }
};

/// Calls cb with the FieldContext matching fs at its concrete scalar type.
template <class Callback>
decltype(auto) dispatch_field(const FieldSpec& fs, Callback&& cb) {
  if (fs.finite()) return cb(FieldContext<Fp>(fs));
  return cb(FieldContext<Rat>(fs));
}

}  // namespace tautilt

// ===========================================================================
// Eigen glue
// ===========================================================================

namespace Eigen {

template <>
struct NumTraits<tautilt::Fp> : GenericNumTraits<tautilt::Fp> {
  typedef tautilt::Fp Real;
  typedef tautilt::Fp NonInteger;
  typedef tautilt::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,  // field semantics: division is exact
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return tautilt::Fp(0); }
  static inline Real dummy_precision() { return tautilt::Fp(0); }
  static inline int digits10() { return 19; }
};

template <>
struct NumTraits<tautilt::Rat> : GenericNumTraits<tautilt::Rat> {
  typedef tautilt::Rat Real;
  typedef tautilt::Rat NonInteger;
  typedef tautilt::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30,
  };
  static inline Real epsilon() { return tautilt::Rat(0); }
  static inline Real dummy_precision() { return tautilt::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
