#pragma once

// Arithmetic in GF(p^k) for p^k <= 2^16.
//
// Elements are polynomials over GF(p) of degree < k, packed as integers:
// the coefficient of x^i is the i-th base-p digit. The modulus is the first
// monic irreducible polynomial of degree k when the non-leading
// coefficients are read as a base-p number with c_{k-1} most significant
// (GF(4): x^2+x+1, GF(9): x^2+1, GF(16): x^4+x+1, GF(p): x).
// Multiplication goes through log/antilog tables over a primitive element.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unital/error.hpp"

namespace unital {

struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct FieldSpec {
  unsigned p = 2;
  unsigned k = 1;
  /// Monic modulus, coefficients from x^0 up to x^k.
  std::vector<unsigned> modulus;

  std::size_t size() const {
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) n *= p;
    return n;
  }
};

namespace detail {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // low degree first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial m over GF(p).
inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

inline Poly digits(std::uint64_t v, unsigned p, unsigned len) {
  Poly d(len);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<unsigned>(v % p);
    v /= p;
  }
  return d;
}

/// Trial division by every monic polynomial of degree 1..k/2.
inline bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g = digits(v, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace detail

class GaloisField {
 public:
  static constexpr std::size_t kMaxSize = std::size_t{1} << 16;

  static GaloisField make(unsigned p, unsigned k) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
      size *= p;
      if (size > kMaxSize) {
        throw Error(ErrorCode::TooLarge, "field of order " + std::to_string(p) + "^" +
                                             std::to_string(k) + " exceeds 2^16");
      }
    }

    GaloisField F;
    F.spec_.p = p;
    F.spec_.k = k;
    F.size_ = static_cast<std::uint32_t>(size);
    for (std::uint64_t v = 0; v < size; ++v) {
      detail::Poly f = detail::digits(v, p, k);
      f.push_back(1);
      if (detail::is_irreducible(f, p)) {
        F.spec_.modulus = std::move(f);
        break;
      }
    }
    F.build_tables();
    return F;
  }

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned characteristic() const noexcept { return spec_.p; }
  unsigned degree() const noexcept { return spec_.k; }
  std::size_t size() const noexcept { return size_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement primitive_element() const noexcept { return exp_[1 % (size_ - 1)]; }

  FieldElement element(std::uint32_t value) const {
    if (value >= size_) throw Error(ErrorCode::InvalidArgument, "element value out of range");
    return {value};
  }

  /// The class of x, i.e. the element with coefficient vector (0, 1, 0, ...).
  /// For prime fields this is 0.
  FieldElement x() const noexcept { return {spec_.k > 1 ? spec_.p : 0u}; }

  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> all(size_);
    for (std::uint32_t v = 0; v < size_; ++v) all[v] = {v};
    return all;
  }

  std::vector<unsigned> coefficients(FieldElement a) const {
    return detail::digits(a.value, spec_.p, spec_.k);
  }

  FieldElement from_coefficients(std::span<const unsigned> coeffs) const {
    if (coeffs.size() != spec_.k) throw Error(ErrorCode::InvalidArgument, "wrong coefficient count");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= spec_.p) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
      v = v * spec_.p + coeffs[i];
    }
    return {v};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (spec_.p == 2) return {a.value ^ b.value};
    if (!add_table_.empty()) return {add_table_[a.value * size_ + b.value]};
    return {digit_add(a.value, b.value)};
  }

  FieldElement neg(FieldElement a) const {
    if (spec_.p == 2) return a;
    std::uint32_t r = 0, scale = 1, v = a.value;
    for (unsigned i = 0; i < spec_.k; ++i) {
      const unsigned d = v % spec_.p;
      r += ((spec_.p - d) % spec_.p) * scale;
      v /= spec_.p;
      scale *= spec_.p;
    }
    return {r};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    return exp_[log_[a.value] + log_[b.value]];
  }

  FieldElement inv(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t n = size_ - 1;
    return exp_[(n - log_[a.value]) % n];
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::int64_t e) const {
    if (a.value == 0) {
      if (e > 0) return zero();
      if (e == 0) return one();
      throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    }
    const std::int64_t n = size_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a.value]) * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[static_cast<std::size_t>(r)];
  }

  /// Discrete log base primitive_element(); a must be nonzero.
  std::uint32_t log(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
    return log_[a.value];
  }

  /// a -> a^q in GF(q^2): the involutory automorphism fixing GF(q).
  FieldElement conjugate(FieldElement a, unsigned q) const {
    require_quadratic_over(q);
    return pow(a, q);
  }

  bool is_in_subfield(FieldElement a, unsigned q) const { return conjugate(a, q) == a; }

  /// All d-th roots of unity as successive powers 1, e, e^2, ... of a
  /// primitive d-th root e.
  std::vector<FieldElement> roots_of_unity(std::size_t d) const {
    const std::size_t n = size_ - 1;
    if (d == 0 || n % d != 0) {
      throw Error(ErrorCode::DoesNotDivide,
                  std::to_string(d) + " does not divide " + std::to_string(n));
    }
    std::vector<FieldElement> roots;
    roots.reserve(d);
    for (std::size_t i = 0; i < d; ++i) roots.push_back(exp_[(n / d) * i]);
    return roots;
  }

  std::string to_string(FieldElement a) const {
    if (a.value == 0) return "0";
    std::string s;
    auto c = coefficients(a);
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void require_quadratic_over(unsigned q) const {
    if (std::size_t{q} * q != size_) {
      throw Error(ErrorCode::InvalidArgument,
                  "field of order " + std::to_string(size_) + " is not GF(" + std::to_string(q) + "^2)");
    }
  }

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < spec_.k; ++i) {
      r += ((a % spec_.p + b % spec_.p) % spec_.p) * scale;
      a /= spec_.p;
      b /= spec_.p;
      scale *= spec_.p;
    }
    return r;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const unsigned p = spec_.p, k = spec_.k;
    auto da = detail::digits(a, p, k), db = detail::digits(b, p, k);
    detail::Poly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    auto r = detail::poly_mod(prod, spec_.modulus, p);
    std::uint32_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
    return v;
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    const std::uint64_t n = size_ - 1;
    const auto factors = detail::prime_factors(n);
    std::uint32_t g = 1;
    for (std::uint32_t c = 1; c < size_; ++c) {
      bool primitive = true;
      for (auto f : factors) {
        if (slow_pow(c, n / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = c;
        break;
      }
    }
    exp_.resize(2 * n);
    log_.assign(size_, 0);
    std::uint32_t v = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = exp_[i + n] = {v};
      log_[v] = static_cast<std::uint32_t>(i);
      v = slow_mul(v, g);
    }
    if (spec_.p != 2 && size_ <= 256) {
      add_table_.resize(std::size_t{size_} * size_);
      for (std::uint32_t a = 0; a < size_; ++a)
        for (std::uint32_t b = 0; b < size_; ++b) add_table_[a * size_ + b] = digit_add(a, b);
    }
  }

  FieldSpec spec_;
  std::uint32_t size_ = 0;
  std::vector<FieldElement> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_table_;
};

inline GaloisField make_field(unsigned p, unsigned k) { return GaloisField::make(p, k); }

}  // namespace unital
