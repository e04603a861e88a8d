#pragma once

// Exact arithmetic in F_{p^k} for odd p, desk-scale sizes (p^k < 2^63).
// Elements are polynomial-basis coordinate vectors modulo a deterministic
// irreducible modulus polynomial, so identical parameters always reproduce
// identical elements across runs.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

inline constexpr int kMaxFieldDegree = 8;

struct FieldParams {
  long long p = 17;
  int k = 1;
  std::vector<long long> modulus_poly;  // monic, coefficients low to high, size k+1
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

struct FieldElem {
  std::array<long long, kMaxFieldDegree> c{};
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

namespace ffdetail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// dense polynomial helpers over Z/p, coefficients low to high
using Poly = std::vector<long long>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, long long p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const long long lead = a.back();  // f monic
    const std::size_t shift = a.size() - 1 - df;
    if (lead != 0)
      for (std::size_t i = 0; i <= df; ++i) {
        long long& x = a[shift + i];
        x = (x - lead % p * f[i]) % p;
        if (x < 0) x += p;
      }
    a.pop_back();
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(c), f, p);
}

inline Poly poly_powmod_x(unsigned long long e, const Poly& f, long long p) {
  // x^e mod f
  Poly base{0, 1}, acc{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}

inline Poly poly_gcd(Poly a, Poly b, long long p) {
  auto inv_mod_p = [&](long long x) {
    long long r = 1, e = p - 2, base = ((x % p) + p) % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic
    const long long il = inv_mod_p(b.back());
    Poly bm = b;
    for (auto& x : bm) x = x * il % p;
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

/// Rabin test: f (monic, degree k) is irreducible over F_p iff x^{p^k} = x
/// mod f and gcd(x^{p^{k/l}} - x, f) = 1 for every prime l | k.
inline bool is_irreducible(const Poly& f, long long p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  auto pow_ull = [&](int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<unsigned long long>(p);
    return r;
  };
  Poly xk = poly_powmod_x(pow_ull(k), f, p);
  Poly x_only{0, 1};
  x_only = poly_mod(std::move(x_only), f, p);
  Poly diff = xk;
  diff.resize(std::max(diff.size(), x_only.size()), 0);
  for (std::size_t i = 0; i < x_only.size(); ++i) {
    diff[i] = (diff[i] - x_only[i]) % p;
    if (diff[i] < 0) diff[i] += p;
  }
  trim(diff);
  if (!diff.empty()) return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0 || !is_prime(l)) continue;
    Poly xe = poly_powmod_x(pow_ull(k / l), f, p);
    Poly d = xe;
    d.resize(std::max(d.size(), x_only.size()), 0);
    for (std::size_t i = 0; i < x_only.size(); ++i) {
      d[i] = (d[i] - x_only[i]) % p;
      if (d[i] < 0) d[i] += p;
    }
    Poly g = poly_gcd(f, std::move(d), p);
    if (static_cast<int>(g.size()) - 1 != 0) return false;
  }
  return true;
}

}  // namespace ffdetail

class Field {
 public:
  /// Builds F_{p^k} with the lexicographically first monic irreducible
  /// modulus polynomial (constant coefficient varying fastest).
  Field(long long p, int k) : Field(find_params(p, k)) {}

  explicit Field(FieldParams params) : params_(std::move(params)) {
    validate();
    reduction_rows();
  }

  /// Least k with n | p^k - 1, i.e. the multiplicative order of p mod n.
  static int min_extension_degree(long long p, long long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (std::gcd(p % n, n) != 1) throw std::invalid_argument("p and n are not coprime");
    long long cur = p % n;
    for (int k = 1; k <= 512; ++k) {
      if (cur == 1 % n) return k;
      cur = cur * (p % n) % n;
    }
    throw std::logic_error("multiplicative order not found");
  }

  const FieldParams& params() const { return params_; }
  long long p() const { return params_.p; }
  int degree() const { return params_.k; }
  unsigned long long order() const {
    unsigned long long r = 1;
    for (int i = 0; i < params_.k; ++i) r *= static_cast<unsigned long long>(params_.p);
    return r;
  }

  FieldElem zero() const { return {}; }
  FieldElem one() const { return from_int(1); }
  FieldElem from_int(long long v) const {
    FieldElem e;
    e.c[0] = modp(v);
    return e;
  }

  bool is_zero(const FieldElem& a) const {
    for (int i = 0; i < params_.k; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }

  FieldElem add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r;
    for (int i = 0; i < params_.k; ++i) {
      r.c[i] = a.c[i] + b.c[i];
      if (r.c[i] >= params_.p) r.c[i] -= params_.p;
    }
    return r;
  }

  FieldElem sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r;
    for (int i = 0; i < params_.k; ++i) {
      r.c[i] = a.c[i] - b.c[i];
      if (r.c[i] < 0) r.c[i] += params_.p;
    }
    return r;
  }

  FieldElem neg(const FieldElem& a) const { return sub(zero(), a); }

  FieldElem mul(const FieldElem& a, const FieldElem& b) const {
    const int k = params_.k;
    if (k == 1) {
      FieldElem r;
      r.c[0] = static_cast<long long>(static_cast<__int128>(a.c[0]) * b.c[0] % params_.p);
      return r;
    }
    std::array<__int128, 2 * kMaxFieldDegree> acc{};
    for (int i = 0; i < k; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < k; ++j) acc[i + j] += static_cast<__int128>(a.c[i]) * b.c[j];
    }
    // fold x^{k+j} using the precomputed reductions
    FieldElem r;
    for (int d = 2 * k - 2; d >= k; --d) {
      const long long v = static_cast<long long>(acc[d] % params_.p);
      if (v == 0) continue;
      for (int i = 0; i < k; ++i) acc[i] += static_cast<__int128>(v) * red_[d - k][i];
    }
    for (int i = 0; i < k; ++i) r.c[i] = modp(static_cast<long long>(acc[i] % params_.p));
    return r;
  }

  FieldElem pow(const FieldElem& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElem base = a, r = one();
    unsigned long long ue = static_cast<unsigned long long>(e);
    while (ue) {
      if (ue & 1) r = mul(r, base);
      base = mul(base, base);
      ue >>= 1;
    }
    return r;
  }

  FieldElem inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return pow(a, static_cast<long long>(order() - 2));
  }

  /// Deterministic: scans field elements in counter order (coordinate digits
  /// base p, low digit fastest) and returns the first n-th power residue root
  /// of exact order n.
  FieldElem primitive_root_of_unity(long long n) const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const unsigned long long q1 = order() - 1;
    if (q1 % static_cast<unsigned long long>(n) != 0)
      throw std::invalid_argument("no primitive " + std::to_string(n) + "th root: n does not divide p^k - 1");
    const unsigned long long e = q1 / static_cast<unsigned long long>(n);
    std::vector<long long> prime_divs;
    long long nn = n;
    for (long long d = 2; d * d <= nn; ++d)
      if (nn % d == 0) {
        prime_divs.push_back(d);
        while (nn % d == 0) nn /= d;
      }
    if (nn > 1) prime_divs.push_back(nn);
    for (unsigned long long counter = 1; counter < order(); ++counter) {
      const FieldElem cand = element_from_counter(counter);
      const FieldElem y = pow(cand, static_cast<long long>(e));
      if (!is_one(pow(y, n))) continue;
      bool exact = true;
      for (long long l : prime_divs)
        if (is_one(pow(y, n / l))) {
          exact = false;
          break;
        }
      if (exact) return y;
    }
    throw std::logic_error("no root of unity found");
  }

  bool is_one(const FieldElem& a) const { return a == one(); }

  /// Multiplicative order of a nonzero element (small fields only).
  long long element_order(const FieldElem& a) const {
    if (is_zero(a)) throw std::domain_error("order of zero");
    FieldElem x = a;
    long long o = 1;
    while (!is_one(x)) {
      x = mul(x, a);
      ++o;
    }
    return o;
  }

  FieldElem element_from_counter(unsigned long long counter) const {
    FieldElem e;
    for (int i = 0; i < params_.k; ++i) {
      e.c[i] = static_cast<long long>(counter % static_cast<unsigned long long>(params_.p));
      counter /= static_cast<unsigned long long>(params_.p);
    }
    return e;
  }

 private:
  static FieldParams find_params(long long p, int k) {
    if (!ffdetail::is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (k < 1 || k > kMaxFieldDegree) throw std::invalid_argument("extension degree out of range");
    FieldParams fp;
    fp.p = p;
    fp.k = k;
    // lexicographic search over monic polynomials: low coefficients vary fastest
    unsigned long long limit = 1;
    for (int i = 0; i < k; ++i) {
      if (limit > (1ULL << 62) / static_cast<unsigned long long>(p))
        throw std::invalid_argument("field order exceeds 2^62");
      limit *= static_cast<unsigned long long>(p);
    }
    for (unsigned long long counter = 0; counter < limit; ++counter) {
      ffdetail::Poly f(k + 1, 0);
      unsigned long long c = counter;
      for (int i = 0; i < k; ++i) {
        f[i] = static_cast<long long>(c % static_cast<unsigned long long>(p));
        c /= static_cast<unsigned long long>(p);
      }
      f[k] = 1;
      if (ffdetail::is_irreducible(f, p)) {
        fp.modulus_poly = std::move(f);
        return fp;
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void validate() const {
    if (!ffdetail::is_prime(params_.p) || params_.p == 2)
      throw std::invalid_argument("p must be an odd prime");
    if (params_.k < 1 || params_.k > kMaxFieldDegree)
      throw std::invalid_argument("extension degree out of range");
    unsigned long long ord = 1;
    for (int i = 0; i < params_.k; ++i) {
      if (ord > (1ULL << 62) / static_cast<unsigned long long>(params_.p))
        throw std::invalid_argument("field order exceeds 2^62");
      ord *= static_cast<unsigned long long>(params_.p);
    }
    if (static_cast<int>(params_.modulus_poly.size()) != params_.k + 1 ||
        params_.modulus_poly.back() != 1)
      throw std::invalid_argument("modulus polynomial must be monic of degree k");
    if (params_.k > 1 && !ffdetail::is_irreducible(params_.modulus_poly, params_.p))
      throw std::invalid_argument("modulus polynomial is reducible");
  }

  // red_[j] = coordinates of x^{k+j} mod f, j = 0..k-2
  void reduction_rows() {
    const int k = params_.k;
    if (k == 1) return;
    ffdetail::Poly x{0, 1};
    ffdetail::Poly cur = ffdetail::poly_powmod_x(static_cast<unsigned long long>(k),
                                                 params_.modulus_poly, params_.p);
    for (int j = 0; j <= k - 2; ++j) {
      red_[j].fill(0);
      for (std::size_t i = 0; i < cur.size(); ++i) red_[j][i] = cur[i];
      cur = ffdetail::poly_mulmod(cur, x, params_.modulus_poly, params_.p);
    }
  }

  long long modp(long long v) const {
    const long long r = v % params_.p;
    return r < 0 ? r + params_.p : r;
  }

  FieldParams params_;
  std::array<std::array<long long, kMaxFieldDegree>, kMaxFieldDegree> red_{};
};

}  // namespace chevkit
