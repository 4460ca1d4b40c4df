#pragma once

#include <compare>
#include <cstdint>
#include <string>

// Exact arithmetic for the real affine roots and the coweight lattice of
// affine SL2.
//
// Conventions used throughout the library:
//
//   * A real root is eps*a + n*d with eps in {+1,-1}; `a` is the classical
//     root, `d` the null root.  Imaginary roots are never represented.
//     A root is positive iff n >= 1, or n == 0 and eps == +1.
//     The simple roots are a1 = a and a0 = -a + d.
//
//   * A coweight (k, m, l) stands for k*a^ + m*d + l*L, where a^ is the
//     classical coroot, d the null coweight and L the fundamental coweight
//     of level one.  Pairing with roots: <(k,m,l), eps*a + n*d> = 2*eps*k
//     + n*l.  The null coweight pairs to zero with every real root.
//
//   * <2rho, (k,m,l)> = 2k + 4m.  The coefficient 4 (= 2 * dual Coxeter
//     number) is forced by consistency of the length formula across all
//     length-positive witnesses; the L-component is normalised to pair to
//     zero, which fixes only the additive level term of lengths.
//
//   * coroot(eps*a + n*d) = (eps, n, 0), so coroot(a1) = (1,0,0) and
//     coroot(a0) = (-1,1,0).

namespace wtdem {

struct AffineRoot {
  std::int64_t eps = 1;  // +1 or -1
  std::int64_t n = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

struct Coweight {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t l = 0;

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  friend Coweight operator+(const Coweight& a, const Coweight& b) {
    return {a.k + b.k, a.m + b.m, a.l + b.l};
  }
  friend Coweight operator-(const Coweight& a, const Coweight& b) {
    return {a.k - b.k, a.m - b.m, a.l - b.l};
  }
  friend Coweight operator-(const Coweight& a) { return {-a.k, -a.m, -a.l}; }
};

// eps*a + n*d + m_pi*pi; positivity mirrors the affine rule one level up.
struct DoubleAffineRoot {
  AffineRoot base;
  std::int64_t m_pi = 0;

  friend bool operator==(const DoubleAffineRoot&, const DoubleAffineRoot&) = default;
  friend auto operator<=>(const DoubleAffineRoot&, const DoubleAffineRoot&) = default;
};

constexpr AffineRoot simple_root_0() { return {-1, 1}; }  // -a + d
constexpr AffineRoot simple_root_1() { return {+1, 0}; }  // a

inline AffineRoot simple_root(int i) { return i == 0 ? simple_root_0() : simple_root_1(); }

inline AffineRoot negate(const AffineRoot& r) { return {-r.eps, -r.n}; }

inline bool is_positive(const AffineRoot& r) {
  return r.n >= 1 || (r.n == 0 && r.eps == 1);
}

inline bool is_simple(const AffineRoot& r) {
  return r == simple_root_0() || r == simple_root_1();
}

inline bool is_positive(const DoubleAffineRoot& r) {
  return r.m_pi >= 1 || (r.m_pi == 0 && is_positive(r.base));
}

inline DoubleAffineRoot negate(const DoubleAffineRoot& r) {
  return {negate(r.base), -r.m_pi};
}

inline Coweight coroot(const AffineRoot& r) { return {r.eps, r.n, 0}; }

inline std::int64_t pair(const Coweight& mu, const AffineRoot& r) {
  return 2 * r.eps * mu.k + r.n * mu.l;
}

inline std::int64_t two_rho_pair(const Coweight& mu) { return 2 * mu.k + 4 * mu.m; }

// Number of simple-root letters; defined (and odd) for every real root.
inline std::int64_t height(const AffineRoot& r) {
  AffineRoot p = is_positive(r) ? r : negate(r);
  std::int64_t h = p.eps == 1 ? 2 * p.n + 1 : 2 * p.n - 1;
  return is_positive(r) ? h : -h;
}

std::string to_string(const AffineRoot& r);
std::string to_string(const Coweight& mu);
std::string to_string(const DoubleAffineRoot& r);

}  // namespace wtdem
