#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wtdem/roots.hpp"

// The infinite dihedral Weyl group W = <s0, s1 | s0^2 = s1^2 = e>, stored in
// the normal form v0 * tau^{t*a^} with v0 in {e, s1}.  The generators are
// linked by s0 = s1 * tau^{-a^}.
//
// Sidedness follows the picture of the quantum Bruhat graph: an element w is
// left-sided when s1*w > w (its reduced word starts with s0), right-sided
// when s0*w > w (starts with s1).  The identity is both.

namespace wtdem {

enum class Side { Left, Right, Both };

struct WeylElt {
  bool v0 = false;     // false: classical part e, true: classical part s1
  std::int64_t t = 0;  // exponent of tau^{a^}

  friend bool operator==(const WeylElt&, const WeylElt&) = default;
};

inline WeylElt weyl_e() { return {false, 0}; }
inline WeylElt weyl_s0() { return {true, -1}; }
inline WeylElt weyl_s1() { return {true, 0}; }
inline WeylElt weyl_tau(std::int64_t t) { return {false, t}; }
inline WeylElt simple_reflection(int i) { return i == 0 ? weyl_s0() : weyl_s1(); }

inline std::int64_t classical_sign(const WeylElt& w) { return w.v0 ? -1 : 1; }

inline WeylElt mul(const WeylElt& a, const WeylElt& b) {
  // v0 tau^t * v0' tau^t' = (v0 v0') tau^{sgn(v0') t + t'}
  return {a.v0 != b.v0, classical_sign(b) * a.t + b.t};
}

inline WeylElt inv(const WeylElt& a) { return {a.v0, -classical_sign(a) * a.t}; }

inline std::int64_t length(const WeylElt& w) {
  if (!w.v0) return 2 * (w.t < 0 ? -w.t : w.t);
  return w.t >= 0 ? 2 * w.t + 1 : -2 * w.t - 1;
}

WeylElt from_word(const std::vector<int>& letters);
std::vector<int> to_reduced_word(const WeylElt& w);

// -1 for the identity, else the letter index of the reduced word's end/start.
int last_letter(const WeylElt& w);
int first_letter(const WeylElt& w);

Side side(const WeylElt& w);
bool same_sided(const WeylElt& a, const WeylElt& b);

// The unique element of the given length whose reduced word starts with s0
// (Side::Left) or s1 (Side::Right); length 0 gives the identity.
WeylElt element_on_side(Side s, std::int64_t len);

// v0 tau^{t}(eps*a + n*d) = eps*(v0 a) + (n - 2*eps*t)*d
inline AffineRoot act_root(const WeylElt& w, const AffineRoot& r) {
  return {classical_sign(w) * r.eps, r.n - 2 * r.eps * w.t};
}

// w0 tau^{lam}(mu0 + m d + l L) = w0 mu0 + l w0 lam
//                                 + (m - <mu0,lam> - (l/2)<lam,lam>) d + l L
inline Coweight act_coweight(const WeylElt& w, const Coweight& mu) {
  return {classical_sign(w) * (mu.k + mu.l * w.t),
          mu.m - 2 * mu.k * w.t - mu.l * w.t * w.t, mu.l};
}

// Odd-length elements are exactly the reflections; these convert between a
// reflection and the positive root it inverts.
AffineRoot positive_root_of_reflection(const WeylElt& w);
WeylElt reflection_of_root(const AffineRoot& r);

// Inv(w) = { positive real roots r with w(r) < 0 }; |Inv(w)| = length(w).
std::vector<AffineRoot> inversion_set(const WeylElt& w);

// In the infinite dihedral group, a <= b iff a == b or length(a) < length(b).
inline bool bruhat_leq(const WeylElt& a, const WeylElt& b) {
  return a == b || length(a) < length(b);
}

// True when b has a as a prefix of its reduced word (equivalently a <= b and
// both lie in the same column, the identity being a prefix of everything).
bool is_prefix(const WeylElt& a, const WeylElt& b);

// Deterministic ordering: by length, then side, then normal form.
bool weyl_less(const WeylElt& a, const WeylElt& b);

std::string to_string(const WeylElt& w);

}  // namespace wtdem
