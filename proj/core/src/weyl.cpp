#include "wtdem/weyl.hpp"

#include <cstdlib>

namespace wtdem {

WeylElt from_word(const std::vector<int>& letters) {
  WeylElt w = weyl_e();
  for (int i : letters) w = mul(w, simple_reflection(i));
  return w;
}

std::vector<int> to_reduced_word(const WeylElt& w) {
  // tau^{t>0} = (s0 s1)^t, tau^{t<0} = (s1 s0)^{-t},
  // s1 tau^{t>=0} = s1 (s0 s1)^t, s1 tau^{t<0} = (s0 s1)^{-t-1} s0.
  std::vector<int> word;
  std::int64_t len = length(w);
  word.reserve(static_cast<std::size_t>(len));
  int first;
  if (!w.v0) {
    if (w.t == 0) return word;
    first = w.t > 0 ? 0 : 1;
  } else {
    first = w.t >= 0 ? 1 : 0;
  }
  for (std::int64_t i = 0; i < len; ++i) word.push_back((first + i) % 2);
  return word;
}

int last_letter(const WeylElt& w) {
  if (w == weyl_e()) return -1;
  return w.t >= 0 ? 1 : 0;
}

int first_letter(const WeylElt& w) {
  if (w == weyl_e()) return -1;
  if (!w.v0) return w.t > 0 ? 0 : 1;
  return w.t >= 0 ? 1 : 0;
}

Side side(const WeylElt& w) {
  switch (first_letter(w)) {
    case 0: return Side::Left;
    case 1: return Side::Right;
    default: return Side::Both;
  }
}

bool same_sided(const WeylElt& a, const WeylElt& b) {
  Side sa = side(a), sb = side(b);
  return sa == Side::Both || sb == Side::Both || sa == sb;
}

WeylElt element_on_side(Side s, std::int64_t len) {
  if (len == 0) return weyl_e();
  // Left column: s0, s0s1 = tau, s0s1s0, ...; right column mirrors it.
  std::int64_t q = len / 2;
  if (s == Side::Left) return len % 2 == 0 ? WeylElt{false, q} : WeylElt{true, -q - 1};
  return len % 2 == 0 ? WeylElt{false, -q} : WeylElt{true, q};
}

AffineRoot positive_root_of_reflection(const WeylElt& w) {
  // s_{eps*a + n*d} = s1 tau^{eps*n*a^}
  return w.t >= 0 ? AffineRoot{1, w.t} : AffineRoot{-1, -w.t};
}

WeylElt reflection_of_root(const AffineRoot& r) { return {true, r.eps * r.n}; }

std::vector<AffineRoot> inversion_set(const WeylElt& w) {
  // For w = s_{i1} ... s_{ik} reduced:
  //   Inv(w) = { a_{ik}, s_{ik} a_{ik-1}, s_{ik} s_{ik-1} a_{ik-2}, ... }.
  std::vector<int> word = to_reduced_word(w);
  std::vector<AffineRoot> inv;
  inv.reserve(word.size());
  WeylElt suffix = weyl_e();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    inv.push_back(act_root(suffix, simple_root(*it)));
    suffix = mul(suffix, simple_reflection(*it));
  }
  return inv;
}

bool is_prefix(const WeylElt& a, const WeylElt& b) {
  if (a == weyl_e()) return true;
  if (length(a) > length(b)) return false;
  return first_letter(a) == first_letter(b);
}

bool weyl_less(const WeylElt& a, const WeylElt& b) {
  std::int64_t la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  if (a.v0 != b.v0) return !a.v0;
  return a.t < b.t;
}

std::string to_string(const WeylElt& w) {
  if (w == weyl_e()) return "e";
  std::string out;
  for (int i : to_reduced_word(w)) {
    if (!out.empty()) out += ' ';
    out += i == 0 ? "s0" : "s1";
  }
  return out;
}

}  // namespace wtdem
