#pragma once

#include <string>
#include <string_view>

#include "wtdem/titscone.hpp"
#include "wtdem/weyl.hpp"

// Text forms.  Words are whitespace-separated letters over {s0, s1}, with
// `e` for the identity and `t[<int>]` for a power of tau.  Elements are
// `<word> e[<k>a<+/-m>d<+/-l>L]`, e.g. `s0 s1 e[-1a+0d+1L]`.  Printing
// always emits the canonical reduced word, and parse(print(x)) == x.

namespace wtdem {

WeylElt parse_word(std::string_view text);
WTElement parse_element(std::string_view text);

std::string format_element(const WTElement& x);

}  // namespace wtdem
