#pragma once

#include <string>

#include "semisplit/ring.hpp"

namespace semisplit {

/// Grammar (docs/formats.md):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | t['^'SINT] | t'['^'SINT] | f<k> | z<k>['^'SINT] | NAME
///           | T1['^'SINT] | T2['^'SINT] | '[' word ']' | '(' expr ')'['^'INT]
RingElem parse_ring_literal(const std::string& text, const RingTag& tag);
/// Canonical printing; parse_ring_literal(print_ring_literal(x)) == x.
std::string print_ring_literal(const RingElem& x);

/// Space-separated tokens T1, T2, T1^-1, f<k>, z<k>^e, NAME; "1" is the identity.
GroupWord parse_group_word(const std::string& text, const Amalgam& G);
std::string print_group_word(const GroupWord& w, const BaseGroup& F);
std::string print_felem(const FElem& f, const BaseGroup& F);

}  // namespace semisplit
