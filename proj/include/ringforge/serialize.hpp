#pragma once

#include "ringforge/function_ring.hpp"
#include "ringforge/valuation.hpp"

#include "json.hpp"

#include <string>

namespace ringforge {

using Json = nlohmann::ordered_json;

// The one place that defines the wire grammar.
//
//   group    := "Z" | "Q" | "Z2lex"
//   gelem    := int | int "/" uint | "(" int "," int ")"
//   cut      := "zero" | "full" | "closed:" gelem | "open:" gelem | "row:" int
//   element  := "0" | [coeff "*"] "t^" gelem        (coeff a nonzero rational)
//   valq     := "valq:" group ":" cut
//
// Descriptors and function-ring elements travel as JSON:
//   descriptor := { "const": cut,
//                   "tail": {"uniform": cut}
//                         | {"arithmetic": {"base": gelem, "step": gelem}}
//                         | {"geometric": {"limit": gelem, "amp": gelem}},
//                   "overrides": { "<index>": cut, ... } }
//   element    := { "default": element-string, "overrides": { "<index>": element-string } }
//   ring file  := { "kind": group, "modulus": descriptor }

GroupKind parse_group_kind(const std::string& s);

GroupElement parse_group_element(GroupKind kind, const std::string& s);

Cut parse_cut(GroupKind kind, const std::string& s);

ValElement parse_val_element(GroupKind kind, const std::string& s);

/// "valq:<group>:<cut>"
ValQuotient parse_valq(const std::string& s);

Json descriptor_to_json(const SubmoduleDescriptor& d);
SubmoduleDescriptor descriptor_from_json(GroupKind kind, const Json& j);

Json fun_element_to_json(const FunElement& f);
FunElement fun_element_from_json(GroupKind kind, const Json& j);

Json sring_to_json(const SRingQuotient& r);
SRingQuotient sring_from_json(const Json& j);

} // namespace ringforge
