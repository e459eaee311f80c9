#pragma once

#include <string>

#include "k3stab/mass.hpp"

namespace k3stab {

// JSON schema:
//   {"q": .., "window": [lo, hi], "values": [..],
//    "tail": {"left": {"kind": "affine"|"geometric", "anchor": ..,
//                      "start": .., "step": .., "ratio": ..},
//             "right": {..}}}
// Doubles are written with shortest round-trip precision.
std::string mass_to_json(const MassFunction& f);

// Throws DomainError on malformed input or on a value/window mismatch.
MassFunction mass_from_json(const std::string& text);

}  // namespace k3stab
