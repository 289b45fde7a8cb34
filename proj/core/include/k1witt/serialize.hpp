#pragma once

#include "k1witt/equivariant.hpp"
#include "k1witt/k1.hpp"

#include <json.hpp>

#include <string>

namespace k1witt {

/// Insertion-ordered JSON so emitted documents have stable, pinned field
/// order ({"rank":…,"e":…}, {"a":…,"d":…}).
using Json = nlohmann::ordered_json;

// Gram matrices travel as row-major arrays of arrays of integers; entries
// are reduced mod ell on input and emitted canonically in [0, ell).
Json gram_to_json(const GramForm& f);
GramForm gram_from_json(const Json& j, Prime ell);

Json gwclass_to_json(GWClass c);
GWClass gwclass_from_json(const Json& j);

// Groups: {"order": n, "table": [[…]]}, or the named constructors
// {"cyclic": k} and {"product": [spec, spec]} (recursively).
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// A representation is the list of matrices indexed by group element.
Representation rep_from_json(const Json& j, const FiniteGroup& g, Prime ell);

Json padic_to_json(const PadicInt& x);
PadicInt padic_from_json(const Json& j);

// Compact p = 2 element: {"a": "<balanced decimal>", "d": 0|1}.
Json k1_to_json(const K1Element& x);

// p = 2 elements in compact form; odd-p elements in padic form.
Json sphere_to_json(const SphereElement& x);

// Element syntax "a", "a+e", "e" (optionally signed); and the JSON shapes
// {"a": …, "d": 0|1}, a bare padic object, or a bare string/number.
SphereElement sphere_from_string(const std::string& text, std::uint32_t p,
                                 unsigned precision);
SphereElement sphere_from_json(const Json& j, std::uint32_t p,
                               unsigned precision);

// {"components": [[…], …]}; an optional "p" field must match.
PiFiniteSpace space_from_json(const Json& j, std::uint32_t p);
Json space_to_json(const PiFiniteSpace& s);

} // namespace k1witt
