#pragma once

#include "json.hpp"
#include "mumford/moduli.hpp"

// Shared JSON builders for the report and acceptance translation units.  The
// vendored json header stays private to the core library.
namespace mumford::detail {

using json = nlohmann::json;

// Two-space indent; nlohmann objects keep keys sorted, so equal payloads are
// byte-identical.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

json cochain_json(const Cochain& f);
json subgroup_json(const ProductSubgroup& s);
json h2_json(const H2& h2);
json fiber_json(const FiberReport& r);
json orbit_json(const OrbitReport& r);
json dihedral_json(const DihedralReport& r);
json weyl_json(const WeylReport& r);
json group_fingerprint(const FiniteGroup& g);

} // namespace mumford::detail
