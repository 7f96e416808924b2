#pragma once

#include <string>

#include "mumford/moduli.hpp"

namespace mumford {

// JSON documents (two-space indent, keys sorted) for each computation.  The
// payloads carry no timings or host data, so identical inputs produce
// byte-identical output.
std::string meta_json(int workers, const Budget& budget, int transgression_sign);

std::string h2_report(const H2& h2);
std::string extensions_report(const H2& h2, const Budget& budget);
std::string homs_report(const FiniteGroup& g, int genus, int64_t enumerated, int64_t surjective,
                        int64_t convolution);
std::string homs_csv(const FiniteGroup& g, int genus, int64_t enumerated, int64_t surjective,
                     int64_t convolution);
std::string cover_report(const CoverPresentation& c, const FinAbGroup& t);
std::string invariants_report(const CoverPresentation& c, const H2& h2, int sign);
std::string fiber_json(const FiberReport& r);
std::string orbit_json(const OrbitReport& r);
std::string dihedral_json(const DihedralReport& r);
std::string weyl_json(const WeylReport& r);

// Flat "key: value" rendering of any payload produced above.
std::string render_table(const std::string& json_text);

} // namespace mumford
