#ifndef RNLS_CATALOG_HPP
#define RNLS_CATALOG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rnls/core.hpp"

// Registry of the closed-form invariant solution families.  Ids group by the
// subgroup that produces them:
//   T01..T25  time-translation group
//   S01, S02  translation + phase (Bessel amplitude, standing waves)
//   G01       scaling + phase (Whittaker similarity solution)
//   P01       translation + inversion + phase (Whittaker)
//   I01..I07  inversion-boosted versions (critical power p = 4/n)
// I02 requires n^2 - n + 4 = 0 and is therefore vacuous over the reals; it is
// kept in the registry for completeness but cannot be instantiated.

namespace rnls::catalog {

struct FamilyConstants {
    std::map<std::string, double> values;

    bool has(const std::string& name) const { return values.count(name) != 0; }
    double get(const std::string& name) const;
    double get_or(const std::string& name, double fallback) const;
};

enum class Behaviour { monopole, bright_soliton, dark_soliton, standing_wave, other };

struct FamilyDescriptor {
    std::string id;
    std::string summary;          // what the solution looks like
    std::string constraint;       // parameter relations, human-readable
    std::vector<std::string> constants;  // accepted constant names
    Behaviour behaviour = Behaviour::other;
    bool vacuous = false;         // no real instantiation exists
};

const std::vector<FamilyDescriptor>& registry();
const FamilyDescriptor& find(const std::string& id);

// Build a concrete Solution.  Throws Error(constraint) when (n,p,k) or the
// constants violate the family's validity conditions.
Solution instantiate(const std::string& id, const Parameters& params,
                     const FamilyConstants& constants);

// FNV-1a over every descriptor field; pinned in the tests so accidental edits
// of the transcribed registry are caught.
std::uint64_t transcription_checksum();

// ---- witness fixtures -----------------------------------------------------------

// One line per family in the fixture file:
//   id n p k tol key=value ...
// Reserved keys t0, r_lo, r_hi give the sampling window; the rest are the
// family constants.  Lines starting with '#' are comments.
struct Witness {
    std::string id;
    Parameters params;
    FamilyConstants constants;
    double tol = 1e-6;
    double t0 = 0.5;
    double r_lo = 1.0;
    double r_hi = 2.0;
};

std::vector<Witness> load_witnesses(const std::string& path);
Solution instantiate(const Witness& w);

const char* behaviour_name(Behaviour b);

}  // namespace rnls::catalog

#endif
