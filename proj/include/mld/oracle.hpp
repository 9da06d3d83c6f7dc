#ifndef MLD_ORACLE_HPP
#define MLD_ORACLE_HPP

#include <vector>

#include "mld/newton.hpp"
#include "mld/rational.hpp"

namespace mld {

struct BoundaryCoefficients;

// Result of exhausting phi over the integer box [1, box_bound]^{n+1}.
// minimizers are listed in lexicographic order; interior means no minimizer
// touches the box's upper faces (a clipping heuristic, not by itself a
// global-optimality certificate).
struct BoxSearchResult {
    long box_bound = 0;
    Rational min_value = 0;
    std::vector<Covector> minimizers;
    bool interior = false;
};

inline constexpr long kDefaultEnumerationCeiling = 10'000'000;

// Brute-force lattice enumeration of phi, independent of the LP machinery:
// phi is evaluated by direct inner products over the full support. Throws
// EnumerationLimitError when box^(n+1) exceeds max_points.
BoxSearchResult brute_force_min(const SupportSet& s, const BoundaryCoefficients& d,
                                long box, long max_points = kDefaultEnumerationCeiling);

} // namespace mld

#endif
