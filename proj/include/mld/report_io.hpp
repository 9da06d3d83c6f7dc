#ifndef MLD_REPORT_IO_HPP
#define MLD_REPORT_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mld/discrepancy.hpp"
#include "mld/newton.hpp"

namespace mld {

// One structured document travels both directions: as an input it needs
// {dimension, support, delta?}; as an output it additionally carries the
// full report, so a report can be re-ingested as an input file unchanged.
struct SupportDocument {
    int dimension = 0;
    std::vector<Exponent> support;
    std::optional<std::vector<Rational>> delta;
};

SupportDocument parse_support_document(std::string_view json_text);

std::string render_json(const SupportSet& s, const BoundaryCoefficients& d,
                        const MldReport& report, const std::optional<LctResult>& lct);

std::string render_text(const SupportSet& s, const BoundaryCoefficients& d,
                        const MldReport& report, const std::optional<LctResult>& lct);

inline constexpr const char* kMinusInfinityToken = "-inf";
inline constexpr const char* kAssumptionsBanner =
    "assumes f is non-degenerate with respect to its Newton polyhedron; "
    "the hypersurface-side reading a(0;X) additionally assumes X normal. "
    "Neither hypothesis is verified by this tool.";

} // namespace mld

#endif
