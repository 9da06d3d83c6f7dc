#include "mld/oracle.hpp"

#include "mld/discrepancy.hpp"
#include "mld/errors.hpp"

namespace mld {

namespace {

// Direct evaluation: (a, delta) - min over the whole support of (a, m).
// No LP, no vertex reduction; this is the reference the solver is checked
// against, so it shares nothing with the solver path.
Rational phi_direct(const SupportSet& s, const BoundaryCoefficients& d, const Covector& a) {
    Rational pairing = 0;
    for (std::size_t i = 0; i < d.delta.size(); ++i) pairing += d.delta[i] * a.w[i];
    bool first = true;
    Rational least = 0;
    for (const auto& m : s.points()) {
        Rational v = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) v += Rational(a.w[i]) * m.e[i];
        if (first || v < least) {
            least = v;
            first = false;
        }
    }
    return pairing - least;
}

} // namespace

BoxSearchResult brute_force_min(const SupportSet& s, const BoundaryCoefficients& d,
                                long box, long max_points) {
    if (box < 1) throw InputError("oracle: box bound must be at least 1");
    if (d.delta.size() != static_cast<std::size_t>(s.dimension()))
        throw InputError("delta: dimension mismatch");

    const int dim = s.dimension();
    {
        Integer total = 1;
        for (int i = 0; i < dim; ++i) total *= box;
        if (total > max_points)
            throw EnumerationLimitError("oracle: box holds more than max_points lattice points");
    }

    BoxSearchResult result;
    result.box_bound = box;

    Covector a;
    a.w.assign(dim, 1);
    bool first = true;
    while (true) {
        Rational v = phi_direct(s, d, a);
        if (first || v < result.min_value) {
            result.min_value = v;
            result.minimizers.clear();
            result.minimizers.push_back(a);
            first = false;
        } else if (v == result.min_value) {
            result.minimizers.push_back(a);
        }

        // Odometer increment, last coordinate fastest: visits the box in
        // lexicographic order, so minimizers come out sorted.
        int pos = dim - 1;
        while (pos >= 0 && a.w[pos] == box) {
            a.w[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++a.w[pos];
    }

    result.interior = true;
    for (const auto& m : result.minimizers)
        for (long c : m.w)
            if (c == box) result.interior = false;
    return result;
}

} // namespace mld
