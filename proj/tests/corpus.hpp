#ifndef MLD_TESTS_CORPUS_HPP
#define MLD_TESTS_CORPUS_HPP

#include <optional>
#include <random>
#include <vector>

#include "mld/errors.hpp"
#include "mld/newton.hpp"

namespace mld_tests {

// Bounded draw straight off the engine: mt19937's output sequence is pinned
// by the standard, std::uniform_int_distribution is not, and these fixtures
// must not drift across platforms.
inline long draw(std::mt19937& gen, long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

inline std::optional<mld::SupportSet> try_random_support(std::mt19937& gen) {
    const int dim = static_cast<int>(draw(gen, 2, 4));
    const int count = static_cast<int>(draw(gen, 2, 8));
    std::vector<mld::Exponent> points;
    for (int k = 0; k < count; ++k) {
        mld::Exponent e;
        for (int i = 0; i < dim; ++i) e.e.push_back(draw(gen, 0, 6));
        points.push_back(std::move(e));
    }
    try {
        return mld::validate_support(std::move(points), dim);
    } catch (const mld::InputError&) {
        return std::nullopt;
    }
}

// Rejection sampling until `size` supports pass validation.
inline std::vector<mld::SupportSet> random_corpus(unsigned seed, int size) {
    std::mt19937 gen(seed);
    std::vector<mld::SupportSet> out;
    while (static_cast<int>(out.size()) < size)
        if (auto s = try_random_support(gen)) out.push_back(std::move(*s));
    return out;
}

inline mld::Covector random_covector(std::mt19937& gen, int dim, long hi) {
    mld::Covector a;
    for (int i = 0; i < dim; ++i) a.w.push_back(draw(gen, 1, hi));
    return a;
}

} // namespace mld_tests

#endif
