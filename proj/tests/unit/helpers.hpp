#ifndef ASQF_TEST_HELPERS_HPP
#define ASQF_TEST_HELPERS_HPP

#include <optional>
#include <random>

#include "asqf/error.hpp"
#include "asqf/gf.hpp"

namespace asqf::test {

/// The ErrorKind an expression throws, or nullopt when it does not throw.
template <typename Fn>
std::optional<ErrorKind> thrown_kind(Fn&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline FFElem random_elem(const FieldCtx& F, std::mt19937_64& rng) {
    return F.element_from_index(rng() % F.order);
}

inline FFElem random_nonzero(const FieldCtx& F, std::mt19937_64& rng) {
    return F.element_from_index(1 + rng() % (F.order - 1));
}

} // namespace asqf::test

#endif
