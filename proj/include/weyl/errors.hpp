#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// An internal cross-check failed: a computed result contradicts an
/// independently verified identity. Distinct from precondition errors.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weyl
