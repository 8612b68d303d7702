/**
 * @file errors.hpp
 * @brief Error taxonomy shared across the engine.
 *
 * std::domain_error / std::invalid_argument signal violated preconditions or
 * unusable input (CLI exit code 2).  identity_violation signals that an exact
 * internal identity failed to hold (CLI exit code 3); any such failure means
 * a computed object is wrong and must never be silently returned.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace wpvol {

struct identity_violation : std::runtime_error {
    explicit identity_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wpvol
