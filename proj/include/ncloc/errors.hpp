#pragma once

#include <stdexcept>
#include <string>

namespace ncloc {

// Usage errors are exceptions; mathematical non-outcomes (an undefined
// quasideterminant, a witness search that ran out of budget) are ordinary
// return values and never throw.

struct not_invertible : std::domain_error {
    explicit not_invertible(const std::string& what) : std::domain_error(what) {}
};

struct mixed_rings : std::invalid_argument {
    explicit mixed_rings(const std::string& what) : std::invalid_argument(what) {}
};

struct non_terminating : std::runtime_error {
    explicit non_terminating(const std::string& what) : std::runtime_error(what) {}
};

struct bad_presentation : std::invalid_argument {
    explicit bad_presentation(const std::string& what) : std::invalid_argument(what) {}
};

struct shape_error : std::invalid_argument {
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ncloc
