#pragma once

#include <stdexcept>

namespace cqv {

// Malformed textual input (edge lists, graph6, integer vectors, SD-words).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A clique vector rejected by the validity predicate; carries the reason.
struct ValidationReject : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cqv
