#pragma once

#include <stdexcept>
#include <string>

namespace argq {

// Malformed user input: bad file syntax, unknown node, partial labelling.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition of a library operation violated by the caller.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// A documented size cap was exceeded (see limits.hpp / ARGQ_LIMITS).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal construction produced an inconsistent network.
struct construction_error : std::logic_error {
    explicit construction_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace argq
