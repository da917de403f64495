#pragma once

#include <stdexcept>
#include <string>

namespace squiral {

// Bad user-supplied data: files, flags, malformed rules.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed the configured memory budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace squiral
