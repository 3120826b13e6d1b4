#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casp {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The search space of an enumeration is larger than the configured bound.
class bound_exceeded : public error {
public:
    bound_exceeded(std::size_t required, std::size_t bound)
        : error("search space needs " + std::to_string(required) + " guessed situated literals, bound is " +
                std::to_string(bound))
        , required_(required)
        , bound_(bound) {}

    std::size_t required() const noexcept { return required_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t required_;
    std::size_t bound_;
};

/// A least fixpoint derived both l and -l for some component.
class inconsistent_fixpoint : public error {
public:
    using error::error;
};

/// A focus sequence, query or literal names a component the program does not have.
class unknown_component : public error {
public:
    using error::error;
};

/// A program of the wrong class was handed to an operation (e.g. a disjunctive one to simulate_naf).
class class_mismatch : public error {
public:
    using error::error;
};

/// project_back refused an interpretation whose N-component projections are not total.
class not_total : public error {
public:
    using error::error;
};

} // namespace casp
