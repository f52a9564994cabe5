#ifndef TORICBUNCH_ERRORS_HPP
#define TORICBUNCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

struct FaceEnumerationTooLarge : std::runtime_error {
    explicit FaceEnumerationTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationTooLarge : std::runtime_error {
    explicit EnumerationTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct SearchTooLarge : std::runtime_error {
    explicit SearchTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotAProjectedFace : std::runtime_error {
    std::size_t index;
    explicit NotAProjectedFace(std::size_t idx)
        : std::runtime_error("candidate cone " + std::to_string(idx) + " is not a projected face"),
          index(idx) {}
};

struct ConditionViolated : std::runtime_error {
    explicit ConditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct NotMaximal : std::runtime_error {
    explicit NotMaximal(const std::string& what) : std::runtime_error(what) {}
};

struct NotStandard : std::runtime_error {
    explicit NotStandard(const std::string& what) : std::runtime_error(what) {}
};

struct NotFree : std::runtime_error {
    explicit NotFree(const std::string& what) : std::runtime_error(what) {}
};

struct Degenerate : std::runtime_error {
    explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

struct NotSimplicial : std::runtime_error {
    explicit NotSimplicial(const std::string& what) : std::runtime_error(what) {}
};

struct NotFullDimensional : std::runtime_error {
    explicit NotFullDimensional(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

struct MultiplicityDecrease : std::runtime_error {
    explicit MultiplicityDecrease(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameters : std::runtime_error {
    explicit InvalidParameters(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidFan : std::runtime_error {
    explicit InvalidFan(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric

#endif
