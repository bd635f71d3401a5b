#pragma once

#include <stdexcept>
#include <string>

namespace opmean {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string &what) : std::invalid_argument(what) {}
};

struct NonSymmetric : std::invalid_argument {
    explicit NonSymmetric(const std::string &what) : std::invalid_argument(what) {}
};

struct BadRange : std::invalid_argument {
    explicit BadRange(const std::string &what) : std::invalid_argument(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string &what) : std::runtime_error(what) {}
};

struct NonPositive : std::invalid_argument {
    explicit NonPositive(const std::string &what) : std::invalid_argument(what) {}
};

struct BothSingular : std::runtime_error {
    explicit BothSingular(const std::string &what) : std::runtime_error(what) {}
};

// A scalar function was evaluated outside its domain (and no limit value exists).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

struct ParamOutOfDomain : std::invalid_argument {
    explicit ParamOutOfDomain(const std::string &what) : std::invalid_argument(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string &what) : std::runtime_error(what) {}
};

struct DuplicatePoints : std::invalid_argument {
    explicit DuplicatePoints(const std::string &what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace opmean
