#ifndef LLR_ERRORS_HPP
#define LLR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace llr {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A matrix entry was zero or negative where strict positivity is required.
class NonPositiveEntryError : public Error {
public:
    NonPositiveEntryError(long i, long j)
        : Error("non-positive entry at (" + std::to_string(i) + ", " +
                std::to_string(j) + ")"),
          row(i), col(j) {}
    long row;  // 1-based
    long col;  // 1-based
};

class EmptyMatrixError : public Error {
public:
    EmptyMatrixError() : Error("matrix has no entries") {}
};

class ShapeMismatchError : public Error {
public:
    ShapeMismatchError(long an, long am, long bn, long bm)
        : Error("shape mismatch: " + std::to_string(an) + "x" +
                std::to_string(am) + " vs " + std::to_string(bn) + "x" +
                std::to_string(bm)) {}
};

/// Theta grid whose implied distribution does not sum to one.
class NotNormalizedError : public Error {
public:
    explicit NotNormalizedError(double sum)
        : Error("implied distribution sums to " + std::to_string(sum) +
                ", expected 1"),
          total(sum) {}
    double total;
};

/// Eta grid whose Mobius inversion yields a non-positive cell.
class NotADistributionError : public Error {
public:
    explicit NotADistributionError(const std::string& msg) : Error(msg) {}
};

class NotRankOneError : public Error {
public:
    NotRankOneError() : Error("distribution is not in the full-bingo space") {}
};

class InvalidRankError : public Error {
public:
    explicit InvalidRankError(const std::string& msg) : Error(msg) {}
};

class InvalidColumnsError : public Error {
public:
    explicit InvalidColumnsError(const std::string& msg) : Error(msg) {}
};

class PlanShapeMismatchError : public Error {
public:
    PlanShapeMismatchError(long plan_m, long mat_m)
        : Error("plan is for " + std::to_string(plan_m) +
                " columns but matrix has " + std::to_string(mat_m)) {}
};

class InvalidSpecError : public Error {
public:
    explicit InvalidSpecError(const std::string& msg) : Error(msg) {}
};

class OutOfDomainError : public Error {
public:
    explicit OutOfDomainError(double b22)
        : Error("B22 sample " + std::to_string(b22) +
                " leaves the positive-matrix domain"),
          value(b22) {}
    double value;
};

class NegativeEntryError : public Error {
public:
    NegativeEntryError(long i, long j)
        : Error("negative entry at (" + std::to_string(i) + ", " +
                std::to_string(j) + ")") {}
};

class InvalidModeError : public Error {
public:
    explicit InvalidModeError(const std::string& msg) : Error(msg) {}
};

class UnknownMethodError : public Error {
public:
    explicit UnknownMethodError(const std::string& name)
        : Error("unknown method: " + name) {}
};

class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("empty input") {}
};

}  // namespace llr

#endif  // LLR_ERRORS_HPP
