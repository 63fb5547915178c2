#ifndef CURVEPROG_ERRORS_HPP
#define CURVEPROG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curveprog {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit code 2; anything else is a programming error.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& msg = "zero input") : Error(msg) {}
};

struct FactorizationTooHard : Error {
    explicit FactorizationTooHard(const std::string& msg) : Error(msg) {}
};

struct DegreeBoundExceeded : Error {
    explicit DegreeBoundExceeded(const std::string& msg) : Error(msg) {}
};

struct InvalidScale : Error {
    explicit InvalidScale(const std::string& msg = "scale factor must be nonzero") : Error(msg) {}
};

struct FiberIdenticallyZero : Error {
    explicit FiberIdenticallyZero(const std::string& msg) : Error(msg) {}
};

struct BadReductionPrime : Error {
    explicit BadReductionPrime(const std::string& msg) : Error(msg) {}
};

struct NotSmooth : Error {
    explicit NotSmooth(const std::string& msg) : Error(msg) {}
};

struct Inconclusive : Error {
    explicit Inconclusive(const std::string& msg) : Error(msg) {}
};

struct PointNotOnCurve : Error {
    explicit PointNotOnCurve(const std::string& msg) : Error(msg) {}
};

struct SingularCenter : Error {
    explicit SingularCenter(const std::string& msg) : Error(msg) {}
};

struct InconsistentRamification : Error {
    explicit InconsistentRamification(const std::string& msg) : Error(msg) {}
};

struct NotOnQuotient : Error {
    explicit NotOnQuotient(const std::string& msg) : Error(msg) {}
};

struct DegenerateModel : Error {
    explicit DegenerateModel(const std::string& msg) : Error(msg) {}
};

struct EmptyFiber : Error {
    std::size_t index;
    EmptyFiber(std::size_t idx, const std::string& msg) : Error(msg), index(idx) {}
};

struct ZeroInSet : Error {
    explicit ZeroInSet(const std::string& msg = "geometric progressions exclude 0") : Error(msg) {}
};

struct NotEnoughPoints : Error {
    explicit NotEnoughPoints(const std::string& msg) : Error(msg) {}
};

struct NeedRationalPoint : Error {
    explicit NeedRationalPoint(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg) : Error(msg), position(pos) {}
};

struct NotHomogeneous : Error {
    int degree_a, degree_b;
    NotHomogeneous(int da, int db, const std::string& msg)
        : Error(msg), degree_a(da), degree_b(db) {}
};

} // namespace curveprog

#endif
