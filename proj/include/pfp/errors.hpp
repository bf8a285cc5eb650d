#pragma once

#include <stdexcept>
#include <string>

namespace pfp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDivision : Error {
    ZeroDivision() : Error("division by zero") {}
    explicit ZeroDivision(const std::string& what) : Error(what) {}
};

struct NonPositiveLeadingCoeff : Error {
    NonPositiveLeadingCoeff() : Error("leading coefficient is not positive") {}
};

struct InsufficientPrefix : Error {
    explicit InsufficientPrefix(const std::string& what) : Error(what) {}
};

struct NotPoincareType : Error {
    explicit NotPoincareType(const std::string& what) : Error(what) {}
};

struct DenominatorZero : Error {
    long index;
    explicit DenominatorZero(long n)
        : Error("matrix entry denominator vanishes at n = " + std::to_string(n)), index(n) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct NoUniqueDominant : Error {
    explicit NoUniqueDominant(const std::string& what) : Error(what) {}
};

struct NotSimple : Error {
    explicit NotSimple(const std::string& what) : Error(what) {}
};

struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& what) : Error(what) {}
};

struct PowerCapExceeded : Error {
    long cap;
    explicit PowerCapExceeded(long m_cap)
        : Error("no power m <= " + std::to_string(m_cap) + " makes T A^m T^-1 positive"), cap(m_cap) {}
};

struct InfiniteRadius : Error {
    InfiniteRadius() : Error("cone with r = infinity has no finite generator set") {}
};

struct NotPositiveMatrix : Error {
    NotPositiveMatrix() : Error("matrix is not entrywise positive") {}
};

struct MalformedCertificate : Error {
    explicit MalformedCertificate(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace pfp
