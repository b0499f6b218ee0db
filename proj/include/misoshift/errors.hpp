#pragma once

#include <stdexcept>
#include <string>

namespace misoshift {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimMismatch : public Error {
public:
    explicit DimMismatch(const std::string& what) : Error(what) {}
};

class NonHermitianInput : public Error {
public:
    explicit NonHermitianInput(const std::string& what) : Error(what) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

class Singular : public Error {
public:
    explicit Singular(const std::string& what) : Error(what) {}
};

class NegativeEigenvalue : public Error {
public:
    explicit NegativeEigenvalue(const std::string& what) : Error(what) {}
};

class IndexOutOfHorizon : public Error {
public:
    explicit IndexOutOfHorizon(const std::string& what) : Error(what) {}
};

class HorizonTooShort : public Error {
public:
    explicit HorizonTooShort(const std::string& what) : Error(what) {}
};

class WrongKind : public Error {
public:
    explicit WrongKind(const std::string& what) : Error(what) {}
};

class ZeroVector : public Error {
public:
    explicit ZeroVector(const std::string& what) : Error(what) {}
};

class InvalidMatrix : public Error {
public:
    explicit InvalidMatrix(const std::string& what) : Error(what) {}
};

/// A construction precondition (p(0)=I, positive definiteness, degree bound)
/// failed; the message names the offending item.
class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

/// The inductive square-root step hit an ill-conditioned intermediate.
class SqrtFailure : public Error {
public:
    explicit SqrtFailure(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace misoshift
