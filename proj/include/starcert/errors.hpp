#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace starcert {

using Complex = std::complex<double>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroConstantTerm : public Error {
public:
    DivisionByZeroConstantTerm() : Error("series division: divisor has zero constant term") {}
};

class NonvanishingConstantTerm : public Error {
public:
    NonvanishingConstantTerm() : Error("integrate_g_over_t: constant term does not vanish") {}
};

class BranchPointAtOrigin : public Error {
public:
    BranchPointAtOrigin() : Error("log/pow series: constant term must equal 1") {}
};

class RadiusOutOfRange : public Error {
public:
    explicit RadiusOutOfRange(double r)
        : Error("|z| = " + std::to_string(r) + " exceeds the evaluation radius"), radius(r) {}
    double radius;
};

class ProfileNotNormalized : public Error {
public:
    ProfileNotNormalized() : Error("profile must take the value 1 at the origin") {}
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& name)
        : Error("function '" + name + "' violates f(0)=0, f'(0)=1") {}
};

/// f or f' (numerically) vanishes at a point of the disc other than the origin.
class PoleSuspected : public Error {
public:
    explicit PoleSuspected(Complex where)
        : Error("f or f' vanishes near z = (" + std::to_string(where.real()) + ", " +
                std::to_string(where.imag()) + ")"),
          z(where) {}
    Complex z;
};

class ArgOfZero : public Error {
public:
    ArgOfZero() : Error("argument of zero is undefined") {}
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class DegenerateAngle : public Error {
public:
    DegenerateAngle() : Error("theta must avoid 0 and pi") {}
};

}  // namespace starcert
