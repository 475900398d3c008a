#pragma once

#include <stdexcept>
#include <string>

namespace kunzkit {

// Base class for violated mathematical preconditions.  The CLI maps these to
// exit code 1; anything else (bad flags, malformed JSON) is a usage error.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// gcd of the generators is not 1, or the generator list is empty/non-positive.
class NotNumerical : public DomainError {
public:
    explicit NotNumerical(const std::string& msg) : DomainError("NotNumerical: " + msg) {}
};

// A Kunz/Apéry tuple violates one of the defining facet inequalities.
class NotInPolyhedron : public DomainError {
public:
    explicit NotInPolyhedron(const std::string& msg) : DomainError("NotInPolyhedron: " + msg) {}
};

// Factorizations were requested for an integer outside the semigroup.
class NotAnElement : public DomainError {
public:
    explicit NotAnElement(const std::string& msg) : DomainError("NotAnElement: " + msg) {}
};

// Hyperplane/cover input does not cut out a genuine Kunz poset.
class NotAFace : public DomainError {
public:
    explicit NotAFace(const std::string& msg) : DomainError("NotAFace: " + msg) {}
};

// Semigroup-only statistic requested on a poset with nontrivial Kunz subgroup.
class NotSemigroupFace : public DomainError {
public:
    explicit NotSemigroupFace(const std::string& msg) : DomainError("NotSemigroupFace: " + msg) {}
};

// A Kunz tuple handed to a parametric presentation does not lie on its face.
class NotOnFace : public DomainError {
public:
    explicit NotOnFace(const std::string& msg) : DomainError("NotOnFace: " + msg) {}
};

// Vector/matrix size disagreement.
class DimensionMismatch : public DomainError {
public:
    explicit DimensionMismatch(const std::string& msg) : DomainError("DimensionMismatch: " + msg) {}
};

}  // namespace kunzkit
