#pragma once

#include <stdexcept>
#include <string>

#include "topoideal/subset.hpp"

namespace topoideal {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family of sets failed topology validation. `first`/`second` name the
/// offending pair (for a missing empty set or carrier both are that set).
class NotATopology : public Error {
public:
    NotATopology(const std::string& what, SubsetMask first, SubsetMask second)
        : Error(what), first_(first), second_(second) {}
    SubsetMask first() const { return first_; }
    SubsetMask second() const { return second_; }

private:
    SubsetMask first_;
    SubsetMask second_;
};

/// A family of sets failed ideal validation.
class NotAnIdeal : public Error {
public:
    enum class Axiom { nonempty, heredity, additivity, carrier };

    NotAnIdeal(const std::string& what, Axiom axiom, SubsetMask first, SubsetMask second)
        : Error(what), axiom_(axiom), first_(first), second_(second) {}
    Axiom axiom() const { return axiom_; }
    /// heredity: the member A; additivity: the member A.
    SubsetMask first() const { return first_; }
    /// heredity: the missing subset B; additivity: the member B (A|B is missing).
    SubsetMask second() const { return second_; }

private:
    Axiom axiom_;
    SubsetMask first_;
    SubsetMask second_;
};

class EmptyCarrier : public Error {
public:
    using Error::Error;
};

class CarrierTooLarge : public Error {
public:
    using Error::Error;
};

class CarrierMismatch : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class MissingCodomainIdeal : public Error {
public:
    using Error::Error;
};

class UnknownTheoremId : public Error {
public:
    using Error::Error;
};

} // namespace topoideal
