#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The reflexive-transitive closure of the given relation is not antisymmetric.
class CycleError : public Error { using Error::Error; };
/// Element index or element count out of range.
class RangeError : public Error { using Error::Error; };
/// An exponential enumeration exceeded its configured limit.
class CapacityError : public Error { using Error::Error; };
/// A subset that should be open (a down-set) is not.
class NotOpenError : public Error { using Error::Error; };
/// A family of subsets is not a T0 topology.
class MalformedFamilyError : public Error { using Error::Error; };
/// A map between finite spectral spaces fails to be monotone.
class NotSpectralError : public Error { using Error::Error; };
/// Composition of maps whose middle spaces differ.
class CompositionMismatchError : public Error { using Error::Error; };
/// A map expected to be an order-isomorphism is not one.
class NotIsomorphismError : public Error { using Error::Error; };
/// A principal point was sent to a non-principal one.
class IrreducibilityError : public Error { using Error::Error; };
/// A supremum required by the sup-completion does not exist.
class SigmaUndefinedError : public Error { using Error::Error; };
/// Malformed poset document or export request.
class FormatError : public Error { using Error::Error; };

}  // namespace spectral
