// Typed error hierarchy shared by all bdlrpc modules.
//
// Every failure that a caller can reasonably branch on gets its own type;
// everything derives from bdlrpc::Error so "catch the library" stays a
// one-liner in tools and tests.
#ifndef BDLRPC_ERRORS_HPP
#define BDLRPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bdlrpc {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BDLRPC_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                          \
    public:                                                              \
        explicit NAME(const std::string& what) : Error(what) {}          \
    }

// finite-field
BDLRPC_DEFINE_ERROR(NotPrimeError);          // q is not a prime
BDLRPC_DEFINE_ERROR(ReducibleModulusError);  // supplied modulus is not irreducible
BDLRPC_DEFINE_ERROR(SearchExhaustedError);   // randomized search ran out of budget
BDLRPC_DEFINE_ERROR(DivisionByZeroError);    // inverse of zero
BDLRPC_DEFINE_ERROR(FieldMismatchError);     // operands from different fields
BDLRPC_DEFINE_ERROR(LengthMismatchError);    // coefficient-vector length != m

// fq-matrix
BDLRPC_DEFINE_ERROR(DimensionMismatchError); // incompatible shapes
BDLRPC_DEFINE_ERROR(AmbientMismatchError);   // subspaces of different F_q^N

// subspace
BDLRPC_DEFINE_ERROR(DegreeOutOfRangeError);  // bounded_degree d outside [1, m]
BDLRPC_DEFINE_ERROR(ZeroScalarError);        // scalar_mul by zero

// codec
BDLRPC_DEFINE_ERROR(RankRetryExhaustedError); // full-rank resampling budget spent
BDLRPC_DEFINE_ERROR(BadParamsError);          // code parameters violate invariants

// expansion-counting
BDLRPC_DEFINE_ERROR(OutOfRangeError);  // combinatorial arguments out of range
BDLRPC_DEFINE_ERROR(TooLargeError);    // enumeration exceeds the size guard
BDLRPC_DEFINE_ERROR(OddUError);        // lower_bound_t requires even u
BDLRPC_DEFINE_ERROR(WrongShapeError);  // Ferrers diagram not of the two-level shape
BDLRPC_DEFINE_ERROR(BothZeroError);    // gcd(0, 0) undefined
BDLRPC_DEFINE_ERROR(ShapeMismatchError); // structured-A blocks disagree in size

// serialization / CLI
BDLRPC_DEFINE_ERROR(TextParseError);   // malformed textual matrix/element/params
BDLRPC_DEFINE_ERROR(UsageError);       // bad CLI/config usage

#undef BDLRPC_DEFINE_ERROR

} // namespace bdlrpc

#endif // BDLRPC_ERRORS_HPP
