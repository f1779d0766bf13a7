// F_q-linear subspaces of F_{q^m} and their products.
//
// This is the language of supports: the bounded-degree space
// V_{alpha,d} = <1, alpha, ..., alpha^{d-1}>, an error's support E, a
// syndrome's support S, product spaces U.V, and scalar shifts beta*V.
// Internally a Subspace is an FqSubspace of the ambient coordinate space
// F_q^m, one basis row per field element, so equality stays structural.
#ifndef BDLRPC_SUBSPACE_HPP
#define BDLRPC_SUBSPACE_HPP

#include <string>
#include <vector>

#include "bdlrpc/field.hpp"
#include "bdlrpc/fq_matrix.hpp"

namespace bdlrpc {

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(FieldPtr field);  // the zero subspace

    // Span of the vector images of the given elements (FieldMismatchError).
    static Subspace span_of(const std::vector<Element>& elems);

    // V_{alpha,d} = <1, alpha, ..., alpha^{d-1}>; requires 1 <= d <= m
    // (DegreeOutOfRangeError). If alpha avoids proper subfields, dim = d.
    static Subspace bounded_degree(const Element& alpha, std::uint32_t d);

    static Subspace full(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return sp_.dim(); }
    const FqSubspace& coords() const { return sp_; }

    bool contains(const Element& a) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Canonical basis rows converted back to field elements.
    std::vector<Element> basis_elements() const;

    // One basis element per line, in the element text format.
    std::string to_text() const;

private:
    Subspace(FieldPtr field, FqSubspace sp)
        : field_(std::move(field)), sp_(std::move(sp)) {}

    FieldPtr field_;
    FqSubspace sp_;
};

Subspace sum(const Subspace& U, const Subspace& V);
Subspace intersect(const Subspace& U, const Subspace& V);

// Span of all pairwise products of canonical basis elements of U and V;
// dim(U.V) <= dim(U) * dim(V).
Subspace product(const Subspace& U, const Subspace& V);

// beta * V = {beta * v}; dim preserved; beta != 0 (ZeroScalarError).
Subspace scalar_mul(const Element& beta, const Subspace& V);

} // namespace bdlrpc

#endif // BDLRPC_SUBSPACE_HPP
