// Subspaces of F_{q^m}: construction, lattice operations, products.
#include "bdlrpc/subspace.hpp"

#include <sstream>

#include "bdlrpc/errors.hpp"

namespace bdlrpc {

namespace {

FqSubspace zero_space(const FieldPtr& f) {
    return FqSubspace(f->q(), f->m());
}

void require_same(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || !a->same_field(*b))
        throw FieldMismatchError("subspace operands live in different fields");
}

} // namespace

Subspace::Subspace(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw FieldMismatchError("null field");
    sp_ = zero_space(field_);
}

Subspace Subspace::span_of(const std::vector<Element>& elems) {
    if (elems.empty())
        throw FieldMismatchError("span_of needs at least one element to know its field");
    FieldPtr f = elems.front().field();
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(elems.size());
    for (const Element& e : elems) {
        if (!e.field()->same_field(*f))
            throw FieldMismatchError("span_of: mixed fields");
        rows.push_back(elem_to_vec(e));
    }
    FqSubspace sp = FqSubspace::span(FqMatrix::from_rows(f->q(), rows));
    return Subspace(f, std::move(sp));
}

Subspace Subspace::bounded_degree(const Element& alpha, std::uint32_t d) {
    const FieldPtr& f = alpha.field();
    if (d < 1 || d > f->m())
        throw DegreeOutOfRangeError("bounded_degree: need 1 <= d <= m");
    std::vector<Element> pw;
    pw.reserve(d);
    Element cur = f->one();
    for (std::uint32_t i = 0; i < d; ++i) {
        pw.push_back(cur);
        cur = cur * alpha;
    }
    return span_of(pw);
}

Subspace Subspace::full(const FieldPtr& field) {
    FqSubspace sp = FqSubspace::span(FqMatrix::identity(field->q(), field->m()));
    return Subspace(field, std::move(sp));
}

bool Subspace::contains(const Element& a) const {
    if (!field_ || !a.field()->same_field(*field_))
        throw FieldMismatchError("contains: element from another field");
    return sp_.contains(elem_to_vec(a));
}

bool Subspace::contains(const Subspace& other) const {
    require_same(field_, other.field_);
    return sp_.contains(other.sp_);
}

bool Subspace::operator==(const Subspace& o) const {
    require_same(field_, o.field_);
    return sp_ == o.sp_;
}

std::vector<Element> Subspace::basis_elements() const {
    std::vector<Element> out;
    out.reserve(sp_.dim());
    for (std::size_t i = 0; i < sp_.dim(); ++i)
        out.push_back(vec_to_elem(field_, sp_.basis().row(i)));
    return out;
}

std::string Subspace::to_text() const {
    std::ostringstream os;
    for (const Element& e : basis_elements()) os << e.to_text() << "\n";
    return os.str();
}

Subspace sum(const Subspace& U, const Subspace& V) {
    require_same(U.field(), V.field());
    return Subspace::span_of([&] {
        std::vector<Element> gens = U.basis_elements();
        std::vector<Element> more = V.basis_elements();
        gens.insert(gens.end(), more.begin(), more.end());
        if (gens.empty()) gens.push_back(U.field()->zero());
        return gens;
    }());
}

Subspace intersect(const Subspace& U, const Subspace& V) {
    require_same(U.field(), V.field());
    FqSubspace w = span_intersect(U.coords(), V.coords());
    std::vector<Element> gens;
    gens.reserve(w.dim() + 1);
    gens.push_back(U.field()->zero());
    for (std::size_t i = 0; i < w.dim(); ++i)
        gens.push_back(vec_to_elem(U.field(), w.basis().row(i)));
    return Subspace::span_of(gens);
}

Subspace product(const Subspace& U, const Subspace& V) {
    require_same(U.field(), V.field());
    std::vector<Element> gens;
    gens.push_back(U.field()->zero());
    for (const Element& u : U.basis_elements())
        for (const Element& v : V.basis_elements()) gens.push_back(u * v);
    return Subspace::span_of(gens);
}

Subspace scalar_mul(const Element& beta, const Subspace& V) {
    if (!beta.field()->same_field(*V.field()))
        throw FieldMismatchError("scalar_mul: scalar from another field");
    if (beta == beta.field()->zero())
        throw ZeroScalarError("scalar_mul: beta must be nonzero");
    std::vector<Element> gens;
    gens.push_back(V.field()->zero());
    for (const Element& v : V.basis_elements()) gens.push_back(beta * v);
    return Subspace::span_of(gens);
}

} // namespace bdlrpc
