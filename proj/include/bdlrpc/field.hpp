// Arithmetic in F_q (q prime) and the extension field F_{q^m} = F_q[x]/(f).
//
// Elements carry a shared pointer to their Field, which fixes q, m and the
// monic irreducible modulus f. The coefficient vector is the residue
// polynomial in the power basis 1, x, ..., x^{m-1}, lowest degree first —
// the same order used by the textual format "c0,c1,...,c{m-1}".
//
// Field objects are immutable; all element operations are pure, so values are
// safe to share across threads.
#ifndef BDLRPC_FIELD_HPP
#define BDLRPC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bdlrpc/errors.hpp"
#include "bdlrpc/rng.hpp"

namespace bdlrpc {

struct FieldParams {
    std::uint32_t q = 0;                  // prime characteristic
    std::uint32_t m = 0;                  // extension degree >= 1
    std::vector<std::uint32_t> modulus;   // c0..cm of the monic irreducible f

    // "q=..;m=..;mod=c0,...,cm"
    std::string to_text() const;
    static FieldParams from_text(const std::string& text);  // TextParseError
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Element {
public:
    Element() = default;

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_zero() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element inv() const;                    // DivisionByZeroError on zero
    Element pow(std::int64_t e) const;      // negative e via inverse
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    // "c0,c1,...,c{m-1}"
    std::string to_text() const;

private:
    friend class Field;
    Element(FieldPtr f, std::vector<std::uint32_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    FieldPtr field_;
    std::vector<std::uint32_t> c_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    // Validates a supplied modulus (monic, degree m, irreducible over F_q).
    // Errors: NotPrimeError, ReducibleModulusError, LengthMismatchError.
    static FieldPtr make(std::uint32_t q, std::uint32_t m,
                         const std::vector<std::uint32_t>& modulus);

    // Finds a monic irreducible modulus of degree m by seeded random search.
    // Deterministic for a fixed seed. Errors: NotPrimeError,
    // SearchExhaustedError (after the documented retry budget of 64*m draws).
    static FieldPtr make(std::uint32_t q, std::uint32_t m,
                         std::uint64_t seed = kDefaultModulusSeed);

    static constexpr std::uint64_t kDefaultModulusSeed = 0x9d2c5680u;
    static constexpr unsigned kModulusRetryFactor = 64;  // budget = 64*m draws

    const FieldParams& params() const { return params_; }
    std::uint32_t q() const { return params_.q; }
    std::uint32_t m() const { return params_.m; }

    Element zero() const;
    Element one() const;
    Element from_int(std::uint32_t c) const;   // the constant c mod q
    Element gen() const;                       // residue class of x
    Element from_coeffs(std::vector<std::uint32_t> c) const;  // LengthMismatchError
    Element parse(const std::string& text) const;             // TextParseError
    Element sample(Rng& rng) const;
    Element sample_nonzero(Rng& rng) const;

    bool same_field(const Field& o) const;

private:
    explicit Field(FieldParams p) : params_(std::move(p)) {}
    FieldParams params_;
};

// a lies in a proper subfield F_{q^{m'}} (m' | m, m' < m) iff a^{q^{m'}} = a.
bool in_proper_subfield(const Element& a);

// The F_q-vector view of F_{q^m} (coefficientwise; mutually inverse, linear).
std::vector<std::uint32_t> elem_to_vec(const Element& a);
Element vec_to_elem(const FieldPtr& field, const std::vector<std::uint32_t>& v);

// Irreducibility of a monic degree-m polynomial over F_q (c0..cm, cm = 1):
// x^{q^m} = x mod f and gcd(x^{q^{m/p}} - x, f) = 1 for every prime p | m.
bool poly_irreducible(std::uint32_t q, const std::vector<std::uint32_t>& f);

} // namespace bdlrpc

#endif // BDLRPC_FIELD_HPP
