// Univariate polynomials over F_q (q prime), canonical form.
//
// Coefficients are stored lowest degree first with no trailing zeros, so the
// zero polynomial has an empty coefficient vector; degree() reports the
// kZeroDegree sentinel for it. This is the representation behind the
// companion-matrix criterion: a row vector z in F_q^N is read as the
// polynomial z(x) = z_0 + z_1 x + ... + z_{N-1} x^{N-1}.
#ifndef BDLRPC_FQPOLY_HPP
#define BDLRPC_FQPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bdlrpc {

class FqPolynomial {
public:
    // degree() of the zero polynomial (standing in for -infinity).
    static constexpr std::int64_t kZeroDegree = -1;

    FqPolynomial() = default;
    // Coefficients lowest degree first; reduced mod q and trimmed.
    FqPolynomial(std::uint32_t q, std::vector<std::uint32_t> coeffs);

    static FqPolynomial zero(std::uint32_t q) { return FqPolynomial(q, {}); }
    static FqPolynomial one(std::uint32_t q) { return FqPolynomial(q, {1}); }

    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::int64_t degree() const {
        return c_.empty() ? kZeroDegree : static_cast<std::int64_t>(c_.size()) - 1;
    }
    bool is_zero() const { return c_.empty(); }

    std::uint32_t leading() const;  // DivisionByZeroError on the zero polynomial
    FqPolynomial monic() const;     // divide by leading coefficient

    FqPolynomial operator+(const FqPolynomial& o) const;
    FqPolynomial operator-(const FqPolynomial& o) const;
    FqPolynomial operator*(const FqPolynomial& o) const;
    // Remainder of *this modulo a nonzero divisor.
    FqPolynomial mod(const FqPolynomial& divisor) const;
    bool operator==(const FqPolynomial& o) const = default;

    std::string to_text() const;  // "c0,c1,...,cn" ("0" for the zero polynomial)

private:
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> c_;  // trimmed, entries in [0, q)
};

// Monic gcd by the Euclidean algorithm; BothZeroError if both are zero.
FqPolynomial poly_gcd(const FqPolynomial& a, const FqPolynomial& b);

} // namespace bdlrpc

#endif // BDLRPC_FQPOLY_HPP
