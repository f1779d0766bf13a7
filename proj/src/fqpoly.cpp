// Canonical F_q[x] arithmetic: ring operations, remainder, monic gcd.
#include "bdlrpc/fqpoly.hpp"

#include <sstream>

#include "bdlrpc/errors.hpp"
#include "bdlrpc/fq_matrix.hpp"  // fq_inv

namespace bdlrpc {

namespace {

void trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_q(const FqPolynomial& a, const FqPolynomial& b) {
    if (a.q() != b.q())
        throw FieldMismatchError("polynomials over different prime fields");
}

} // namespace

FqPolynomial::FqPolynomial(std::uint32_t q, std::vector<std::uint32_t> coeffs)
    : q_(q), c_(std::move(coeffs)) {
    if (q_ < 2 || !is_prime_u32(q_)) throw NotPrimeError("polynomial modulus q must be prime");
    for (auto& v : c_) v %= q_;
    trim(c_);
}

std::uint32_t FqPolynomial::leading() const {
    if (c_.empty()) throw DivisionByZeroError("zero polynomial has no leading coefficient");
    return c_.back();
}

FqPolynomial FqPolynomial::monic() const {
    const std::uint32_t s = fq_inv(leading(), q_);
    std::vector<std::uint32_t> out(c_);
    for (auto& v : out) v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * s) % q_);
    return FqPolynomial(q_, std::move(out));
}

FqPolynomial FqPolynomial::operator+(const FqPolynomial& o) const {
    check_q(*this, o);
    std::vector<std::uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] = (out[i] + o.c_[i]) % q_;
    return FqPolynomial(q_, std::move(out));
}

FqPolynomial FqPolynomial::operator-(const FqPolynomial& o) const {
    check_q(*this, o);
    std::vector<std::uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] = (out[i] + q_ - o.c_[i]) % q_;
    return FqPolynomial(q_, std::move(out));
}

FqPolynomial FqPolynomial::operator*(const FqPolynomial& o) const {
    check_q(*this, o);
    if (is_zero() || o.is_zero()) return zero(q_);
    std::vector<std::uint32_t> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % q_);
        }
    }
    return FqPolynomial(q_, std::move(out));
}

FqPolynomial FqPolynomial::mod(const FqPolynomial& divisor) const {
    check_q(*this, divisor);
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial mod by zero");
    std::vector<std::uint32_t> r(c_);
    const auto& d = divisor.c_;
    const std::uint32_t lead_inv = fq_inv(divisor.leading(), q_);
    while (r.size() >= d.size()) {
        trim(r);
        if (r.size() < d.size()) break;
        // r.back() != 0 after trim, so one step always clears the top term.
        const std::uint32_t coef = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(r.back()) * lead_inv) % q_);
        const std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::uint64_t sub = (static_cast<std::uint64_t>(coef) * d[i]) % q_;
            r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + q_ - sub) % q_);
        }
    }
    trim(r);
    return FqPolynomial(q_, std::move(r));
}

std::string FqPolynomial::to_text() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

FqPolynomial poly_gcd(const FqPolynomial& a, const FqPolynomial& b) {
    check_q(a, b);
    if (a.is_zero() && b.is_zero()) throw BothZeroError("gcd(0, 0) is undefined");
    FqPolynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FqPolynomial r2 = r0.mod(r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

} // namespace bdlrpc
