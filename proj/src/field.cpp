#include "bdlrpc/field.hpp"

#include <algorithm>
#include <sstream>

#include "bdlrpc/fq_matrix.hpp"  // fq_inv, is_prime_u32

namespace bdlrpc {

namespace {

// --- Dense polynomial helpers over F_q, lowest degree first, used only for
// --- modulus handling and element arithmetic. The zero polynomial is {}.

using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t q) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % q);
    }
    poly_trim(c);
    return c;
}

// Remainder of a modulo monic f (in place on a copy).
Poly poly_mod(Poly a, const Poly& f, std::uint32_t q) {
    const int df = poly_deg(f);
    poly_trim(a);
    while (poly_deg(a) >= df) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - f.size();
        if (lead != 0)
            for (std::size_t j = 0; j < f.size(); ++j) {
                const std::uint64_t sub = static_cast<std::uint64_t>(lead) * f[j] % q;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + q - sub) % q);
            }
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t q) {
    return poly_mod(poly_mul(a, b, q), f, q);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t q) {
    Poly result{1};
    base = poly_mod(std::move(base), f, q);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, f, q);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, q);
    }
    return result;
}

Poly poly_gcd_monic(Poly a, Poly b, std::uint32_t q) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // Reduce a mod b after making b monic.
        const std::uint32_t inv_lead = fq_inv(b.back(), q);
        for (auto& c : b) c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(c) * inv_lead % q);
        Poly r = a;
        while (poly_deg(r) >= poly_deg(b)) {
            const std::uint32_t lead = r.back();
            const std::size_t shift = r.size() - b.size();
            if (lead != 0)
                for (std::size_t j = 0; j < b.size(); ++j) {
                    const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[j] % q;
                    r[shift + j] = static_cast<std::uint32_t>((r[shift + j] + q - sub) % q);
                }
            poly_trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint32_t inv_lead = fq_inv(a.back(), q);
        for (auto& c : a) c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(c) * inv_lead % q);
    }
    return a;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

void check_same(const Element& a, const Element& b) {
    if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
        throw FieldMismatchError("elements of different fields");
}

} // namespace

bool poly_irreducible(std::uint32_t q, const std::vector<std::uint32_t>& f) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size()) - 1;
    if (m == 0) return false;
    if (f.back() != 1) return false;  // must be monic
    if (m == 1) return true;

    const Poly x{0, 1};
    // frob[i] = x^{q^i} mod f, built by iterated q-th powers (Frobenius is a
    // ring homomorphism in characteristic q, so each step is one powmod).
    Poly frob = x;
    std::vector<Poly> at_index(m + 1);
    for (std::uint32_t i = 1; i <= m; ++i) {
        frob = poly_powmod(frob, q, f, q);
        at_index[i] = frob;
    }
    if (at_index[m] != x) return false;
    for (std::uint32_t p : prime_divisors(m)) {
        // gcd(x^{q^{m/p}} - x, f) must be 1.
        Poly diff = at_index[m / p];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + q - 1) % q;
        poly_trim(diff);
        Poly g = poly_gcd_monic(diff, f, q);
        if (poly_deg(g) > 0) return false;
    }
    return true;
}

// --- FieldParams text form ---------------------------------------------------

std::string FieldParams::to_text() const {
    std::ostringstream out;
    out << "q=" << q << ";m=" << m << ";mod=";
    for (std::size_t i = 0; i < modulus.size(); ++i) {
        if (i) out << ',';
        out << modulus[i];
    }
    return out.str();
}

FieldParams FieldParams::from_text(const std::string& text) {
    FieldParams p;
    unsigned long long q = 0, m = 0;
    std::size_t mod_at = text.find(";mod=");
    if (std::sscanf(text.c_str(), "q=%llu;m=%llu;", &q, &m) != 2 ||
        mod_at == std::string::npos)
        throw TextParseError("field params must be \"q=..;m=..;mod=c0,...,cm\"");
    p.q = static_cast<std::uint32_t>(q);
    p.m = static_cast<std::uint32_t>(m);
    std::istringstream in(text.substr(mod_at + 5));
    std::string tok;
    while (std::getline(in, tok, ','))
        p.modulus.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    if (p.modulus.size() != p.m + 1)
        throw TextParseError("modulus must have m+1 coefficients");
    return p;
}

// --- Field -------------------------------------------------------------------

FieldPtr Field::make(std::uint32_t q, std::uint32_t m,
                     const std::vector<std::uint32_t>& modulus) {
    if (!is_prime_u32(q)) throw NotPrimeError("field characteristic must be prime");
    if (m < 1) throw LengthMismatchError("extension degree must be >= 1");
    if (modulus.size() != m + 1)
        throw LengthMismatchError("modulus must have m+1 coefficients");
    for (std::uint32_t c : modulus)
        if (c >= q) throw LengthMismatchError("modulus coefficient out of range");
    if (modulus.back() != 1)
        throw ReducibleModulusError("modulus must be monic");
    if (!poly_irreducible(q, modulus))
        throw ReducibleModulusError("modulus is reducible over F_q");
    return FieldPtr(new Field(FieldParams{q, m, modulus}));
}

FieldPtr Field::make(std::uint32_t q, std::uint32_t m, std::uint64_t seed) {
    if (!is_prime_u32(q)) throw NotPrimeError("field characteristic must be prime");
    if (m < 1) throw LengthMismatchError("extension degree must be >= 1");
    Rng rng(seed);
    const unsigned budget = kModulusRetryFactor * m;
    for (unsigned attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::uint32_t> f(m + 1, 0);
        for (std::uint32_t i = 0; i < m; ++i) f[i] = rng.below(q);
        f[m] = 1;
        if (poly_irreducible(q, f))
            return FieldPtr(new Field(FieldParams{q, m, std::move(f)}));
    }
    throw SearchExhaustedError("no irreducible modulus found within budget");
}

bool Field::same_field(const Field& o) const {
    return this == &o ||
           (params_.q == o.params_.q && params_.m == o.params_.m &&
            params_.modulus == o.params_.modulus);
}

Element Field::zero() const {
    return Element(shared_from_this(), std::vector<std::uint32_t>(params_.m, 0));
}

Element Field::one() const { return from_int(1); }

Element Field::from_int(std::uint32_t c) const {
    std::vector<std::uint32_t> v(params_.m, 0);
    v[0] = c % params_.q;
    return Element(shared_from_this(), std::move(v));
}

Element Field::gen() const {
    if (params_.m == 1) {
        // x reduces to the constant -c0 modulo the linear modulus x + c0.
        return from_int((params_.q - params_.modulus[0]) % params_.q);
    }
    std::vector<std::uint32_t> v(params_.m, 0);
    v[1] = 1;
    return Element(shared_from_this(), std::move(v));
}

Element Field::from_coeffs(std::vector<std::uint32_t> c) const {
    if (c.size() != params_.m)
        throw LengthMismatchError("coefficient vector length != m");
    for (auto& x : c) x %= params_.q;
    return Element(shared_from_this(), std::move(c));
}

Element Field::parse(const std::string& text) const {
    std::vector<std::uint32_t> c;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        } catch (const std::exception&) {
            throw TextParseError("bad element coefficient: " + tok);
        }
    }
    if (c.size() != params_.m)
        throw TextParseError("element must have exactly m coefficients");
    return from_coeffs(std::move(c));
}

Element Field::sample(Rng& rng) const {
    std::vector<std::uint32_t> v(params_.m);
    for (auto& x : v) x = rng.below(params_.q);
    return Element(shared_from_this(), std::move(v));
}

Element Field::sample_nonzero(Rng& rng) const {
    for (;;) {
        Element a = sample(rng);
        if (!a.is_zero()) return a;
    }
}

// --- Element -----------------------------------------------------------------

bool Element::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Element::operator==(const Element& o) const {
    if (!field_ || !o.field_) return field_ == o.field_ && c_ == o.c_;
    return field_->same_field(*o.field_) && c_ == o.c_;
}

Element Element::operator+(const Element& o) const {
    check_same(*this, o);
    const std::uint32_t q = field_->q();
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = (c_[i] + o.c_[i]) % q;
    return Element(field_, std::move(v));
}

Element Element::operator-() const {
    const std::uint32_t q = field_->q();
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = (q - c_[i]) % q;
    return Element(field_, std::move(v));
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
    check_same(*this, o);
    const std::uint32_t q = field_->q();
    Poly prod = poly_mul(c_, o.c_, q);
    Poly red = poly_mod(std::move(prod), field_->params().modulus, q);
    red.resize(field_->m(), 0);
    return Element(field_, std::move(red));
}

Element Element::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    const std::uint32_t q = field_->q();
    const Poly& f = field_->params().modulus;
    // Extended Euclid over F_q[x] on (a, f): maintain s with s*a = r (mod f).
    Poly r0 = c_, r1 = f;
    poly_trim(r0);
    Poly s0{1}, s1{};
    while (!r1.empty()) {
        // Divide r0 by r1: compute quotient times s1 incrementally.
        Poly r = r0, s = s0;
        while (poly_deg(r) >= poly_deg(r1)) {
            const std::uint32_t coef = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(r.back()) * fq_inv(r1.back(), q) % q);
            const std::size_t shift = r.size() - r1.size();
            if (coef != 0) {
                for (std::size_t j = 0; j < r1.size(); ++j) {
                    const std::uint64_t sub = static_cast<std::uint64_t>(coef) * r1[j] % q;
                    r[shift + j] = static_cast<std::uint32_t>((r[shift + j] + q - sub) % q);
                }
                // s -= coef * x^shift * s1
                if (s.size() < s1.size() + shift) s.resize(s1.size() + shift, 0);
                for (std::size_t j = 0; j < s1.size(); ++j) {
                    const std::uint64_t sub = static_cast<std::uint64_t>(coef) * s1[j] % q;
                    s[shift + j] = static_cast<std::uint32_t>((s[shift + j] + q - sub) % q);
                }
            }
            poly_trim(r);
        }
        poly_trim(s);
        r0 = std::move(r1); s0 = std::move(s1);
        r1 = std::move(r);  s1 = std::move(s);
    }
    // r0 = gcd (a constant, since f is irreducible); s0 * a = r0 mod f.
    const std::uint32_t scale = fq_inv(r0.empty() ? 0 : r0[0], q);
    Poly inv = poly_mod(std::move(s0), f, q);
    for (auto& x : inv) x = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(x) * scale % q);
    inv.resize(field_->m(), 0);
    return Element(field_, std::move(inv));
}

Element Element::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Element result = field_->one();
    Element base = *this;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::string Element::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out << ',';
        out << c_[i];
    }
    return out.str();
}

// --- Free functions ----------------------------------------------------------

bool in_proper_subfield(const Element& a) {
    const std::uint32_t m = a.field()->m();
    const std::uint32_t q = a.field()->q();
    if (m == 1) return false;  // the prime field has no proper subfield
    // b after i steps is a^{q^i}; a lies in F_{q^i} iff a^{q^i} = a.
    Element b = a;
    for (std::uint32_t i = 1; i < m; ++i) {
        b = b.pow(static_cast<std::int64_t>(q));
        if (m % i == 0 && b == a) return true;
    }
    return false;
}

std::vector<std::uint32_t> elem_to_vec(const Element& a) { return a.coeffs(); }

Element vec_to_elem(const FieldPtr& field, const std::vector<std::uint32_t>& v) {
    return field->from_coeffs(v);
}

} // namespace bdlrpc
