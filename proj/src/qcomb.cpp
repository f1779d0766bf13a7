// q-combinatorics: Gaussian binomials and friends, exactly.
#include "bdlrpc/qcomb.hpp"

#include "bdlrpc/errors.hpp"

namespace bdlrpc {

namespace {

void require_q(std::uint32_t q) {
    if (q < 2) throw OutOfRangeError("q must be >= 2");
}

} // namespace

BigInt q_pow(std::uint32_t q, std::uint64_t e) {
    require_q(q);
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

BigInt aq(std::uint64_t n, std::uint64_t k, std::uint32_t q) {
    require_q(q);
    if (k > n) return 0;
    BigInt prod = 1;
    BigInt qn = q_pow(q, n);
    for (std::uint64_t i = 0; i < k; ++i) prod *= qn - q_pow(q, i);
    return prod;
}

BigInt gauss_binom(std::uint64_t n, std::uint64_t k, std::uint32_t q) {
    require_q(q);
    if (k > n) return 0;
    // aq(k,k) divides aq(n,k) exactly; keep the division exact in mpz.
    BigInt num = aq(n, k, q);
    BigInt den = aq(k, k, q);
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

BigRat hq(std::uint64_t n, std::uint32_t q) {
    require_q(q);
    BigRat prod = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        BigRat term(q_pow(q, i) - 1, q_pow(q, i));
        term.canonicalize();
        prod *= term;
    }
    prod.canonicalize();
    return prod;
}

BigRat full_rank_prob(std::uint64_t rows, std::uint64_t cols, std::uint32_t q) {
    require_q(q);
    if (cols > rows) throw OutOfRangeError("full_rank_prob: cols must be <= rows");
    BigRat prod = 1;
    for (std::uint64_t i = 0; i < cols; ++i) {
        // 1 - q^{i-rows} = (q^rows - q^i) / q^rows
        BigRat term(q_pow(q, rows) - q_pow(q, i), q_pow(q, rows));
        term.canonicalize();
        prod *= term;
    }
    prod.canonicalize();
    return prod;
}

} // namespace bdlrpc
