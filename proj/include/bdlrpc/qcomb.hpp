// Exact q-combinatorics on arbitrary-precision integers/rationals.
//
// aq(n,k)        = prod_{i=0}^{k-1} (q^n - q^i)   (ordered independent k-tuples
//                  in F_q^n; injective linear maps F_q^k -> F_q^n)
// gauss_binom    = aq(n,k) / aq(k,k)              (k-dim subspaces of F_q^n)
// hq(n)          = prod_{i=1}^{n} (1 - q^{-i})    (exact rational)
// full_rank_prob = prod_{i=0}^{cols-1} (1 - q^{i-rows}), cols <= rows
//                  (probability a uniform rows x cols matrix has full column
//                  rank)
#ifndef BDLRPC_QCOMB_HPP
#define BDLRPC_QCOMB_HPP

#include <cstdint>
#include <gmpxx.h>

namespace bdlrpc {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt q_pow(std::uint32_t q, std::uint64_t e);

// OutOfRangeError if q < 2. k > n yields 0 for both counts.
BigInt aq(std::uint64_t n, std::uint64_t k, std::uint32_t q);
BigInt gauss_binom(std::uint64_t n, std::uint64_t k, std::uint32_t q);

BigRat hq(std::uint64_t n, std::uint32_t q);

BigRat full_rank_prob(std::uint64_t rows, std::uint64_t cols, std::uint32_t q);

} // namespace bdlrpc

#endif // BDLRPC_QCOMB_HPP
