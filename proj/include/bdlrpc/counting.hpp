// Subspace-expansion counting: Omega_t, SeqGen, exact pair counts, Ferrers
// combinatorics, and the structured/companion matrix builders.
//
// The central object is, for Z in F_q^{u x N} and square A,
//
//   Omega_t(Z, A) = RowSpan(Z) + RowSpan(ZA) + ... + RowSpan(ZA^{t-1}),
//
// equivalently the row space of the stacked matrix M_t(Z, A). Pairs (Z, A)
// are classified by k = dim Omega_t; brute_count enumerates the class sizes
// and formula_count evaluates the closed form that holds for t >= N. The
// Ferrers-diagram sums underpin that closed form; the companion-matrix gcd
// criterion covers the structured sampler used in the experiments.
#ifndef BDLRPC_COUNTING_HPP
#define BDLRPC_COUNTING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bdlrpc/fq_matrix.hpp"
#include "bdlrpc/fqpoly.hpp"
#include "bdlrpc/qcomb.hpp"

namespace bdlrpc {

// ---- Omega_t and its bases ----

// Requires A square with dim(A) = cols(Z) and t >= 1.
FqSubspace omega_t(const FqMatrix& Z, const FqMatrix& A, std::size_t t);

// The stacked ut x N matrix [Z; ZA; ...; ZA^{t-1}] and its rank
// (= dim Omega_t).
FqMatrix mt_matrix(const FqMatrix& Z, const FqMatrix& A, std::size_t t);
std::size_t mt_rank(const FqMatrix& Z, const FqMatrix& A, std::size_t t);

struct SeqGenResult {
    FqMatrix G;                            // chosen rows, in discovery order
    std::vector<std::size_t> block_sizes;  // t entries; trailing ones may be 0
};

// Greedy basis of Omega_t: for j = 0..t-1 scan the rows of Z*A^j in order and
// keep each row that is independent of everything kept so far. Block j holds
// the rows kept at step j; rows of G always form a basis of Omega_t.
SeqGenResult seqgen(const FqMatrix& Z, const FqMatrix& A, std::size_t t);

// ---- Exact counting over all pairs (Z, A) ----

// Enumeration guard: q^{u*N + N*N} pairs at most.
inline constexpr std::uint64_t kBruteEnumLimit = std::uint64_t{1} << 24;

// |{(Z, A) : dim Omega_t(Z, A) = k}| with Z ranging over F_q^{u x r} and A
// over F_q^{r x r}, by exhaustive enumeration in row-major lexicographic
// order. TooLargeError beyond the guard.
BigInt brute_count(std::uint32_t u, std::uint32_t r, std::uint32_t k,
                   std::uint32_t t, std::uint32_t q);

// Fiber sizes of the same enumeration keyed by the serialized SeqGen basis
// matrix: how many pairs produce each basis G. Fibers over bases of equal
// rank have equal size (change-of-basis bijection), which the tests assert.
std::map<std::string, std::uint64_t> brute_fibers(std::uint32_t u, std::uint32_t r,
                                                  std::uint32_t t, std::uint32_t q);

// Closed form for t >= r:  A_q(r,k) * [k+u-1 choose u-1]_q * q^{r(r-k)+k}.
// Requires 0 <= k <= r, u >= 1.
BigInt formula_count(std::uint32_t u, std::uint32_t r, std::uint32_t k,
                     std::uint32_t q);

// prob_dim_k = formula_count / q^{r(r+u)};
// prob_full = prob_dim_k at k = r = H_q(r+u-1)/H_q(u-1),
// bounded below by 1 - q^{-u+1}/(q-1).
BigRat prob_dim_k(std::uint32_t u, std::uint32_t r, std::uint32_t k, std::uint32_t q);
BigRat prob_full(std::uint32_t u, std::uint32_t r, std::uint32_t q);

// Lower bound on |C_r| at t = ceil(r/u) + 1 for even u:
// [u + u/2 choose u/2]_q * q^{ur - u^2/2}. OddUError for odd u.
BigInt lower_bound_t(std::uint32_t u, std::uint32_t r, std::uint32_t q);

// The derived probability bound 1 - q^{-u/2}/(q-1); irrational for odd u,
// hence returned as a double.
double prob_t_bound(std::uint32_t u, std::uint32_t q);

// ---- Ferrers diagrams ----

// Column profile [f_1 >= f_2 >= ... >= f_k] inside an n x k box (f_1 <= n);
// the weight |F| = sum f_i counts the dots.
struct FerrersDiagram {
    std::uint32_t rows = 0;           // the box height n
    std::vector<std::uint32_t> cols;  // non-increasing, entries <= rows

    FerrersDiagram(std::uint32_t rows, std::vector<std::uint32_t> cols);
    std::uint64_t weight() const;
    bool dominates(const FerrersDiagram& other) const;  // entrywise >=
};

// All Ferrers diagrams in the n x k box (binomial(n+k, k) of them; guarded).
std::vector<FerrersDiagram> enumerate_ferrers(std::uint32_t n, std::uint32_t k);

// Sum of q^{|F|} over the n x k box; equals gauss_binom(n+k, k, q).
BigInt ferrers_weight_sum(std::uint32_t n, std::uint32_t k, std::uint32_t q);

// For the two-level diagram F = [u,...,u, u-s,...,u-s] (t trailing short
// columns) in the u x k box: sum of q^{|F'|} over diagrams F' >= F,
// in closed form [s+t choose s]_q * q^{uk-st}. WrongShapeError otherwise.
BigInt ferrers_above_sum(const FerrersDiagram& F, std::uint32_t q);

// ---- Structured and companion matrices ----

// Block matrix with top block-row (A_1 ... A_{d-1}) and identity blocks on
// the subdiagonal; blocks must all be square of one size (ShapeMismatchError).
FqMatrix build_structured_A(const std::vector<FqMatrix>& blocks);

// N x N companion matrix: ones on the superdiagonal, bottom row a_0..a_{N-1}.
// Realizes multiplication by x modulo p_A(x) = x^N - a_{N-1}x^{N-1} - ... - a_0
// on the basis 1, x, ..., x^{N-1}.
FqMatrix build_companion_A(std::uint32_t q, const std::vector<std::uint32_t>& coeffs);

// The polynomial p_A above, as a canonical FqPolynomial.
FqPolynomial companion_char_poly(std::uint32_t q, const std::vector<std::uint32_t>& coeffs);

// True iff gcd(p_A, z_1, ..., z_u) = 1 where row i of Z is read as the
// polynomial z_i(x) = sum_j Z[i][j] x^j. Equivalent to
// mt_rank(Z, build_companion_A(q, coeffs), N) = N.
bool companion_full_test(const FqMatrix& Z, const std::vector<std::uint32_t>& coeffs);

} // namespace bdlrpc

#endif // BDLRPC_COUNTING_HPP
