// Dense linear algebra over a prime field F_q.
//
// This is the workhorse underneath everything else: reduced row echelon forms,
// rank, solving, kernels, and canonical subspaces of F_q^N with sum and
// intersection. Matrices are immutable values in spirit (all operations return
// fresh matrices); q is carried per matrix and checked on every binary op.
//
// Subspaces are stored as reduced-row-echelon bases with pivot-sorted rows and
// no zero rows. That representation is canonical, so structural equality of
// bases coincides with equality of subspaces — stall detection in expansion
// loops and enumeration dedup both rely on this being cheap.
#ifndef BDLRPC_FQ_MATRIX_HPP
#define BDLRPC_FQ_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bdlrpc/errors.hpp"
#include "bdlrpc/rng.hpp"

namespace bdlrpc {

// Modular helpers (q prime, entries already reduced into [0, q)).
std::uint32_t fq_inv(std::uint32_t a, std::uint32_t q);  // DivisionByZeroError on 0
bool is_prime_u32(std::uint32_t n);

class FqMatrix {
public:
    FqMatrix() = default;
    // Zero matrix of the given shape.
    FqMatrix(std::uint32_t q, std::size_t rows, std::size_t cols);

    static FqMatrix identity(std::uint32_t q, std::size_t n);
    static FqMatrix from_rows(std::uint32_t q,
                              const std::vector<std::vector<std::uint32_t>>& rows);

    std::uint32_t q() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t v) { a_[i * cols_ + j] = v % q_; }

    std::vector<std::uint32_t> row(std::size_t i) const;
    FqMatrix row_slice(std::size_t begin, std::size_t end) const;  // rows [begin, end)

    bool is_zero() const;
    bool operator==(const FqMatrix& o) const = default;

    // Text format: header "q rows cols", then one space-separated line per row.
    std::string to_text() const;
    static FqMatrix from_text(const std::string& text);  // TextParseError

private:
    std::uint32_t q_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

struct RrefResult {
    FqMatrix R;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

RrefResult rref(const FqMatrix& M);
std::size_t rank_of(const FqMatrix& M);

FqMatrix mat_add(const FqMatrix& A, const FqMatrix& B);
FqMatrix mat_sub(const FqMatrix& A, const FqMatrix& B);
FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B);   // DimensionMismatchError
FqMatrix mat_pow(const FqMatrix& A, std::uint64_t e);     // square matrices, e >= 0
FqMatrix mat_neg(const FqMatrix& A);
FqMatrix transpose(const FqMatrix& M);
FqMatrix stack_rows(const FqMatrix& A, const FqMatrix& B);
FqMatrix concat_cols(const FqMatrix& A, const FqMatrix& B);
FqMatrix inverse(const FqMatrix& A);  // DimensionMismatchError if singular/non-square

// Canonical basis (RREF rows) of the right kernel {x : Mx = 0}.
FqMatrix kernel_basis(const FqMatrix& M);

enum class SolveKind { Unique, None, Underdetermined };

struct SolveResult {
    SolveKind kind = SolveKind::None;
    std::vector<std::uint32_t> x;  // a solution (Unique or particular), empty for None
    FqMatrix kernel;               // kernel basis rows (Underdetermined), else 0 rows
};

// Solve M x = b. Unique iff consistent and rank(M) = cols(M).
SolveResult solve(const FqMatrix& M, const std::vector<std::uint32_t>& b);

// Entries i.i.d. uniform on [0, q); deterministic for a fixed rng state.
FqMatrix sample_uniform(std::uint32_t q, std::size_t rows, std::size_t cols, Rng& rng);

// An F_q-subspace of F_q^N in canonical form.
class FqSubspace {
public:
    FqSubspace() = default;
    FqSubspace(std::uint32_t q, std::size_t ambient);  // the zero subspace

    // Subspace spanned by the rows of a generator matrix.
    static FqSubspace span(const FqMatrix& generators);

    std::uint32_t q() const { return basis_.q(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }

    bool contains(const std::vector<std::uint32_t>& v) const;
    bool contains(const FqSubspace& other) const;
    bool operator==(const FqSubspace& o) const = default;

    // Append generators to this subspace's span (used by incremental expansion).
    // Returns true if the dimension grew.
    bool grow(const FqMatrix& generators);

private:
    FqMatrix basis_;  // RREF, no zero rows; cols = ambient dimension
};

FqSubspace row_space(const FqMatrix& M);
FqSubspace span_sum(const FqSubspace& U, const FqSubspace& V);       // AmbientMismatchError
FqSubspace span_intersect(const FqSubspace& U, const FqSubspace& V); // AmbientMismatchError

} // namespace bdlrpc

#endif // BDLRPC_FQ_MATRIX_HPP
