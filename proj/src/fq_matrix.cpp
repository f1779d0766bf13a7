#include "bdlrpc/fq_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace bdlrpc {

namespace {

void check_same_q(const FqMatrix& A, const FqMatrix& B) {
    if (A.q() != B.q())
        throw DimensionMismatchError("matrices over different prime fields");
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q);
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
    return (a + q - b) % q;
}

} // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint32_t fq_inv(std::uint32_t a, std::uint32_t q) {
    a %= q;
    if (a == 0) throw DivisionByZeroError("inverse of zero in F_q");
    // Extended Euclid on (a, q); q prime so gcd is 1.
    std::int64_t r0 = a, r1 = q, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t quo = r0 / r1;
        std::int64_t r2 = r0 - quo * r1;
        std::int64_t s2 = s0 - quo * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    std::int64_t inv = s0 % static_cast<std::int64_t>(q);
    if (inv < 0) inv += q;
    return static_cast<std::uint32_t>(inv);
}

FqMatrix::FqMatrix(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime_u32(q)) throw NotPrimeError("matrix modulus must be prime");
}

FqMatrix FqMatrix::identity(std::uint32_t q, std::size_t n) {
    FqMatrix I(q, n, n);
    for (std::size_t i = 0; i < n; ++i) I.set(i, i, 1);
    return I;
}

FqMatrix FqMatrix::from_rows(std::uint32_t q,
                             const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FqMatrix M(q, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw DimensionMismatchError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) M.set(i, j, rows[i][j]);
    }
    return M;
}

std::vector<std::uint32_t> FqMatrix::row(std::size_t i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

FqMatrix FqMatrix::row_slice(std::size_t begin, std::size_t end) const {
    FqMatrix S(q_, end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < cols_; ++j) S.set(i - begin, j, at(i, j));
    return S;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

std::string FqMatrix::to_text() const {
    std::ostringstream out;
    out << q_ << ' ' << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

FqMatrix FqMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    std::uint64_t q = 0, rows = 0, cols = 0;
    if (!(in >> q >> rows >> cols))
        throw TextParseError("matrix header must be \"q rows cols\"");
    FqMatrix M(static_cast<std::uint32_t>(q), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t v;
            if (!(in >> v)) throw TextParseError("matrix body truncated");
            if (v >= q) throw TextParseError("matrix entry out of range");
            M.set(i, j, static_cast<std::uint32_t>(v));
        }
    return M;
}

RrefResult rref(const FqMatrix& M) {
    const std::uint32_t q = M.q();
    FqMatrix R = M;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < R.cols() && lead < R.rows(); ++col) {
        // Find a pivot in this column at or below `lead`.
        std::size_t piv = lead;
        while (piv < R.rows() && R.at(piv, col) == 0) ++piv;
        if (piv == R.rows()) continue;
        // Swap into place.
        if (piv != lead)
            for (std::size_t j = 0; j < R.cols(); ++j) {
                std::uint32_t t = R.at(lead, j);
                R.set(lead, j, R.at(piv, j));
                R.set(piv, j, t);
            }
        // Normalize the pivot row.
        const std::uint32_t inv = fq_inv(R.at(lead, col), q);
        for (std::size_t j = col; j < R.cols(); ++j)
            R.set(lead, j, mul_mod(R.at(lead, j), inv, q));
        // Eliminate everywhere else.
        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (i == lead) continue;
            const std::uint32_t f = R.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < R.cols(); ++j)
                R.set(i, j, sub_mod(R.at(i, j), mul_mod(f, R.at(lead, j), q), q));
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(R), pivots.size(), std::move(pivots)};
}

std::size_t rank_of(const FqMatrix& M) { return rref(M).rank; }

FqMatrix mat_add(const FqMatrix& A, const FqMatrix& B) {
    check_same_q(A, B);
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatchError("mat_add shape mismatch");
    FqMatrix C(A.q(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            C.set(i, j, (A.at(i, j) + B.at(i, j)) % A.q());
    return C;
}

FqMatrix mat_sub(const FqMatrix& A, const FqMatrix& B) {
    return mat_add(A, mat_neg(B));
}

FqMatrix mat_neg(const FqMatrix& A) {
    FqMatrix C(A.q(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            C.set(i, j, (A.q() - A.at(i, j)) % A.q());
    return C;
}

FqMatrix mat_mul(const FqMatrix& A, const FqMatrix& B) {
    check_same_q(A, B);
    if (A.cols() != B.rows())
        throw DimensionMismatchError("mat_mul inner dimensions disagree");
    const std::uint32_t q = A.q();
    FqMatrix C(q, A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            const std::uint32_t a = A.at(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) {
                const std::uint64_t v = C.at(i, j) + static_cast<std::uint64_t>(a) * B.at(l, j);
                C.set(i, j, static_cast<std::uint32_t>(v % q));
            }
        }
    return C;
}

FqMatrix mat_pow(const FqMatrix& A, std::uint64_t e) {
    if (A.rows() != A.cols())
        throw DimensionMismatchError("mat_pow needs a square matrix");
    FqMatrix result = FqMatrix::identity(A.q(), A.rows());
    FqMatrix base = A;
    while (e > 0) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return result;
}

FqMatrix transpose(const FqMatrix& M) {
    FqMatrix T(M.q(), M.cols(), M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) T.set(j, i, M.at(i, j));
    return T;
}

FqMatrix stack_rows(const FqMatrix& A, const FqMatrix& B) {
    check_same_q(A, B);
    if (A.cols() != B.cols())
        throw DimensionMismatchError("stack_rows column counts disagree");
    FqMatrix C(A.q(), A.rows() + B.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C.set(i, j, A.at(i, j));
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) C.set(A.rows() + i, j, B.at(i, j));
    return C;
}

FqMatrix concat_cols(const FqMatrix& A, const FqMatrix& B) {
    check_same_q(A, B);
    if (A.rows() != B.rows())
        throw DimensionMismatchError("concat_cols row counts disagree");
    FqMatrix C(A.q(), A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) C.set(i, j, A.at(i, j));
        for (std::size_t j = 0; j < B.cols(); ++j) C.set(i, A.cols() + j, B.at(i, j));
    }
    return C;
}

FqMatrix inverse(const FqMatrix& A) {
    if (A.rows() != A.cols())
        throw DimensionMismatchError("inverse needs a square matrix");
    const std::size_t n = A.rows();
    RrefResult red = rref(concat_cols(A, FqMatrix::identity(A.q(), n)));
    // Invertible iff the left block reduced to the identity.
    for (std::size_t i = 0; i < n; ++i)
        if (i >= red.pivots.size() || red.pivots[i] != i)
            throw DimensionMismatchError("matrix is singular");
    FqMatrix inv(A.q(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, red.R.at(i, n + j));
    return inv;
}

FqMatrix kernel_basis(const FqMatrix& M) {
    const std::uint32_t q = M.q();
    RrefResult red = rref(M);
    const std::size_t n = M.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    FqMatrix K(q, n - red.rank, n);
    std::size_t kr = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        K.set(kr, f, 1);
        for (std::size_t i = 0; i < red.rank; ++i) {
            const std::uint32_t v = red.R.at(i, f);
            if (v) K.set(kr, red.pivots[i], (q - v) % q);
        }
        ++kr;
    }
    // Canonicalize so kernels compare structurally.
    return rref(K).R.row_slice(0, n - red.rank);
}

SolveResult solve(const FqMatrix& M, const std::vector<std::uint32_t>& b) {
    if (b.size() != M.rows())
        throw DimensionMismatchError("solve: right-hand side length != rows");
    const std::uint32_t q = M.q();
    FqMatrix rhs(q, M.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
    RrefResult red = rref(concat_cols(M, rhs));

    // Inconsistent iff a pivot landed in the appended column.
    for (std::size_t p : red.pivots)
        if (p == M.cols()) return SolveResult{SolveKind::None, {}, FqMatrix(q, 0, M.cols())};

    std::vector<std::uint32_t> x(M.cols(), 0);
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        x[red.pivots[i]] = red.R.at(i, M.cols());

    if (red.pivots.size() == M.cols())
        return SolveResult{SolveKind::Unique, std::move(x), FqMatrix(q, 0, M.cols())};
    return SolveResult{SolveKind::Underdetermined, std::move(x), kernel_basis(M)};
}

FqMatrix sample_uniform(std::uint32_t q, std::size_t rows, std::size_t cols, Rng& rng) {
    FqMatrix M(q, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M.set(i, j, rng.below(q));
    return M;
}

FqSubspace::FqSubspace(std::uint32_t q, std::size_t ambient)
    : basis_(q, 0, ambient) {}

FqSubspace FqSubspace::span(const FqMatrix& generators) {
    RrefResult red = rref(generators);
    FqSubspace s;
    s.basis_ = red.R.row_slice(0, red.rank);
    return s;
}

bool FqSubspace::contains(const std::vector<std::uint32_t>& v) const {
    if (v.size() != ambient())
        throw AmbientMismatchError("vector length != ambient dimension");
    const std::uint32_t q = basis_.q();
    std::vector<std::uint32_t> w = v;
    // Reduce against the RREF basis; v is in the span iff it reduces to zero.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // Pivot column of row i = first nonzero entry (basis is RREF).
        std::size_t p = 0;
        while (p < ambient() && basis_.at(i, p) == 0) ++p;
        if (p == ambient()) continue;
        const std::uint32_t f = w[p];  // pivot entry is 1
        if (f == 0) continue;
        for (std::size_t j = p; j < ambient(); ++j)
            w[j] = sub_mod(w[j], mul_mod(f, basis_.at(i, j), q), q);
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t t) { return t == 0; });
}

bool FqSubspace::contains(const FqSubspace& other) const {
    if (other.ambient() != ambient())
        throw AmbientMismatchError("subspaces of different ambient spaces");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool FqSubspace::grow(const FqMatrix& generators) {
    const std::size_t before = dim();
    *this = FqSubspace::span(stack_rows(basis_, generators));
    return dim() > before;
}

FqSubspace row_space(const FqMatrix& M) { return FqSubspace::span(M); }

FqSubspace span_sum(const FqSubspace& U, const FqSubspace& V) {
    if (U.ambient() != V.ambient() || U.q() != V.q())
        throw AmbientMismatchError("span_sum over different ambient spaces");
    return FqSubspace::span(stack_rows(U.basis(), V.basis()));
}

FqSubspace span_intersect(const FqSubspace& U, const FqSubspace& V) {
    if (U.ambient() != V.ambient() || U.q() != V.q())
        throw AmbientMismatchError("span_intersect over different ambient spaces");
    const std::uint32_t q = U.q();
    const std::size_t a = U.dim(), b = V.dim(), N = U.ambient();
    if (a == 0 || b == 0) return FqSubspace(q, N);

    // A vector lies in both spans iff it is λ·U = −μ·V for some left-kernel
    // element (λ | μ) of the stacked basis matrix; collect the λ·U generators.
    FqMatrix stacked = stack_rows(U.basis(), V.basis());
    FqMatrix left_kernel = kernel_basis(transpose(stacked));  // rows (λ | μ)
    FqMatrix gens(q, left_kernel.rows(), N);
    for (std::size_t r = 0; r < left_kernel.rows(); ++r)
        for (std::size_t j = 0; j < N; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < a; ++i)
                acc += static_cast<std::uint64_t>(left_kernel.at(r, i)) * U.basis().at(i, j);
            gens.set(r, j, static_cast<std::uint32_t>(acc % q));
        }
    return FqSubspace::span(gens);
}

} // namespace bdlrpc
