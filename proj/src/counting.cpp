// Omega_t / SeqGen, exhaustive and closed-form pair counting, Ferrers sums,
// structured and companion matrix builders.
#include "bdlrpc/counting.hpp"

#include <cmath>
#include <functional>

#include "bdlrpc/errors.hpp"

namespace bdlrpc {

namespace {

void check_pair(const FqMatrix& Z, const FqMatrix& A, std::size_t t) {
    if (A.rows() != A.cols())
        throw DimensionMismatchError("A must be square");
    if (Z.cols() != A.rows())
        throw DimensionMismatchError("cols(Z) must equal dim(A)");
    if (Z.q() != A.q())
        throw DimensionMismatchError("Z and A over different prime fields");
    if (t < 1) throw OutOfRangeError("t must be >= 1");
}

// Visit all (Z, A) pairs with Z in F_q^{u x r}, A in F_q^{r x r}, both in
// row-major lexicographic order (Z digits first), under the size guard.
void enumerate_pairs(std::uint32_t u, std::uint32_t r, std::uint32_t q,
                     const std::function<void(const FqMatrix&, const FqMatrix&)>& visit) {
    if (u < 1 || r < 1) throw OutOfRangeError("enumeration needs u >= 1 and r >= 1");
    const std::uint64_t ndigits = std::uint64_t{u} * r + std::uint64_t{r} * r;
    if (q_pow(q, ndigits) > kBruteEnumLimit)
        throw TooLargeError("pair enumeration exceeds the size guard");

    std::vector<std::uint32_t> digits(ndigits, 0);
    FqMatrix Z(q, u, r), A(q, r, r);
    for (;;) {
        for (std::size_t i = 0; i < u; ++i)
            for (std::size_t j = 0; j < r; ++j) Z.set(i, j, digits[i * r + j]);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) A.set(i, j, digits[u * r + i * r + j]);
        visit(Z, A);
        // Advance the odometer; last digit varies fastest (row-major lex).
        std::size_t pos = ndigits;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            if (pos == 0) return;
        }
    }
}

} // namespace

FqSubspace omega_t(const FqMatrix& Z, const FqMatrix& A, std::size_t t) {
    check_pair(Z, A, t);
    FqSubspace W = row_space(Z);
    FqMatrix cur = Z;
    for (std::size_t j = 1; j < t; ++j) {
        cur = mat_mul(cur, A);
        W.grow(cur);
    }
    return W;
}

FqMatrix mt_matrix(const FqMatrix& Z, const FqMatrix& A, std::size_t t) {
    check_pair(Z, A, t);
    FqMatrix stacked = Z;
    FqMatrix cur = Z;
    for (std::size_t j = 1; j < t; ++j) {
        cur = mat_mul(cur, A);
        stacked = stack_rows(stacked, cur);
    }
    return stacked;
}

std::size_t mt_rank(const FqMatrix& Z, const FqMatrix& A, std::size_t t) {
    return rank_of(mt_matrix(Z, A, t));
}

SeqGenResult seqgen(const FqMatrix& Z, const FqMatrix& A, std::size_t t) {
    check_pair(Z, A, t);
    const std::uint32_t q = Z.q();
    const std::size_t N = Z.cols();

    FqSubspace seen(q, N);
    std::vector<std::vector<std::uint32_t>> chosen;
    std::vector<std::size_t> block_sizes;
    FqMatrix cur = Z;
    for (std::size_t j = 0; j < t; ++j) {
        if (j > 0) cur = mat_mul(cur, A);
        std::size_t in_block = 0;
        for (std::size_t i = 0; i < cur.rows(); ++i) {
            std::vector<std::uint32_t> candidate = cur.row(i);
            if (seen.grow(FqMatrix::from_rows(q, {candidate}))) {
                chosen.push_back(std::move(candidate));
                ++in_block;
            }
        }
        block_sizes.push_back(in_block);
    }

    FqMatrix G(q, chosen.size(), N);
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < N; ++j) G.set(i, j, chosen[i][j]);
    return SeqGenResult{std::move(G), std::move(block_sizes)};
}

BigInt brute_count(std::uint32_t u, std::uint32_t r, std::uint32_t k,
                   std::uint32_t t, std::uint32_t q) {
    std::uint64_t count = 0;
    enumerate_pairs(u, r, q, [&](const FqMatrix& Z, const FqMatrix& A) {
        if (mt_rank(Z, A, t) == k) ++count;
    });
    return BigInt(static_cast<unsigned long>(count));
}

std::map<std::string, std::uint64_t> brute_fibers(std::uint32_t u, std::uint32_t r,
                                                  std::uint32_t t, std::uint32_t q) {
    std::map<std::string, std::uint64_t> fibers;
    enumerate_pairs(u, r, q, [&](const FqMatrix& Z, const FqMatrix& A) {
        ++fibers[seqgen(Z, A, t).G.to_text()];
    });
    return fibers;
}

BigInt formula_count(std::uint32_t u, std::uint32_t r, std::uint32_t k,
                     std::uint32_t q) {
    if (u < 1) throw OutOfRangeError("formula_count needs u >= 1");
    if (k > r) throw OutOfRangeError("formula_count needs k <= r");
    return aq(r, k, q) * gauss_binom(k + u - 1, u - 1, q) *
           q_pow(q, std::uint64_t{r} * (r - k) + k);
}

BigRat prob_dim_k(std::uint32_t u, std::uint32_t r, std::uint32_t k, std::uint32_t q) {
    BigRat p(formula_count(u, r, k, q), q_pow(q, std::uint64_t{r} * (r + u)));
    p.canonicalize();
    return p;
}

BigRat prob_full(std::uint32_t u, std::uint32_t r, std::uint32_t q) {
    return prob_dim_k(u, r, r, q);
}

BigInt lower_bound_t(std::uint32_t u, std::uint32_t r, std::uint32_t q) {
    if (u % 2 != 0) throw OddUError("lower_bound_t is stated for even u only");
    if (std::uint64_t{u} * r < std::uint64_t{u} * u / 2)
        throw OutOfRangeError("lower_bound_t needs r >= u/2");
    return gauss_binom(u + u / 2, u / 2, q) *
           q_pow(q, std::uint64_t{u} * r - std::uint64_t{u} * u / 2);
}

double prob_t_bound(std::uint32_t u, std::uint32_t q) {
    if (u < 1 || q < 2) throw OutOfRangeError("prob_t_bound needs u >= 1, q >= 2");
    return 1.0 - std::pow(static_cast<double>(q), -static_cast<double>(u) / 2.0) /
                     (static_cast<double>(q) - 1.0);
}

// ---- Ferrers diagrams ----

FerrersDiagram::FerrersDiagram(std::uint32_t rows_, std::vector<std::uint32_t> cols_)
    : rows(rows_), cols(std::move(cols_)) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] > rows)
            throw OutOfRangeError("Ferrers column exceeds the box height");
        if (i > 0 && cols[i] > cols[i - 1])
            throw OutOfRangeError("Ferrers columns must be non-increasing");
    }
}

std::uint64_t FerrersDiagram::weight() const {
    std::uint64_t w = 0;
    for (std::uint32_t f : cols) w += f;
    return w;
}

bool FerrersDiagram::dominates(const FerrersDiagram& other) const {
    if (rows != other.rows || cols.size() != other.cols.size()) return false;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] < other.cols[i]) return false;
    return true;
}

std::vector<FerrersDiagram> enumerate_ferrers(std::uint32_t n, std::uint32_t k) {
    // binomial(n+k, k) diagrams; guard against runaway enumerations.
    BigInt total = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        total *= n + k - i + 1;
        mpz_divexact_ui(total.get_mpz_t(), total.get_mpz_t(), i);
    }
    if (total > BigInt(1) << 22)
        throw TooLargeError("Ferrers enumeration exceeds the size guard");

    std::vector<FerrersDiagram> out;
    std::vector<std::uint32_t> cols(k, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos,
                                                              std::uint32_t cap) {
        if (pos == k) {
            out.emplace_back(n, cols);
            return;
        }
        for (std::uint32_t v = cap; v + 1 > 0; --v) {
            cols[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, n);
    return out;
}

BigInt ferrers_weight_sum(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
    BigInt sum = 0;
    for (const FerrersDiagram& F : enumerate_ferrers(n, k)) sum += q_pow(q, F.weight());
    return sum;
}

BigInt ferrers_above_sum(const FerrersDiagram& F, std::uint32_t q) {
    const std::uint32_t u = F.rows;
    const std::size_t k = F.cols.size();
    if (k == 0) return 1;  // the empty diagram; only itself above it

    const std::uint32_t last = F.cols.back();
    const std::uint32_t s = u - last;
    if (s == 0) return q_pow(q, std::uint64_t{u} * k);  // full box: one diagram

    std::size_t t = 0;
    while (t < k && F.cols[k - 1 - t] == last) ++t;
    for (std::size_t i = 0; i + t < k; ++i)
        if (F.cols[i] != u)
            throw WrongShapeError("diagram is not of the two-level shape");

    return gauss_binom(s + t, s, q) *
           q_pow(q, std::uint64_t{u} * k - std::uint64_t{s} * t);
}

// ---- Structured and companion matrices ----

FqMatrix build_structured_A(const std::vector<FqMatrix>& blocks) {
    if (blocks.empty()) throw ShapeMismatchError("need at least one block");
    const std::size_t r = blocks.front().rows();
    const std::uint32_t q = blocks.front().q();
    if (r == 0) throw ShapeMismatchError("blocks must be nonempty");
    for (const FqMatrix& B : blocks)
        if (B.rows() != r || B.cols() != r || B.q() != q)
            throw ShapeMismatchError("blocks must be square, same size, same field");

    const std::size_t d1 = blocks.size();  // d - 1
    FqMatrix A(q, d1 * r, d1 * r);
    for (std::size_t b = 0; b < d1; ++b)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) A.set(i, b * r + j, blocks[b].at(i, j));
    for (std::size_t b = 1; b < d1; ++b)
        for (std::size_t i = 0; i < r; ++i) A.set(b * r + i, (b - 1) * r + i, 1);
    return A;
}

FqMatrix build_companion_A(std::uint32_t q, const std::vector<std::uint32_t>& coeffs) {
    const std::size_t N = coeffs.size();
    if (N == 0) throw ShapeMismatchError("companion matrix needs at least one coefficient");
    FqMatrix A(q, N, N);
    for (std::size_t i = 0; i + 1 < N; ++i) A.set(i, i + 1, 1);
    for (std::size_t j = 0; j < N; ++j) A.set(N - 1, j, coeffs[j]);
    return A;
}

FqPolynomial companion_char_poly(std::uint32_t q, const std::vector<std::uint32_t>& coeffs) {
    const std::size_t N = coeffs.size();
    if (N == 0) throw ShapeMismatchError("companion polynomial needs at least one coefficient");
    std::vector<std::uint32_t> c(N + 1, 0);
    for (std::size_t j = 0; j < N; ++j) c[j] = (q - coeffs[j] % q) % q;
    c[N] = 1;
    return FqPolynomial(q, std::move(c));
}

bool companion_full_test(const FqMatrix& Z, const std::vector<std::uint32_t>& coeffs) {
    if (Z.cols() != coeffs.size())
        throw DimensionMismatchError("cols(Z) must match the companion size");
    const std::uint32_t q = Z.q();
    // RowSpan sums under the companion matrix are the ideal generated by the
    // row polynomials in F_q[x]/(p_A); full space <=> gcd with p_A is 1.
    FqPolynomial g = companion_char_poly(q, coeffs);
    for (std::size_t i = 0; i < Z.rows(); ++i) {
        FqPolynomial z(q, Z.row(i));
        if (z.is_zero()) continue;
        g = poly_gcd(g, z);
        if (g.degree() == 0) return true;
    }
    return g.degree() == 0;
}

} // namespace bdlrpc
