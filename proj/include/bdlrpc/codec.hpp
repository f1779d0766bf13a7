// Bounded-degree LRPC codes over F_{q^m}: construction, error sampling,
// syndromes, and the three-phase rank-syndrome decoder.
//
// A code is fixed by (field, n, k, d, alpha): the parity-check matrix H is
// (n-k) x n with entries drawn from V_{alpha,d} = <1, alpha, ..., alpha^{d-1}>
// and full rank over F_{q^m}. Decoding a syndrome s = e*H^T of a rank-r error:
//
//   Phase 1  expand W_1 = S = <s>, W_{t+1} = W_t + alpha*W_t until
//            dim W_t = (d+t-1)r (then W_t = V_{alpha,t}.S = V_{alpha,d+t-1}.E);
//   Phase 2  E = W_t intersect alpha^{-(t+d-2)} W_t;
//   Phase 3  solve the F_q-linear system for the coordinates of e over a
//            basis of E and verify H*e^T = s^T.
#ifndef BDLRPC_CODEC_HPP
#define BDLRPC_CODEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdlrpc/field.hpp"
#include "bdlrpc/fq_matrix.hpp"
#include "bdlrpc/rng.hpp"
#include "bdlrpc/subspace.hpp"

namespace bdlrpc {

// ---- Dense matrices over the extension field ----

class ExtMatrix {
public:
    ExtMatrix() = default;
    ExtMatrix(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Element& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Element v);
    std::vector<Element> row(std::size_t i) const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Element> a_;
};

ExtMatrix ext_mul(const ExtMatrix& A, const ExtMatrix& B);
std::size_t ext_rank(const ExtMatrix& M);
// Canonical basis rows of the right kernel {x : M x^T = 0}.
ExtMatrix ext_right_kernel(const ExtMatrix& M);

// ---- Code parameters and codes ----

struct CodeParams {
    FieldPtr field;
    std::uint32_t n = 0;  // length
    std::uint32_t k = 0;  // dimension
    std::uint32_t d = 0;  // degree of the parity support V_{alpha,d}
    Element alpha;

    // Validates 0 < k < n, 2 <= d <= m, d(n-k) >= n, and that alpha lies in
    // no proper subfield. Without an explicit alpha the residue class of x is
    // used (its minimal polynomial is the field modulus, so it never lies in
    // a proper subfield). Errors: BadParamsError.
    static CodeParams make(FieldPtr field, std::uint32_t n, std::uint32_t k,
                           std::uint32_t d);
    static CodeParams make(FieldPtr field, std::uint32_t n, std::uint32_t k,
                           std::uint32_t d, Element alpha);
};

struct BdlrpcCode {
    CodeParams params;
    ExtMatrix H;  // (n-k) x n, entries in V_{alpha,d}, rank n-k
    ExtMatrix G;  // k x n generator, H * G^T = 0

    // Text bundle: params header plus H rows in the element format; G is
    // recomputed on load.
    std::string to_text() const;
    static BdlrpcCode from_text(const std::string& text);
};

// Resampling budget for full-rank H / error coordinates.
inline constexpr unsigned kRankRetryBudget = 64;

// H entries i.i.d. uniform over V_{alpha,d}; resampled until rank n-k.
BdlrpcCode gen_code(const CodeParams& params, Rng& rng);

struct ErrorSample {
    std::uint32_t r = 0;
    Subspace support;               // dim r
    std::vector<Element> epsilon;   // the sampled ordered basis of the support
    FqMatrix coords;                // r x n over F_q, rank r
    std::vector<Element> e;         // e_j = sum_l epsilon_l * coords(l, j)
};

// Uniform rank-r error: support basis and coordinate matrix resampled to full
// rank within the retry budget. Requires r <= n-k-1 and r <= m.
ErrorSample gen_error(const CodeParams& params, std::uint32_t r, Rng& rng);

// s = e * H^T over F_{q^m}.
std::vector<Element> syndrome(const BdlrpcCode& code, const std::vector<Element>& e);

// ---- The three phases ----

struct Phase1Result {
    bool ok = false;
    std::size_t t_used = 0;          // t at success (1 = no extra expansion)
    Subspace F;                      // W_t (on failure: the last W reached)
    std::vector<std::size_t> dims;   // dim W_t for t = 1, 2, ...
    std::string detail;              // failure reason
};

Phase1Result phase1_expand(const std::vector<Element>& s, const CodeParams& params,
                           std::uint32_t r);

struct Phase2Result {
    bool ok = false;
    Subspace support;                // the intersection (whatever its size)
    std::size_t achieved_dim = 0;
};

Phase2Result phase2_support(const Subspace& F, const CodeParams& params,
                            std::size_t t_used, std::uint32_t r);

enum class SolveFailKind { Inconsistent, NotUnique };

struct Phase3Result {
    bool ok = false;
    std::vector<Element> e;
    SolveFailKind why = SolveFailKind::Inconsistent;
};

// Solve for e supported on the given subspace; unique solution required and
// the syndrome equation is re-verified before returning.
Phase3Result phase3_solve(const BdlrpcCode& code, const std::vector<Element>& s,
                          const Subspace& support);

// ---- End-to-end decoding ----

enum class DecodeStatus { Success, ExpansionFailure, SupportFailure, SolveFailure };
const char* to_string(DecodeStatus s);

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::ExpansionFailure;
    std::size_t t_used = 0;
    std::size_t expanded_dim = 0;
    std::optional<Subspace> recovered_support;
    std::optional<std::vector<Element>> error;
    std::vector<std::size_t> dims_per_t;  // Phase 1 dimension trace
    std::string detail;
};

// Rank-targeted decoder: r is an input (a zero syndrome short-circuits to
// Success with e = 0).
DecodeOutcome decode(const BdlrpcCode& code, const std::vector<Element>& s,
                     std::uint32_t r);

// Optional fallback when r is unknown: tries candidate ranks upward from
// ceil(dim<s>/d) until one decodes. Not used by default anywhere.
DecodeOutcome decode_infer_rank(const BdlrpcCode& code, const std::vector<Element>& s,
                                std::uint32_t r_max);

struct CorrectionResult {
    DecodeOutcome outcome;
    std::optional<std::vector<Element>> codeword;  // y - e on Success
};

CorrectionResult correct_word(const BdlrpcCode& code, const std::vector<Element>& y,
                              std::uint32_t r);

// ---- Small helpers shared with the harness ----

// Rank weight: F_q-dimension of the span of the coordinates.
std::size_t rank_weight(const std::vector<Element>& v);

// Reference support recovery of standard LRPC decoding with the product
// basis 1, alpha, ..., alpha^{d-1}: intersect alpha^{-j} * <s> over j < d.
// Used only as a baseline comparator.
Subspace lrpc_baseline_support(const std::vector<Element>& s, const CodeParams& params);

} // namespace bdlrpc

#endif // BDLRPC_CODEC_HPP
