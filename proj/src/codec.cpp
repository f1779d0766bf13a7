// BD-LRPC codes: construction, error sampling, syndrome, three-phase decoder.
#include "bdlrpc/codec.hpp"

#include <sstream>

#include "bdlrpc/errors.hpp"

namespace bdlrpc {

namespace {

// Row-echelon data for matrices over F_{q^m}.
struct ExtRref {
    std::vector<std::vector<Element>> rows;
    std::vector<std::size_t> pivots;
};

ExtRref ext_rref(const ExtMatrix& M) {
    const FieldPtr& f = M.field();
    std::vector<std::vector<Element>> rows(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) rows[i] = M.row(i);

    ExtRref out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols() && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[lead]);
        const Element inv = rows[lead][col].inv();
        for (std::size_t j = col; j < M.cols(); ++j) rows[lead][j] = rows[lead][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col].is_zero()) continue;
            const Element fct = rows[i][col];
            for (std::size_t j = col; j < M.cols(); ++j)
                rows[i][j] = rows[i][j] - fct * rows[lead][j];
        }
        out.pivots.push_back(col);
        ++lead;
    }
    (void)f;
    out.rows = std::move(rows);
    return out;
}

std::vector<Element> zero_vector(const FieldPtr& f, std::size_t n) {
    return std::vector<Element>(n, f->zero());
}

bool all_zero(const std::vector<Element>& v) {
    for (const Element& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace

// ---- ExtMatrix ----

ExtMatrix::ExtMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (!field_) throw FieldMismatchError("ExtMatrix needs a field");
    a_.assign(rows_ * cols_, field_->zero());
}

void ExtMatrix::set(std::size_t i, std::size_t j, Element v) {
    if (!v.field()->same_field(*field_))
        throw FieldMismatchError("ExtMatrix entry from another field");
    a_[i * cols_ + j] = std::move(v);
}

std::vector<Element> ExtMatrix::row(std::size_t i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

ExtMatrix ext_mul(const ExtMatrix& A, const ExtMatrix& B) {
    if (!A.field()->same_field(*B.field()))
        throw FieldMismatchError("ext_mul operands from different fields");
    if (A.cols() != B.rows())
        throw DimensionMismatchError("ext_mul inner dimensions disagree");
    ExtMatrix C(A.field(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            const Element& a = A.at(i, l);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.set(i, j, C.at(i, j) + a * B.at(l, j));
        }
    return C;
}

std::size_t ext_rank(const ExtMatrix& M) { return ext_rref(M).pivots.size(); }

ExtMatrix ext_right_kernel(const ExtMatrix& M) {
    const FieldPtr& f = M.field();
    ExtRref red = ext_rref(M);
    const std::size_t n = M.cols(), rank = red.pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    ExtMatrix K(f, n - rank, n);
    std::size_t kr = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        K.set(kr, free, f->one());
        for (std::size_t i = 0; i < rank; ++i)
            K.set(kr, red.pivots[i], -red.rows[i][free]);
        ++kr;
    }
    return K;
}

// ---- CodeParams / BdlrpcCode ----

CodeParams CodeParams::make(FieldPtr field, std::uint32_t n, std::uint32_t k,
                            std::uint32_t d) {
    if (!field) throw BadParamsError("null field");
    return make(field, n, k, d, field->gen());
}

CodeParams CodeParams::make(FieldPtr field, std::uint32_t n, std::uint32_t k,
                            std::uint32_t d, Element alpha) {
    if (!field) throw BadParamsError("null field");
    if (!(k > 0 && k < n)) throw BadParamsError("need 0 < k < n");
    if (d < 2) throw BadParamsError("need degree d >= 2");
    if (d > field->m()) throw BadParamsError("need d <= m");
    if (std::uint64_t{d} * (n - k) < n)
        throw BadParamsError("need d(n-k) >= n for unique solving");
    if (!alpha.field() || !alpha.field()->same_field(*field))
        throw BadParamsError("alpha from another field");
    if (in_proper_subfield(alpha))
        throw BadParamsError("alpha must avoid proper subfields");
    return CodeParams{std::move(field), n, k, d, std::move(alpha)};
}

std::string BdlrpcCode::to_text() const {
    std::ostringstream out;
    out << params.field->params().to_text() << "\n";
    out << params.n << ' ' << params.k << ' ' << params.d << "\n";
    out << params.alpha.to_text() << "\n";
    for (std::size_t i = 0; i < H.rows(); ++i) {
        for (std::size_t j = 0; j < H.cols(); ++j) {
            if (j) out << ' ';
            out << H.at(i, j).to_text();
        }
        out << "\n";
    }
    return out.str();
}

BdlrpcCode BdlrpcCode::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw TextParseError("missing field params line");
    FieldPtr field = Field::make(FieldParams::from_text(line).q,
                                 FieldParams::from_text(line).m,
                                 FieldParams::from_text(line).modulus);
    std::uint32_t n = 0, k = 0, d = 0;
    if (!(in >> n >> k >> d)) throw TextParseError("missing n k d line");
    std::getline(in, line);  // consume the rest of the line
    if (!std::getline(in, line)) throw TextParseError("missing alpha line");
    CodeParams params = CodeParams::make(field, n, k, d, field->parse(line));

    ExtMatrix H(field, n - k, n);
    for (std::size_t i = 0; i + k < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw TextParseError("truncated H matrix");
            H.set(i, j, field->parse(tok));
        }
    }
    if (ext_rank(H) != n - k) throw TextParseError("H in text bundle is not full rank");
    BdlrpcCode code{std::move(params), H, ext_right_kernel(H)};
    return code;
}

BdlrpcCode gen_code(const CodeParams& params, Rng& rng) {
    const FieldPtr& f = params.field;
    const std::uint32_t q = f->q();
    const std::size_t nk = params.n - params.k;

    std::vector<Element> pow;  // 1, alpha, ..., alpha^{d-1}
    pow.reserve(params.d);
    Element cur = f->one();
    for (std::uint32_t j = 0; j < params.d; ++j) {
        pow.push_back(cur);
        cur = cur * params.alpha;
    }

    for (unsigned attempt = 0; attempt < kRankRetryBudget; ++attempt) {
        ExtMatrix H(f, nk, params.n);
        for (std::size_t i = 0; i < nk; ++i)
            for (std::size_t j = 0; j < params.n; ++j) {
                Element v = f->zero();
                for (std::uint32_t l = 0; l < params.d; ++l) {
                    const std::uint32_t c = rng.below(q);
                    if (c) v = v + pow[l] * f->from_int(c);
                }
                H.set(i, j, std::move(v));
            }
        if (ext_rank(H) == nk)
            return BdlrpcCode{params, H, ext_right_kernel(H)};
    }
    throw RankRetryExhaustedError("could not draw a full-rank H");
}

ErrorSample gen_error(const CodeParams& params, std::uint32_t r, Rng& rng) {
    const FieldPtr& f = params.field;
    const std::uint32_t q = f->q();
    if (r > f->m()) throw BadParamsError("error rank r must be <= m");
    if (r + 1 > params.n - params.k)
        throw BadParamsError("error rank r must leave u = n-k-r >= 1");

    ErrorSample es;
    es.r = r;
    if (r == 0) {
        es.support = Subspace(f);
        es.coords = FqMatrix(q, 0, params.n);
        es.e = zero_vector(f, params.n);
        return es;
    }

    // Support basis: r field elements resampled until they are independent.
    for (unsigned attempt = 0;; ++attempt) {
        if (attempt >= kRankRetryBudget)
            throw RankRetryExhaustedError("could not draw an independent support basis");
        std::vector<Element> eps;
        eps.reserve(r);
        for (std::uint32_t l = 0; l < r; ++l) eps.push_back(f->sample(rng));
        Subspace sp = Subspace::span_of(eps);
        if (sp.dim() == r) {
            es.epsilon = std::move(eps);
            es.support = std::move(sp);
            break;
        }
    }

    // Coordinates: uniform r x n over F_q resampled until full rank r.
    for (unsigned attempt = 0;; ++attempt) {
        if (attempt >= kRankRetryBudget)
            throw RankRetryExhaustedError("could not draw full-rank error coordinates");
        FqMatrix C = sample_uniform(q, r, params.n, rng);
        if (rank_of(C) == r) {
            es.coords = std::move(C);
            break;
        }
    }

    es.e = zero_vector(f, params.n);
    for (std::size_t j = 0; j < params.n; ++j)
        for (std::uint32_t l = 0; l < r; ++l) {
            const std::uint32_t c = es.coords.at(l, j);
            if (c) es.e[j] = es.e[j] + es.epsilon[l] * f->from_int(c);
        }
    return es;
}

std::vector<Element> syndrome(const BdlrpcCode& code, const std::vector<Element>& e) {
    const std::size_t n = code.params.n, nk = n - code.params.k;
    if (e.size() != n) throw DimensionMismatchError("error vector length != n");
    std::vector<Element> s = zero_vector(code.params.field, nk);
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i] = s[i] + code.H.at(i, j) * e[j];
    return s;
}

Phase1Result phase1_expand(const std::vector<Element>& s, const CodeParams& params,
                           std::uint32_t r) {
    const std::uint32_t m = params.field->m(), d = params.d;
    Phase1Result res;
    Subspace W = Subspace::span_of(s);
    res.dims.push_back(W.dim());

    for (std::size_t t = 1;; ++t) {
        const std::uint64_t target = (std::uint64_t{d} + t - 1) * r;
        res.t_used = t;
        res.F = W;
        if (target > m) {
            res.detail = "expansion target exceeds the field degree m";
            return res;
        }
        if (W.dim() == target) {
            res.ok = true;
            return res;
        }
        if (W.dim() > target) {
            res.detail = "syndrome support larger than the expansion target";
            return res;
        }
        if (t + 1 > std::uint64_t{d - 1} * r) {
            res.detail = "no successful expansion for t up to (d-1)r";
            return res;
        }
        Subspace next = sum(W, scalar_mul(params.alpha, W));
        if (next.dim() == W.dim()) {
            res.detail = "expansion stalled before reaching the target";
            return res;
        }
        W = std::move(next);
        res.dims.push_back(W.dim());
    }
}

Phase2Result phase2_support(const Subspace& F, const CodeParams& params,
                            std::size_t t_used, std::uint32_t r) {
    Phase2Result res;
    const std::int64_t shift = static_cast<std::int64_t>(t_used) + params.d - 2;
    const Element beta = params.alpha.pow(-shift);
    res.support = intersect(F, scalar_mul(beta, F));
    res.achieved_dim = res.support.dim();
    res.ok = (res.achieved_dim == r);
    return res;
}

Phase3Result phase3_solve(const BdlrpcCode& code, const std::vector<Element>& s,
                          const Subspace& support) {
    const FieldPtr& f = code.params.field;
    const std::size_t n = code.params.n, nk = n - code.params.k;
    const std::uint32_t q = f->q(), m = f->m();
    if (s.size() != nk) throw DimensionMismatchError("syndrome length != n-k");

    Phase3Result res;
    const std::vector<Element> eps = support.basis_elements();
    const std::size_t r = eps.size();
    if (r == 0) {
        if (!all_zero(s)) {
            res.why = SolveFailKind::Inconsistent;
            return res;
        }
        res.ok = true;
        res.e = zero_vector(f, n);
        return res;
    }

    // Unknowns c_{l,j} (coordinate of eps_l in e_j), column index j*r + l.
    // Each syndrome entry contributes m F_q equations via the coefficient
    // vectors of H_{ij} * eps_l.
    FqMatrix M(q, m * nk, r * n);
    std::vector<std::uint32_t> b(m * nk, 0);
    for (std::size_t i = 0; i < nk; ++i) {
        const std::vector<std::uint32_t> sv = elem_to_vec(s[i]);
        for (std::uint32_t mu = 0; mu < m; ++mu) b[i * m + mu] = sv[mu];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < r; ++l) {
                const std::vector<std::uint32_t> w = elem_to_vec(code.H.at(i, j) * eps[l]);
                for (std::uint32_t mu = 0; mu < m; ++mu)
                    M.set(i * m + mu, j * r + l, w[mu]);
            }
    }

    const SolveResult sol = solve(M, b);
    if (sol.kind == SolveKind::None) {
        res.why = SolveFailKind::Inconsistent;
        return res;
    }
    if (sol.kind == SolveKind::Underdetermined) {
        res.why = SolveFailKind::NotUnique;
        return res;
    }

    std::vector<Element> e = zero_vector(f, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < r; ++l) {
            const std::uint32_t c = sol.x[j * r + l];
            if (c) e[j] = e[j] + eps[l] * f->from_int(c);
        }

    // Defensive re-verification of H e^T = s^T.
    const std::vector<Element> check = syndrome(code, e);
    for (std::size_t i = 0; i < nk; ++i)
        if (!(check[i] == s[i])) {
            res.why = SolveFailKind::Inconsistent;
            return res;
        }
    res.ok = true;
    res.e = std::move(e);
    return res;
}

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Success: return "Success";
        case DecodeStatus::ExpansionFailure: return "ExpansionFailure";
        case DecodeStatus::SupportFailure: return "SupportFailure";
        case DecodeStatus::SolveFailure: return "SolveFailure";
    }
    return "?";
}

DecodeOutcome decode(const BdlrpcCode& code, const std::vector<Element>& s,
                     std::uint32_t r) {
    const FieldPtr& f = code.params.field;
    DecodeOutcome out;
    if (s.size() != code.params.n - code.params.k)
        throw DimensionMismatchError("syndrome length != n-k");

    if (all_zero(s)) {
        out.status = DecodeStatus::Success;
        out.recovered_support = Subspace(f);
        out.error = zero_vector(f, code.params.n);
        out.detail = "zero syndrome";
        return out;
    }

    const Phase1Result p1 = phase1_expand(s, code.params, r);
    out.t_used = p1.t_used;
    out.dims_per_t = p1.dims;
    out.expanded_dim = p1.F.dim();
    if (!p1.ok) {
        out.status = DecodeStatus::ExpansionFailure;
        out.detail = p1.detail;
        return out;
    }

    const Phase2Result p2 = phase2_support(p1.F, code.params, p1.t_used, r);
    out.recovered_support = p2.support;
    if (!p2.ok) {
        out.status = DecodeStatus::SupportFailure;
        out.detail = "support dimension " + std::to_string(p2.achieved_dim) +
                     " != " + std::to_string(r);
        return out;
    }

    const Phase3Result p3 = phase3_solve(code, s, p2.support);
    if (!p3.ok) {
        out.status = DecodeStatus::SolveFailure;
        out.detail = p3.why == SolveFailKind::Inconsistent ? "inconsistent system"
                                                           : "solution not unique";
        return out;
    }

    out.status = DecodeStatus::Success;
    out.error = p3.e;
    return out;
}

DecodeOutcome decode_infer_rank(const BdlrpcCode& code, const std::vector<Element>& s,
                                std::uint32_t r_max) {
    if (all_zero(s)) return decode(code, s, 0);
    const std::size_t dim_s = Subspace::span_of(s).dim();
    std::uint32_t r_hat = static_cast<std::uint32_t>((dim_s + code.params.d - 1) / code.params.d);
    if (r_hat < 1) r_hat = 1;
    if (r_hat > r_max) r_hat = r_max;

    DecodeOutcome last;
    for (std::uint32_t r = r_hat; r <= r_max; ++r) {
        last = decode(code, s, r);
        if (last.status == DecodeStatus::Success) {
            last.detail = "rank inferred as " + std::to_string(r);
            return last;
        }
    }
    return last;
}

CorrectionResult correct_word(const BdlrpcCode& code, const std::vector<Element>& y,
                              std::uint32_t r) {
    CorrectionResult res;
    res.outcome = decode(code, syndrome(code, y), r);
    if (res.outcome.status == DecodeStatus::Success) {
        std::vector<Element> c = y;
        const std::vector<Element>& e = *res.outcome.error;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = c[j] - e[j];
        res.codeword = std::move(c);
    }
    return res;
}

std::size_t rank_weight(const std::vector<Element>& v) {
    if (v.empty()) return 0;
    return Subspace::span_of(v).dim();
}

Subspace lrpc_baseline_support(const std::vector<Element>& s, const CodeParams& params) {
    Subspace S = Subspace::span_of(s);
    Subspace acc = S;
    for (std::uint32_t j = 1; j < params.d; ++j)
        acc = intersect(acc, scalar_mul(params.alpha.pow(-static_cast<std::int64_t>(j)), S));
    return acc;
}

} // namespace bdlrpc
