// Seeded Monte-Carlo experiments and the command-line front end.
//
// Every experiment derives one RNG per trial as mt19937_64(seed ^ index), so
// results are a pure function of (config, seed) no matter how trials are
// scheduled; reports aggregate by integer summation and the CSV writers are
// single-threaded, which makes output byte-identical across thread counts.
//
// Experiments:
//   table1  - success frequency of Rank(M_t(Z,A)) = (d-1)r for three A
//             samplers (uniform / structured block / companion), against the
//             closed-form predictions for the uniform and companion cases;
//   decode  - end-to-end decoder failure rates per phase, the instrumented
//             rank-condition cross-check, and a standard-LRPC baseline;
//   count   - brute-force vs closed-form class sizes |C_k|;
//   ferrers - Ferrers-diagram identities against enumeration.
#ifndef BDLRPC_HARNESS_HPP
#define BDLRPC_HARNESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdlrpc/counting.hpp"

namespace bdlrpc {

enum class Sampler { Uniform, Structured, Companion };
const char* to_string(Sampler s);

// ---- table1 ----

struct Table1Config {
    std::uint32_t q = 2, r = 1, u = 2, d = 2;
    std::optional<std::size_t> t;  // default: (d-1)r, the full-rank threshold
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct Table1Row {
    Sampler sampler = Sampler::Uniform;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double rate = 0.0;
    std::optional<double> predicted;  // no prediction for the structured column
};

struct Table1Report {
    Table1Config config;
    std::size_t t = 0;
    std::vector<Table1Row> rows;  // uniform, structured, companion
};

// Per trial: Z uniform u x (d-1)r; A per sampler; success iff
// mt_rank(Z, A, t) = (d-1)r. The three samplers replay the same derived
// per-trial stream (Z first, then A), so for d = 2 the structured and uniform
// columns coincide exactly.
Table1Report run_table1(const Table1Config& config);

// ---- decode ----

struct DecodeConfig {
    std::uint32_t q = 2, m = 31, n = 7, k = 2, d = 2, r = 2;
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool instrument = true;  // per-trial rank-condition cross-checks
};

struct DecodeReport {
    DecodeConfig config;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t expansion_failures = 0;
    std::size_t support_failures = 0;
    std::size_t solve_failures = 0;
    // Successes whose recovered error differs from the planted one (each
    // Success still satisfies the syndrome equation exactly).
    std::size_t success_mismatches = 0;

    // Instrumentation: trials where the syndrome decomposes against a full
    // direct-sum basis of V_{alpha,d}.E (checked) vs not (skipped), and
    // violations of "rank conditions => successful expansion" (must stay 0).
    std::size_t prop_checked = 0;
    std::size_t prop_skipped = 0;
    std::size_t prop_contradictions = 0;

    // Standard-LRPC intersection baseline: trials whose support it recovers.
    std::size_t baseline_successes = 0;

    double failure_rate = 0.0;
    double predicted_ceiling = 0.0;  // c_q * q^{-u+1}, c_q = (q+1)/(q-1)
};

DecodeReport run_decode(const DecodeConfig& config);

// ---- count ----

struct CountConfig {
    // Tuples (q, u, r); every k in [0, r] is verified at t = r.
    std::vector<std::array<std::uint32_t, 3>> tuples;
    static CountConfig acceptance_grid();  // q in {2,3} x u in {1,2} x r in {1,2}, plus (2,1,3)
};

struct CountRow {
    std::uint32_t u = 0, r = 0, k = 0, t = 0, q = 0;
    BigInt brute, formula;
    bool match = false;
};

struct CountReport {
    std::vector<CountRow> rows;
    bool all_match = false;
    bool totals_match = false;  // sum_k brute == q^{r(u+r)} per tuple
};

CountReport run_count_verify(const CountConfig& config);

// ---- ferrers ----

struct FerrersConfig {
    std::uint32_t max_n = 6, max_k = 6;   // Knuth identity box sizes
    std::uint32_t max_u = 4, max_kk = 4;  // two-level closed-form box sizes
    std::vector<std::uint32_t> qs = {2, 3};
};

struct FerrersRow {
    std::string kind;  // "knuth" or "twolevel"
    std::uint32_t n = 0, k = 0, s = 0, t = 0, q = 0;
    BigInt brute, closed;
    bool match = false;
};

struct FerrersReport {
    std::vector<FerrersRow> rows;
    bool all_match = false;
};

FerrersReport run_ferrers_verify(const FerrersConfig& config);

// ---- output ----

// Shared schema: kind,q,r,u,d,t,sampler,trials,successes,rate,predicted,seed
std::string table1_csv(const Table1Report& report);
std::string decode_csv(const DecodeReport& report);
// count schema: u,r,k,t,q,brute,formula,match
std::string count_csv(const CountReport& report);
// ferrers schema: kind,n,k,s,t,q,brute,closed,match
std::string ferrers_csv(const FerrersReport& report);

std::string table1_json(const Table1Report& report);
std::string decode_json(const DecodeReport& report);
std::string count_json(const CountReport& report);
std::string ferrers_json(const FerrersReport& report);

// Writes via a temporary file in the same directory plus rename, so readers
// never observe a partial file.
void write_atomic(const std::string& path, const std::string& content);

// ---- CLI ----

// Subcommands: table1, decode, count, ferrers, demo.
// Exit codes: 0 ok, 1 experiment mismatch, 2 usage error.
int run_cli(int argc, const char* const* argv);

} // namespace bdlrpc

#endif // BDLRPC_HARNESS_HPP
