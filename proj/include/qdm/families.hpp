#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qdm/classical.hpp"
#include "qdm/qdist.hpp"

namespace qdm {

enum class Measure { kK, kPE, kB, kSD };

const char* measure_name(Measure m);

// All four measures of the n-th member of a family. For quantum families `sd`
// holds the upper bound K (sd_is_upper_bound = true).
struct MeasureRow {
    int n;
    double k;
    double pe;
    double b;
    double sd;
    bool sd_is_upper_bound;

    // Distance of each measure from its indistinguishable limit:
    // K -> 0, PE -> 1/2, B -> 1, SD -> 0.
    double gap(Measure m) const;
};

// Indexed family n -> pair, n = 1..n_max.
struct PairFamily {
    using ClassicalGenerator = std::function<HypothesisPair(int)>;
    using QuantumGenerator = std::function<QuantumPair(int)>;

    std::string name;
    std::variant<ClassicalGenerator, QuantumGenerator> generator;
    int n_max;
    // Optional shortcut for members too large to evaluate from the generator.
    std::function<std::optional<MeasureRow>(int)> closed_form;
};

std::vector<MeasureRow> evaluate_family(const PairFamily& fam, const Tolerances& tol = {});

// Uniform strings of length n against the same with 0^n removed and 1^n doubled.
PairFamily uniform_vs_modified_family(int n_max);
// n-independent pair.
PairFamily constant_family(HypothesisPair pair, int n_max);
// Parity-bit states at angle alpha. Members with n > brute_force_max_n are
// evaluated through the closed forms |sin 2a|^n and the block sum for B.
PairFamily parity_family(double alpha, int n_max = 10, int brute_force_max_n = 6);

struct RateFit {
    double epsilon;        // 2^(least-squares slope of log2 gap(n))
    double bound_epsilon;  // certified rate: gap(n) <= bound_epsilon^n for n in [n0, n_max]
    int n0;
    Measure measure;
    std::vector<double> residuals;  // log2 gap(n) minus the fitted line, over the fit window
};

enum class CertifyStatus { kCertified, kRefuted, kDegenerate };

struct Certification {
    CertifyStatus status;
    RateFit fit;
    // Refutations: the n demanding the largest per-step rate gap(n)^(1/n).
    std::optional<int> witness_n;
};

struct CertifyOptions {
    double tol = 1e-9;          // inflation of the fitted rate
    double zero_floor = 1e-14;  // gaps at or below this count as zero
};

// Fits and certifies gap(n) <= eps^n from gaps[i] = gap(n = i + 1).
Certification certify_decay(std::span<const double> gaps, Measure measure, const CertifyOptions& opt = {});

// Exponential indistinguishability with respect to K.
Certification certify_exp_indist(const PairFamily& fam, const CertifyOptions& opt = {},
                                 const Tolerances& tol = {});

struct AuditResult {
    std::vector<MeasureRow> rows;
    std::array<Certification, 4> fits;  // indexed by Measure
    // Per-n envelopes implied by K <= eps^n: 1/2 - PE <= eps^n / 2,
    // 1 - B <= eps^n, SD <= eps^n for n >= n0.
    bool envelopes_hold;
    // Each measure's fitted rate is no slower than K's.
    bool rates_consistent;
    // Every measure certified (or degenerate).
    bool all_certified;
};

AuditResult equivalence_audit(const PairFamily& fam, const CertifyOptions& opt = {},
                              const Tolerances& tol = {});

}  // namespace qdm
