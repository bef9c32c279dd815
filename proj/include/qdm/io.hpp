#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qdm/families.hpp"
#include "qdm/measure.hpp"
#include "qdm/qdist.hpp"

namespace qdm {

// Malformed or unreadable input file.
class ParseError : public Error {
public:
    using Error::Error;
};

// Matrix document: {"dim": N, "entries": [[re, im], ...] row-major, "label": "..."}.
struct MatrixDocument {
    ComplexMatrix matrix;
    std::optional<std::string> label;
};

MatrixDocument parse_matrix(const std::string& text);
std::string format_matrix(const ComplexMatrix& m, const std::optional<std::string>& label = std::nullopt);

MatrixDocument read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m,
                       const std::optional<std::string>& label = std::nullopt);

// Matrix file that must also be a valid density matrix. Validation failures
// surface as InvalidValue naming the broken invariant.
DensityMatrix read_density_file(const std::string& path, const Tolerances& tol = {});

// {"probs": [...]} or a bare array.
ProbDist parse_distribution(const std::string& text, const Tolerances& tol = {});
ProbDist read_distribution_file(const std::string& path, const Tolerances& tol = {});

// {"outcomes": m, "elements": [matrix document, ...]}
std::string format_povm(const Povm& povm);
Povm parse_povm(const std::string& text, const Tolerances& tol = {});

// Family document, either a built-in
//   {"family": "uniform-vs-modified", "n_max": 12}
//   {"family": "parity", "alpha": 0.3927, "n_max": 10}
// or explicit members, one per n starting at 1:
//   {"kind": "classical", "members": [{"p0": [...], "p1": [...]}, ...]}
//   {"kind": "quantum", "members": [{"rho0": matrix, "rho1": matrix}, ...]}
// `n_max_override` replaces the document's horizon for built-ins.
PairFamily parse_family(const std::string& text, std::optional<int> n_max_override = std::nullopt,
                        const Tolerances& tol = {});
PairFamily read_family_file(const std::string& path, std::optional<int> n_max_override = std::nullopt,
                            const Tolerances& tol = {});

PairFamily named_family(const std::string& name, int n_max, double alpha);

struct RunConfig {
    Tolerances tol;
    double assert_tol = kDefaultAssertTol;
    std::uint64_t seed = kDefaultSeed;
    std::size_t dim_cap = kDefaultDimCap;
    SdConfig sd;
    std::optional<std::string> out;

    static constexpr double kDefaultAssertTol = 1e-9;

    // Throws DomainError unless all tolerances are positive and cap >= 2.
    void validate() const;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qdm
