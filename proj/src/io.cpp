#include "qdm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdm/parity.hpp"

namespace qdm {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

ComplexMatrix matrix_from(const json& j) {
    if (!j.is_object()) throw ParseError("matrix document must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
        throw ParseError("matrix document needs a positive integer \"dim\"");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("matrix document needs an \"entries\" array");
    }
    const auto dim = static_cast<std::size_t>(j["dim"].get<long long>());
    const json& e = j["entries"];
    if (e.size() != dim * dim) {
        throw ParseError("expected " + std::to_string(dim * dim) + " entries, found " + std::to_string(e.size()));
    }
    std::vector<Complex> entries;
    entries.reserve(e.size());
    for (const auto& z : e) {
        if (!z.is_array() || z.size() != 2) throw ParseError("each entry must be a [real, imaginary] pair");
        entries.emplace_back(number_at(z[0], "real part"), number_at(z[1], "imaginary part"));
    }
    return ComplexMatrix(dim, std::move(entries));
}

ordered_json matrix_json(const ComplexMatrix& m, const std::optional<std::string>& label) {
    ordered_json j;
    j["dim"] = m.dim();
    ordered_json entries = ordered_json::array();
    for (const Complex& z : m.entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    if (label) j["label"] = *label;
    return j;
}

ProbDist distribution_from(const json& j, const Tolerances& tol) {
    const json& arr = j.is_object() && j.contains("probs") ? j["probs"] : j;
    if (!arr.is_array()) throw ParseError("distribution must be an array or {\"probs\": [...]}");
    std::vector<double> p;
    for (const auto& x : arr) p.push_back(number_at(x, "probability"));
    return ProbDist(std::move(p), tol);
}

int horizon(const json& j, std::optional<int> override_n, int fallback) {
    if (override_n) return *override_n;
    if (!j.contains("n_max")) return fallback;
    if (!j["n_max"].is_number_integer()) throw ParseError("\"n_max\" must be an integer");
    return j["n_max"].get<int>();
}

}  // namespace

MatrixDocument parse_matrix(const std::string& text) {
    const json j = parse_json(text);
    MatrixDocument doc{matrix_from(j), std::nullopt};
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
        doc.label = j["label"].get<std::string>();
    }
    return doc;
}

std::string format_matrix(const ComplexMatrix& m, const std::optional<std::string>& label) {
    return matrix_json(m, label).dump() + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

MatrixDocument read_matrix_file(const std::string& path) { return parse_matrix(read_text_file(path)); }

void write_matrix_file(const std::string& path, const ComplexMatrix& m, const std::optional<std::string>& label) {
    write_text_file(path, format_matrix(m, label));
}

DensityMatrix read_density_file(const std::string& path, const Tolerances& tol) {
    return DensityMatrix(read_matrix_file(path).matrix, tol);
}

ProbDist parse_distribution(const std::string& text, const Tolerances& tol) {
    return distribution_from(parse_json(text), tol);
}

ProbDist read_distribution_file(const std::string& path, const Tolerances& tol) {
    return parse_distribution(read_text_file(path), tol);
}

std::string format_povm(const Povm& povm) {
    ordered_json j;
    j["outcomes"] = povm.outcomes();
    ordered_json elements = ordered_json::array();
    for (const auto& e : povm.elements()) elements.push_back(matrix_json(e, std::nullopt));
    j["elements"] = std::move(elements);
    return j.dump() + "\n";
}

Povm parse_povm(const std::string& text, const Tolerances& tol) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
        throw ParseError("POVM document needs an \"elements\" array");
    }
    std::vector<ComplexMatrix> elements;
    for (const auto& e : j["elements"]) elements.push_back(matrix_from(e));
    if (elements.empty()) throw ParseError("POVM needs at least one element");
    return Povm(std::move(elements), tol);
}

PairFamily named_family(const std::string& name, int n_max, double alpha) {
    if (name == "uniform-vs-modified") return uniform_vs_modified_family(n_max);
    if (name == "parity") return parity_family(alpha, n_max);
    throw ParseError("unknown family \"" + name + "\" (known: uniform-vs-modified, parity)");
}

PairFamily parse_family(const std::string& text, std::optional<int> n_max_override, const Tolerances& tol) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("family document must be an object");
    if (j.contains("family")) {
        if (!j["family"].is_string()) throw ParseError("\"family\" must be a string");
        const std::string name = j["family"].get<std::string>();
        const double alpha = j.contains("alpha") ? number_at(j["alpha"], "alpha") : std::acos(-1.0) / 8;
        return named_family(name, horizon(j, n_max_override, name == "parity" ? 10 : 12), alpha);
    }
    if (!j.contains("members") || !j["members"].is_array() || j["members"].empty()) {
        throw ParseError("family document needs \"family\" or a non-empty \"members\" array");
    }
    const std::string kind = j.value("kind", std::string("classical"));
    const json& members = j["members"];
    const int n_max = std::min(horizon(j, n_max_override, static_cast<int>(members.size())),
                               static_cast<int>(members.size()));
    if (kind == "classical") {
        std::vector<HypothesisPair> pairs;
        for (const auto& m : members) {
            if (!m.contains("p0") || !m.contains("p1")) throw ParseError("classical members need \"p0\" and \"p1\"");
            pairs.emplace_back(distribution_from(m["p0"], tol), distribution_from(m["p1"], tol));
        }
        auto gen = [pairs](int n) { return pairs.at(static_cast<std::size_t>(n - 1)); };
        return {"explicit-classical", PairFamily::ClassicalGenerator(gen), n_max, {}};
    }
    if (kind == "quantum") {
        std::vector<QuantumPair> pairs;
        for (const auto& m : members) {
            if (!m.contains("rho0") || !m.contains("rho1")) {
                throw ParseError("quantum members need \"rho0\" and \"rho1\"");
            }
            pairs.emplace_back(DensityMatrix(matrix_from(m["rho0"]), tol), DensityMatrix(matrix_from(m["rho1"]), tol));
        }
        auto gen = [pairs](int n) { return pairs.at(static_cast<std::size_t>(n - 1)); };
        return {"explicit-quantum", PairFamily::QuantumGenerator(gen), n_max, {}};
    }
    throw ParseError("\"kind\" must be \"classical\" or \"quantum\"");
}

PairFamily read_family_file(const std::string& path, std::optional<int> n_max_override, const Tolerances& tol) {
    return parse_family(read_text_file(path), n_max_override, tol);
}

void RunConfig::validate() const {
    if (!(tol.herm > 0 && tol.psd > 0 && tol.eig > 0 && assert_tol > 0)) {
        throw DomainError("all tolerances must be positive");
    }
    if (dim_cap < 2) throw DomainError("dimension cap must be >= 2");
    if (sd.iterations < 1) throw DomainError("optimizer iteration budget must be >= 1");
}

}  // namespace qdm
