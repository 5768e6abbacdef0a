#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "abcd/cavity.hpp"
#include "abcd/core.hpp"
#include "abcd/multilayer.hpp"

namespace abcd {

// One optical element of a beam path. param is the mirror radius, the
// translation distance, the boundary rapidity, or the phase angle.
struct Element {
    enum class Kind { Mirror, Translation, Boundary, Phase };
    Kind kind = Kind::Translation;
    double param = 0.0;
};

const char* to_string(Element::Kind kind);

struct ElementListSpec {
    std::vector<Element> elements;
};

struct RawMatrixSpec {
    RayMatrix matrix;
};

using SystemSpec = std::variant<ElementListSpec, CavitySpec, LayerCycleSpec, RawMatrixSpec>;

struct AnalysisOptions {
    double det_tol = kDetTol;
    double class_tol = kClassTol;
    // When set, the report gains the n-th power of the system matrix.
    std::optional<long> cycles;
};

// Accepts a JSON object with exactly one of the keys
//   "elements": [{"kind": "mirror|translation|boundary|phase", "param": x}, ...]
//   "cavity": {"d": x, "R": x}
//   "multilayer": {"delta1": x, "delta2": x, "sigma": x}
//   "raw": {"a11": x, "a12": x, "a21": x, "a22": x}   (|det - 1| <= det_tol)
// Elements are listed in beam order: the first entry acts on the beam
// first, so the matrix product is written last-listed * ... * first-listed.
// Throws ParseError for malformed JSON, ValidationError for shape or
// determinant violations.
SystemSpec parse_spec(const std::string& text, double det_tol = kDetTol);

// Full report for one system: the matrix, its invariants, core parameters
// and both decompositions, plus variant-specific sections (stability
// verdict with closed-form angle and rapidity for cavities, the complex
// cycle for multilayers, the n-th power when requested). Domain errors
// propagate as exceptions.
nlohmann::ordered_json analyze(const SystemSpec& spec, const AnalysisOptions& options = {});

// Check report for the massive little group: does B(eta) R(theta) B(-eta)
// fix the four-momentum of mass m moving with rapidity eta?
nlohmann::ordered_json little_group_report(double eta, double theta, double mass, double tol);

// Check report for the massless gauge limit: does the gamma matrix fix
// (0, 0, p, p), and what does it do to a transverse unit vector?
nlohmann::ordered_json gauge_report(double gamma, double p, double tol);

// Flat "path = value" rendering with aligned columns. Scalars are printed
// exactly as in the JSON encoding, so both formats are lossless.
std::string render_text(const nlohmann::ordered_json& report);

// format is "json" or "text"; the result ends with a newline.
std::string render_report(const nlohmann::ordered_json& report, const std::string& format);

}  // namespace abcd
