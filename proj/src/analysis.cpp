#include "abcd/analysis.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "abcd/decomp.hpp"
#include "abcd/errors.hpp"
#include "abcd/lorentz.hpp"

namespace abcd {

namespace {

using nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Largest imaginary part tolerated before a composed element product stops
// counting as real.
constexpr double kImagTol = 1e-9;

ordered_json matrix_json(const RayMatrix& m) {
    return {{"a11", m.a11}, {"a12", m.a12}, {"a21", m.a21}, {"a22", m.a22}};
}

ordered_json complex_json(const std::complex<double>& z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

ordered_json matrix_json(const ComplexMatrix& m) {
    return {{"a11", complex_json(m.a11)},
            {"a12", complex_json(m.a12)},
            {"a21", complex_json(m.a21)},
            {"a22", complex_json(m.a22)}};
}

ordered_json core_json(const CoreParams& p) {
    ordered_json j;
    j["gamma"] = p.gamma;
    j["eta"] = p.eta;
    j["sign"] = p.sign;
    if (p.cls == TraceClass::Parabolic) {
        j["orientation"] = to_string(p.orientation);
    } else {
        j["orientation"] = nullptr;
    }
    return j;
}

ordered_json wigner_json(const WignerFactors& w) {
    ordered_json middle;
    std::visit(Overloaded{
                   [&](const RotationMiddle& m) {
                       middle["type"] = "rotation";
                       middle["theta"] = m.theta;
                   },
                   [&](const SqueezeMiddle& m) {
                       middle["type"] = "squeeze";
                       middle["lambda"] = m.lambda;
                   },
                   [&](const ShearMiddle& m) {
                       middle["type"] = "shear";
                       middle["gamma"] = m.gamma;
                       middle["orientation"] = to_string(m.orientation);
                   },
               },
               w.middle);
    return {{"eta", w.eta}, {"sign", w.sign}, {"middle", std::move(middle)}};
}

ordered_json bargmann_json(const BargmannParams& b) {
    return {{"alpha", b.alpha}, {"chi", b.chi}};
}

ordered_json vector_json(const FourVector& v) {
    return {{"x", v.x}, {"y", v.y}, {"z", v.z}, {"t", v.t}};
}

ordered_json input_json(const SystemSpec& spec) {
    return std::visit(
        Overloaded{
            [](const ElementListSpec& s) {
                ordered_json items = ordered_json::array();
                for (const Element& e : s.elements) {
                    items.push_back({{"kind", to_string(e.kind)}, {"param", e.param}});
                }
                return ordered_json{{"kind", "elements"}, {"elements", std::move(items)}};
            },
            [](const CavitySpec& s) {
                return ordered_json{{"kind", "cavity"}, {"d", s.d}, {"R", s.r}};
            },
            [](const LayerCycleSpec& s) {
                return ordered_json{{"kind", "multilayer"},
                                    {"delta1", s.delta1},
                                    {"delta2", s.delta2},
                                    {"sigma", s.sigma}};
            },
            [](const RawMatrixSpec& s) {
                return ordered_json{{"kind", "raw"}, {"matrix", matrix_json(s.matrix)}};
            },
        },
        spec);
}

// det/trace/class plus the whole decomposition chain for a real
// unimodular matrix.
void append_real_analysis(ordered_json& report, const RayMatrix& m,
                          const AnalysisOptions& opt) {
    report["det"] = det(m);
    report["trace"] = trace(m);
    const Equidiagonalization eq = equidiagonalize(m, opt.det_tol);
    const CoreParams core = extract_core_params(eq.core, opt.class_tol);
    report["class"] = to_string(core.cls);
    const double phi = 2.0 * std::atan2(eq.transform.a21, eq.transform.a11);
    report["equidiagonal"] = ordered_json{{"phi", phi}, {"matrix", matrix_json(eq.core)}};
    report["core"] = core_json(core);
    report["wigner"] = wigner_json(wigner_decompose(core));
    report["bargmann"] = bargmann_json(bargmann_decompose(eq.core));
}

// m^n through the core: with c = t m t^-1 equi-diagonal, m^n = t^-1 c^n t.
RayMatrix real_power(const RayMatrix& m, long n, const AnalysisOptions& opt) {
    const Equidiagonalization eq = equidiagonalize(m, opt.det_tol);
    const CoreParams core = extract_core_params(eq.core, opt.class_tol);
    const RayMatrix cn = compose_core(power(core, n));
    return inverse(eq.transform, opt.det_tol) * cn * eq.transform;
}

ComplexMatrix element_matrix(const Element& e) {
    switch (e.kind) {
        case Element::Kind::Mirror:
            return to_complex(mirror_matrix(e.param));
        case Element::Kind::Translation:
            return to_complex(translation_matrix(e.param));
        case Element::Kind::Boundary:
            return boundary_matrix(e.param);
        case Element::Kind::Phase:
            return phase_matrix(e.param);
    }
    return {};
}

ordered_json power_json(long n, ordered_json matrix) {
    return {{"n", n}, {"matrix", std::move(matrix)}};
}

ordered_json analyze_elements(const ElementListSpec& spec, const AnalysisOptions& opt,
                              ordered_json report) {
    // Beam order: the first listed element acts first, so each later
    // element multiplies from the left.
    ComplexMatrix prod;
    for (const Element& e : spec.elements) {
        prod = element_matrix(e) * prod;
    }

    if (max_imag(prod) <= kImagTol * std::max(1.0, max_abs(prod))) {
        const RayMatrix m = real_part(prod);
        report["form"] = "real";
        report["matrix"] = matrix_json(m);
        append_real_analysis(report, m, opt);
        if (opt.cycles) {
            report["power"] = power_json(*opt.cycles,
                                         matrix_json(real_power(m, *opt.cycles, opt)));
        }
        return report;
    }

    const ComplexMatrix w = similarity_c() * prod * similarity_c_inverse();
    if (max_imag(w) <= kImagTol * std::max(1.0, max_abs(w))) {
        const RayMatrix m = real_part(w);
        report["form"] = "conjugated";
        report["matrix"] = matrix_json(prod);
        report["real_form"] = matrix_json(m);
        append_real_analysis(report, m, opt);
        if (opt.cycles) {
            const RayMatrix wn = real_power(m, *opt.cycles, opt);
            const ComplexMatrix back =
                similarity_c_inverse() * to_complex(wn) * similarity_c();
            report["power"] = power_json(*opt.cycles, matrix_json(back));
        }
        return report;
    }

    report["form"] = "complex";
    report["matrix"] = matrix_json(prod);
    report["det"] = complex_json(det(prod));
    report["trace"] = complex_json(trace(prod));
    report["class"] = nullptr;
    if (opt.cycles) {
        throw ValidationError(
            "n-th power needs a product that is real or conjugates to real");
    }
    return report;
}

ordered_json analyze_cavity(const CavitySpec& spec, const AnalysisOptions& opt,
                            ordered_json report) {
    const CoreParams core = cavity_core(spec);
    const CavityFactorization f = cavity_factorize(spec);
    const RayMatrix rt = round_trip(spec);
    report["matrix"] = matrix_json(rt);
    report["det"] = det(rt);
    report["trace"] = trace(rt);
    report["half_trip"] = matrix_json(f.half_trip);
    report["class"] = to_string(core.cls);
    report["core"] = core_json(core);
    const CavityClosedForm closed = cavity_closed_form(spec);
    report["closed_form"] = ordered_json{{"gamma", closed.gamma}, {"eta", closed.eta}};
    report["wigner"] = wigner_json(wigner_decompose(core));
    report["bargmann"] = bargmann_json(bargmann_decompose(f.half_trip));
    const double band = std::abs(std::abs(trace(f.half_trip)) - 2.0);
    report["cavity"] = ordered_json{
        {"stable", is_stable(spec)},
        {"verdict", band <= opt.class_tol ? "marginally stable" : "stable"}};
    if (opt.cycles) {
        report["power"] =
            power_json(*opt.cycles, matrix_json(n_round_trips(spec, *opt.cycles)));
    }
    return report;
}

ordered_json analyze_multilayer(const LayerCycleSpec& spec, const AnalysisOptions& opt,
                                ordered_json report) {
    report["cycle"] = matrix_json(cycle_matrix(spec));
    const RayMatrix m = real_chain(spec);
    report["matrix"] = matrix_json(m);
    report["det"] = det(m);
    report["trace"] = trace(m);
    const CoreParams core = chain_wigner(spec, opt.class_tol);
    report["class"] = to_string(core.cls);
    report["core"] = core_json(core);
    report["wigner"] = wigner_json(wigner_decompose(core));
    report["bargmann"] = bargmann_json(chain_bargmann(spec));
    if (opt.cycles) {
        report["power"] = power_json(*opt.cycles, matrix_json(n_cycles(spec, *opt.cycles)));
    }
    return report;
}

ordered_json analyze_raw(const RawMatrixSpec& spec, const AnalysisOptions& opt,
                         ordered_json report) {
    report["matrix"] = matrix_json(spec.matrix);
    append_real_analysis(report, spec.matrix, opt);
    if (opt.cycles) {
        report["power"] = power_json(
            *opt.cycles, matrix_json(real_power(spec.matrix, *opt.cycles, opt)));
    }
    return report;
}

double require_number(const nlohmann::json& obj, const char* key, const std::string& ctx) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(ctx + " is missing field '" + key + "'");
    }
    if (!it->is_number()) {
        throw ValidationError(ctx + " field '" + key + "' must be a number");
    }
    return it->get<double>();
}

// Reports print -0.0 as 0.0: the sign of an exact zero is numeric noise.
void scrub_negative_zero(ordered_json& node) {
    if (node.is_object() || node.is_array()) {
        for (auto& child : node) {
            scrub_negative_zero(child);
        }
    } else if (node.is_number_float()) {
        const double v = node.get<double>();
        if (v == 0.0 && std::signbit(v)) {
            node = 0.0;
        }
    }
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                    const std::string& ctx) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ValidationError(ctx + " has unknown field '" + item.key() + "'");
        }
    }
}

}  // namespace

const char* to_string(Element::Kind kind) {
    switch (kind) {
        case Element::Kind::Mirror:
            return "mirror";
        case Element::Kind::Translation:
            return "translation";
        case Element::Kind::Boundary:
            return "boundary";
        case Element::Kind::Phase:
            return "phase";
    }
    return "unknown";
}

SystemSpec parse_spec(const std::string& text, double det_tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("system spec must be a JSON object");
    }
    reject_unknown(doc, {"elements", "cavity", "multilayer", "raw"}, "system spec");
    const int present = static_cast<int>(doc.contains("elements")) +
                        static_cast<int>(doc.contains("cavity")) +
                        static_cast<int>(doc.contains("multilayer")) +
                        static_cast<int>(doc.contains("raw"));
    if (present != 1) {
        throw ValidationError(
            "system spec needs exactly one of 'elements', 'cavity', 'multilayer', 'raw'");
    }

    if (doc.contains("raw")) {
        const auto& r = doc.at("raw");
        if (!r.is_object()) {
            throw ValidationError("'raw' must be an object");
        }
        reject_unknown(r, {"a11", "a12", "a21", "a22"}, "'raw'");
        RawMatrixSpec spec;
        spec.matrix = {require_number(r, "a11", "'raw'"), require_number(r, "a12", "'raw'"),
                       require_number(r, "a21", "'raw'"), require_number(r, "a22", "'raw'")};
        const double d = det(spec.matrix);
        if (std::abs(d - 1.0) > det_tol) {
            throw ValidationError("'raw' matrix must have det 1, got " + std::to_string(d));
        }
        return spec;
    }
    if (doc.contains("cavity")) {
        const auto& c = doc.at("cavity");
        if (!c.is_object()) {
            throw ValidationError("'cavity' must be an object");
        }
        reject_unknown(c, {"d", "R"}, "'cavity'");
        return CavitySpec{require_number(c, "d", "'cavity'"),
                          require_number(c, "R", "'cavity'")};
    }
    if (doc.contains("multilayer")) {
        const auto& m = doc.at("multilayer");
        if (!m.is_object()) {
            throw ValidationError("'multilayer' must be an object");
        }
        reject_unknown(m, {"delta1", "delta2", "sigma"}, "'multilayer'");
        return LayerCycleSpec{require_number(m, "delta1", "'multilayer'"),
                              require_number(m, "delta2", "'multilayer'"),
                              require_number(m, "sigma", "'multilayer'")};
    }

    const auto& list = doc.at("elements");
    if (!list.is_array()) {
        throw ValidationError("'elements' must be an array");
    }
    ElementListSpec spec;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string ctx = "elements[" + std::to_string(i) + "]";
        const auto& item = list.at(i);
        if (!item.is_object()) {
            throw ValidationError(ctx + " must be an object");
        }
        reject_unknown(item, {"kind", "param"}, ctx);
        const auto kind_it = item.find("kind");
        if (kind_it == item.end() || !kind_it->is_string()) {
            throw ValidationError(ctx + " needs a string field 'kind'");
        }
        const std::string kind = kind_it->get<std::string>();
        Element e;
        if (kind == "mirror") {
            e.kind = Element::Kind::Mirror;
        } else if (kind == "translation") {
            e.kind = Element::Kind::Translation;
        } else if (kind == "boundary") {
            e.kind = Element::Kind::Boundary;
        } else if (kind == "phase") {
            e.kind = Element::Kind::Phase;
        } else {
            throw ValidationError(ctx + " has unknown kind '" + kind + "'");
        }
        e.param = require_number(item, "param", ctx);
        spec.elements.push_back(e);
    }
    return spec;
}

nlohmann::ordered_json analyze(const SystemSpec& spec, const AnalysisOptions& options) {
    ordered_json report;
    report["input"] = input_json(spec);
    report["tolerances"] =
        ordered_json{{"det_tol", options.det_tol}, {"class_tol", options.class_tol}};
    ordered_json out = std::visit(
        Overloaded{
            [&](const ElementListSpec& s) {
                return analyze_elements(s, options, std::move(report));
            },
            [&](const CavitySpec& s) { return analyze_cavity(s, options, std::move(report)); },
            [&](const LayerCycleSpec& s) {
                return analyze_multilayer(s, options, std::move(report));
            },
            [&](const RawMatrixSpec& s) { return analyze_raw(s, options, std::move(report)); },
        },
        spec);
    scrub_negative_zero(out);
    return out;
}

nlohmann::ordered_json little_group_report(double eta, double theta, double mass,
                                           double tol) {
    const FourVector p = four_momentum_massive(mass, eta);
    const LorentzMatrix w = lift_wigner4(eta, theta);
    const FourVector moved = w * p;
    const FourVector diff{moved.x - p.x, moved.y - p.y, moved.z - p.z, moved.t - p.t};
    ordered_json report;
    report["input"] = ordered_json{
        {"kind", "lorentz_little_group"}, {"eta", eta}, {"theta", theta}, {"mass", mass}};
    report["tolerances"] = ordered_json{{"tol", tol}};
    report["momentum"] = vector_json(p);
    report["transformed"] = vector_json(moved);
    report["invariant"] = is_little_group_element(w, p, tol);
    report["residual"] = euclidean_norm(diff) / euclidean_norm(p);
    report["metric_residual"] = metric_residual(w);
    scrub_negative_zero(report);
    return report;
}

nlohmann::ordered_json gauge_report(double gamma, double p, double tol) {
    const FourVector momentum{0.0, 0.0, p, p};
    const LorentzMatrix g = gauge_limit_matrix(gamma);
    const FourVector moved = g * momentum;
    const FourVector diff{moved.x - momentum.x, moved.y - momentum.y, moved.z - momentum.z,
                          moved.t - momentum.t};
    const double norm = euclidean_norm(momentum);
    ordered_json report;
    report["input"] = ordered_json{{"kind", "lorentz_gauge"}, {"gamma", gamma}, {"p", p}};
    report["tolerances"] = ordered_json{{"tol", tol}};
    report["momentum"] = vector_json(momentum);
    report["transformed"] = vector_json(moved);
    report["invariant"] = is_little_group_element(g, momentum, tol);
    report["residual"] = norm > 0.0 ? euclidean_norm(diff) / norm : euclidean_norm(diff);
    report["transverse_action"] = vector_json(g * FourVector{1.0, 0.0, 0.0, 0.0});
    report["metric_residual"] = metric_residual(g);
    scrub_negative_zero(report);
    return report;
}

namespace {

void flatten(const ordered_json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (node.is_object()) {
        for (const auto& item : node.items()) {
            flatten(item.value(), path.empty() ? item.key() : path + "." + item.key(), rows);
        }
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            flatten(node.at(i), path + "[" + std::to_string(i) + "]", rows);
        }
    } else {
        rows.emplace_back(path, node.dump());
    }
}

}  // namespace

std::string render_text(const nlohmann::ordered_json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) {
        width = std::max(width, row.first.size());
    }
    std::string out;
    for (const auto& row : rows) {
        out += row.first;
        out.append(width - row.first.size(), ' ');
        out += " = ";
        out += row.second;
        out += '\n';
    }
    return out;
}

std::string render_report(const nlohmann::ordered_json& report, const std::string& format) {
    if (format == "json") {
        return report.dump(2) + "\n";
    }
    if (format == "text") {
        return render_text(report);
    }
    throw ValidationError("format must be 'json' or 'text'");
}

}  // namespace abcd
