#include "sagnac/presets.hpp"

#include <map>
#include <numbers>
#include <stdexcept>

namespace sagnac {

namespace {

constexpr double kEarthRate = 7.292e-5;  // rad/s
constexpr double kAlpha = 1000.0;

const ModeLabel kA{Path::a, Band::degenerate};
const ModeLabel kB{Path::b, Band::degenerate};
const ModeLabel kAs{Path::a, Band::signal};
const ModeLabel kAi{Path::a, Band::idler};
const ModeLabel kBs{Path::b, Band::signal};
const ModeLabel kBi{Path::b, Band::idler};

RotationScenario degenerate_scenario() {
    RotationScenario s;
    s.omega = kEarthRate;
    s.area_lp1c = 0.0;
    s.area_lp2q = 1.0;
    s.lambda_signal = 1.55e-6;
    s.lambda_idler = 1.55e-6;
    s.lambda_pump = 7.75e-7;
    s.process = PumpProcess::chi2;
    return s;
}

RotationScenario near_degenerate_scenario() {
    RotationScenario s = degenerate_scenario();
    s.lambda_signal = 1.5499e-6;
    s.lambda_idler = 1.5501e-6;
    s.lambda_pump = 0.0;  // derived from energy conservation where needed
    return s;
}

ElementStmt bs_stmt(ModeLabel m1, ModeLabel m2) {
    ElementStmt e;
    e.kind = ElementKind::beam_splitter;
    e.modes = {std::move(m1), std::move(m2)};
    return e;
}

ElementStmt phase_stmt(ModeLabel m, std::string symbol) {
    ElementStmt e;
    e.kind = ElementKind::phase_shift;
    e.modes = {std::move(m)};
    e.angle = AngleValue::named(std::move(symbol));
    return e;
}

ElementStmt amp_stmt(ElementKind kind, std::vector<ModeLabel> modes, double gain,
                     AngleValue pump) {
    ElementStmt e;
    e.kind = kind;
    e.modes = std::move(modes);
    e.amp_gain = gain;
    e.angle = std::move(pump);
    return e;
}

CircuitDoc classical_sagnac() {
    CircuitDoc doc;
    doc.register_modes = {kA, kB};
    doc.scenario = degenerate_scenario();
    doc.injection = Injection{InjectionScheme::degenerate_single, kAlpha};
    doc.elements = {
        bs_stmt(kA, kB),
        phase_stmt(kA, "loop_fwd"),
        phase_stmt(kB, "loop_bwd"),
        bs_stmt(kB, kA),
    };
    doc.measurement = MeasureStmt{kB, std::nullopt, 0.0};
    return doc;
}

CircuitDoc naive_sui() {
    CircuitDoc doc;
    doc.register_modes = {kAs, kAi};
    doc.scenario = degenerate_scenario();
    doc.injection = Injection{InjectionScheme::nondegenerate_single, kAlpha};
    doc.elements = {
        amp_stmt(ElementKind::npa, {kAs, kAi}, 1.25, AngleValue::literal(0.0)),
        phase_stmt(kAs, "sense_fwd"),
        phase_stmt(kAi, "sense_bwd"),
        amp_stmt(ElementKind::npa, {kAs, kAi}, 1.25,
                 AngleValue::literal(std::numbers::pi)),
    };
    doc.measurement = MeasureStmt{kAi, std::nullopt, 0.0};
    return doc;
}

CircuitDoc nested_degenerate() {
    CircuitDoc doc;
    doc.register_modes = {kA, kB};
    doc.scenario = degenerate_scenario();
    doc.injection = Injection{InjectionScheme::degenerate_single, kAlpha};
    doc.elements = {
        bs_stmt(kA, kB),
        phase_stmt(kA, "pre_fwd"),
        phase_stmt(kB, "pre_bwd"),
        amp_stmt(ElementKind::dpa, {kA}, 1.25, AngleValue::named("phi1")),
        amp_stmt(ElementKind::dpa, {kB}, 1.25, AngleValue::named("phi1p")),
        phase_stmt(kA, "sense_fwd"),
        phase_stmt(kB, "sense_bwd"),
        amp_stmt(ElementKind::dpa, {kA}, 1.25, AngleValue::named("phi2")),
        amp_stmt(ElementKind::dpa, {kB}, 1.25, AngleValue::named("phi2p")),
        phase_stmt(kA, "post_fwd"),
        phase_stmt(kB, "post_bwd"),
        bs_stmt(kB, kA),
    };
    doc.measurement = MeasureStmt{kB, std::nullopt, 0.0};
    return doc;
}

CircuitDoc nested_nondegenerate(bool dual) {
    CircuitDoc doc;
    doc.register_modes = {kAs, kAi, kBs, kBi};
    doc.scenario = near_degenerate_scenario();
    doc.injection = Injection{dual ? InjectionScheme::nondegenerate_dual
                                   : InjectionScheme::nondegenerate_single,
                              kAlpha};
    doc.elements = {
        bs_stmt(kAs, kBs),
        bs_stmt(kAi, kBi),
        phase_stmt(kAs, "pre_fwd"),
        phase_stmt(kAi, "pre_fwd"),
        phase_stmt(kBs, "pre_bwd"),
        phase_stmt(kBi, "pre_bwd"),
        amp_stmt(ElementKind::npa, {kAs, kAi}, 1.25, AngleValue::named("phi1")),
        amp_stmt(ElementKind::npa, {kBs, kBi}, 1.25, AngleValue::named("phi1p")),
        phase_stmt(kAs, "sense_fwd"),
        phase_stmt(kAi, "sense_fwd"),
        phase_stmt(kBs, "sense_bwd"),
        phase_stmt(kBi, "sense_bwd"),
        amp_stmt(ElementKind::npa, {kAs, kAi}, 1.25, AngleValue::named("phi2")),
        amp_stmt(ElementKind::npa, {kBs, kBi}, 1.25, AngleValue::named("phi2p")),
        phase_stmt(kAs, "post_fwd"),
        phase_stmt(kAi, "post_fwd"),
        phase_stmt(kBs, "post_bwd"),
        phase_stmt(kBi, "post_bwd"),
        bs_stmt(kBs, kAs),
        bs_stmt(kBi, kAi),
    };
    if (dual) {
        doc.measurement = MeasureStmt{kBs, kBi, 0.0};
    } else {
        doc.measurement = MeasureStmt{kBs, std::nullopt, 0.0};
    }
    return doc;
}

const std::map<std::string, CircuitDoc>& preset_map() {
    static const std::map<std::string, CircuitDoc> presets = [] {
        std::map<std::string, CircuitDoc> m;
        m.emplace("classical-sagnac", classical_sagnac());
        m.emplace("naive-sui", naive_sui());
        m.emplace("nested-degenerate", nested_degenerate());
        m.emplace("nested-nondegenerate-single", nested_nondegenerate(false));
        m.emplace("nested-nondegenerate-dual", nested_nondegenerate(true));
        return m;
    }();
    return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, doc] : preset_map()) {
        names.push_back(name);
    }
    return names;
}

const CircuitDoc& builtin_preset(const std::string& name) {
    const auto it = preset_map().find(name);
    if (it == preset_map().end()) {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return it->second;
}

std::string preset_text(const std::string& name) {
    return serialize(builtin_preset(name));
}

}  // namespace sagnac
