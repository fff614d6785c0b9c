#include "sagnac/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sagnac/theory.hpp"

namespace sagnac {

std::string sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::omega: return "omega";
        case SweepParam::amp_gain: return "G";
        case SweepParam::area_lp1c: return "area_lp1c";
        case SweepParam::area_lp2q: return "area_lp2q";
        case SweepParam::alpha: return "alpha";
    }
    return "?";
}

std::optional<SweepParam> sweep_param_from(const std::string& name) {
    if (name == "omega") return SweepParam::omega;
    if (name == "G") return SweepParam::amp_gain;
    if (name == "area_lp1c") return SweepParam::area_lp1c;
    if (name == "area_lp2q") return SweepParam::area_lp2q;
    if (name == "alpha") return SweepParam::alpha;
    return std::nullopt;
}

namespace {

bool has_amplifier(const CircuitDoc& doc) {
    for (const auto& e : doc.elements) {
        if (e.kind == ElementKind::dpa || e.kind == ElementKind::npa) {
            return true;
        }
    }
    return false;
}

CircuitDoc substitute(const CircuitDoc& doc, SweepParam param, double value) {
    CircuitDoc out = doc;
    switch (param) {
        case SweepParam::omega:
            out.scenario->omega = value;
            break;
        case SweepParam::area_lp1c:
            out.scenario->area_lp1c = value;
            break;
        case SweepParam::area_lp2q:
            out.scenario->area_lp2q = value;
            break;
        case SweepParam::alpha:
            out.injection->alpha = cxd(value, 0.0);
            break;
        case SweepParam::amp_gain:
            for (auto& e : out.elements) {
                if (e.kind == ElementKind::dpa || e.kind == ElementKind::npa) {
                    e.amp_gain = value;
                }
            }
            break;
    }
    return out;
}

CircuitDoc unit_gain_copy(const CircuitDoc& doc) {
    CircuitDoc out = doc;
    for (auto& e : out.elements) {
        if (e.kind == ElementKind::dpa || e.kind == ElementKind::npa) {
            e.amp_gain = 1.0;
        }
    }
    return out;
}

/// The classical benchmark measures only ports that carry classical light:
/// under single injection the baseline idler is dark, so its combined
/// measurement collapses to the signal-band port.
HomodyneSetting baseline_setting(const HomodyneSetting& setting,
                                 const std::optional<Injection>& injection) {
    if (setting.combine != CombineMode::sum_of_two || !injection ||
        injection->scheme == InjectionScheme::nondegenerate_dual) {
        return setting;
    }
    HomodyneSetting restricted = setting;
    restricted.combine = CombineMode::single;
    if (restricted.mode.band != Band::signal && restricted.second &&
        restricted.second->band == Band::signal) {
        restricted.mode = *restricted.second;
    }
    restricted.second.reset();
    return restricted;
}

bool is_folded_pair(const CircuitDoc& doc) {
    return doc.register_modes.size() == 2 &&
           doc.register_modes.front().band != Band::degenerate;
}

double linearized_snr(const CircuitDoc& doc, const BuiltSimulation& built) {
    const double alpha_mag = built.injection ? std::abs(built.injection->alpha) : 0.0;
    if (is_folded_pair(doc)) {
        return 0.0;  // folded interferometer dark port carries no rotation signal
    }
    const GainPair gain = built.gain.value_or(GainPair(1.0, 0.0));
    if (doc.register_modes.size() == 2) {
        return snr_degenerate(gain, built.budget, alpha_mag).snr;
    }
    if (built.injection && built.injection->scheme == InjectionScheme::nondegenerate_dual) {
        return snr_nondegenerate_dual(gain, built.budget, alpha_mag).snr;
    }
    return snr_nondegenerate_single(gain, built.budget, alpha_mag).snr;
}

void append_row(std::ostringstream& out, const CircuitDoc& doc,
                const std::optional<double>& swept_value) {
    const BuiltSimulation built = build_simulation(doc);
    const BuiltSimulation base = build_simulation(unit_gain_copy(doc));
    const SnrReport report =
        snr_exact(built.circuit, built.input, built.setting, base.circuit,
                  baseline_setting(built.setting, built.injection));
    const double lin = linearized_snr(doc, built);

    if (swept_value) {
        out << format_double(*swept_value) << ',';
    }
    out << format_double(report.snr) << ',' << format_double(lin) << ','
        << format_double(report.enhancement) << ',' << format_double(report.mean) << ','
        << format_double(report.variance) << '\n';
}

}  // namespace

std::string run_sweep(const CircuitDoc& doc, const SweepConfig& cfg) {
    if (cfg.count < 2) {
        throw std::invalid_argument("sweep needs at least 2 points");
    }
    if (!(cfg.start < cfg.stop)) {
        throw std::invalid_argument("sweep start must be below stop");
    }
    if (cfg.log_scale && cfg.start <= 0.0) {
        throw std::invalid_argument("log-scale sweep needs a positive start");
    }
    switch (cfg.param) {
        case SweepParam::omega:
        case SweepParam::area_lp1c:
        case SweepParam::area_lp2q:
            if (!doc.scenario) {
                throw std::invalid_argument("sweep parameter '" +
                                            sweep_param_name(cfg.param) +
                                            "' needs a scenario block");
            }
            break;
        case SweepParam::alpha:
            if (!doc.injection) {
                throw std::invalid_argument("sweep parameter 'alpha' needs an inject block");
            }
            break;
        case SweepParam::amp_gain:
            if (!has_amplifier(doc)) {
                throw std::invalid_argument(
                    "sweep parameter 'G' needs at least one amplifier element");
            }
            break;
    }

    std::ostringstream out;
    out << sweep_param_name(cfg.param)
        << ",exact_snr,linearized_snr,enhancement,signal_mean,noise_variance\n";
    for (int i = 0; i < cfg.count; ++i) {
        const double t = static_cast<double>(i) / (cfg.count - 1);
        const double value = cfg.log_scale
                                 ? cfg.start * std::pow(cfg.stop / cfg.start, t)
                                 : cfg.start + (cfg.stop - cfg.start) * t;
        append_row(out, substitute(doc, cfg.param, value), value);
    }
    return out.str();
}

std::string run_single(const CircuitDoc& doc) {
    std::ostringstream out;
    out << "exact_snr,linearized_snr,enhancement,signal_mean,noise_variance\n";
    append_row(out, doc, std::nullopt);
    return out.str();
}

}  // namespace sagnac
