#pragma once

#include <optional>
#include <string>

#include "sagnac/circuit_doc.hpp"

namespace sagnac {

enum class SweepParam { omega, amp_gain, area_lp1c, area_lp2q, alpha };

std::string sweep_param_name(SweepParam p);
std::optional<SweepParam> sweep_param_from(const std::string& name);

struct SweepConfig {
    SweepParam param = SweepParam::omega;
    double start = 0.0;
    double stop = 0.0;
    int count = 2;  // >= 2, start < stop
    bool log_scale = false;
};

/// One CSV row per sweep point; columns are the swept value, the exact SNR,
/// the applicable linearized SNR, the enhancement over the matched-photon
/// unit-gain baseline, the homodyne signal mean, and the noise variance.
std::string run_sweep(const CircuitDoc& doc, const SweepConfig& cfg);

/// Single-point evaluation of a document (same columns, no swept value).
std::string run_single(const CircuitDoc& doc);

}  // namespace sagnac
