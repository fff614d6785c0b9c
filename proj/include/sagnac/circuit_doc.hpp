#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sagnac/measurement.hpp"
#include "sagnac/scenario.hpp"

namespace sagnac {

enum class ParseErrorKind {
    no_register,
    duplicate_register,
    unknown_keyword,
    undeclared_mode,
    bad_mode_token,
    malformed_number,
    missing_argument,
    unknown_argument,
    duplicate_measurement,
    duplicate_scenario,
    duplicate_injection,
    bad_value,
};

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, int line, int column, std::string token,
               const std::string& detail = "");

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

  private:
    ParseErrorKind kind_;
    int line_;
    int column_;
    std::string token_;
};

/// Angle argument: either a numeric literal (radians) or a named slot of the
/// rotation operating point, resolved against the scenario's phase budget.
struct AngleValue {
    std::optional<std::string> symbol{};
    double number = 0.0;

    static AngleValue literal(double v) { return {std::nullopt, v}; }
    static AngleValue named(std::string s) { return {std::move(s), 0.0}; }
};

bool operator==(const AngleValue& l, const AngleValue& r);

enum class ElementKind { beam_splitter, phase_shift, dpa, npa };

struct ElementStmt {
    ElementKind kind = ElementKind::beam_splitter;
    std::vector<ModeLabel> modes;  // 2 for bs/npa, 1 for phase/dpa
    AngleValue angle{};            // theta for phase, pump phase for dpa/npa
    double amp_gain = 1.0;         // dpa/npa only
};

bool operator==(const ElementStmt& l, const ElementStmt& r);

struct MeasureStmt {
    ModeLabel mode;
    std::optional<ModeLabel> second{};
    double lo_angle = 0.0;
};

bool operator==(const MeasureStmt& l, const MeasureStmt& r);

struct CircuitDoc {
    std::vector<ModeLabel> register_modes;
    std::optional<RotationScenario> scenario{};
    std::optional<Injection> injection{};
    std::vector<ElementStmt> elements;
    std::optional<MeasureStmt> measurement{};
};

bool operator==(const CircuitDoc& l, const CircuitDoc& r);

CircuitDoc parse_circuit(std::string_view text);
std::string serialize(const CircuitDoc& doc);

/// A document resolved into a runnable circuit at its operating point.
struct BuiltSimulation {
    Circuit circuit;
    GaussianState input;
    HomodyneSetting setting;
    PhaseBudget budget;
    std::optional<GainPair> gain;
    std::optional<Injection> injection;
};

BuiltSimulation build_simulation(const CircuitDoc& doc);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace sagnac
