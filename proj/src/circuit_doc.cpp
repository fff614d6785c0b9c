#include "sagnac/circuit_doc.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace sagnac {

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::no_register: return "no register declared";
        case ParseErrorKind::duplicate_register: return "duplicate register declaration";
        case ParseErrorKind::unknown_keyword: return "unknown keyword";
        case ParseErrorKind::undeclared_mode: return "undeclared mode";
        case ParseErrorKind::bad_mode_token: return "malformed mode token";
        case ParseErrorKind::malformed_number: return "malformed number";
        case ParseErrorKind::missing_argument: return "missing argument";
        case ParseErrorKind::unknown_argument: return "unknown argument";
        case ParseErrorKind::duplicate_measurement: return "duplicate measurement";
        case ParseErrorKind::duplicate_scenario: return "duplicate scenario";
        case ParseErrorKind::duplicate_injection: return "duplicate injection";
        case ParseErrorKind::bad_value: return "bad value";
    }
    return "parse error";
}

namespace {

std::string error_message(ParseErrorKind kind, int line, int column, const std::string& token,
                          const std::string& detail) {
    std::ostringstream msg;
    msg << "line " << line << ", col " << column << ": " << to_string(kind);
    if (!token.empty()) {
        msg << " '" << token << "'";
    }
    if (!detail.empty()) {
        msg << " (" << detail << ")";
    }
    return msg.str();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int column, std::string token,
                       const std::string& detail)
    : std::runtime_error(error_message(kind, line, column, token, detail)),
      kind_(kind),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

bool operator==(const AngleValue& l, const AngleValue& r) {
    return l.symbol == r.symbol && l.number == r.number;
}

bool operator==(const ElementStmt& l, const ElementStmt& r) {
    return l.kind == r.kind && l.modes == r.modes && l.angle == r.angle &&
           l.amp_gain == r.amp_gain;
}

bool operator==(const MeasureStmt& l, const MeasureStmt& r) {
    return l.mode == r.mode && l.second == r.second && l.lo_angle == r.lo_angle;
}

namespace {

bool scenario_equal(const RotationScenario& l, const RotationScenario& r) {
    return l.omega == r.omega && l.area_lp1c == r.area_lp1c && l.area_lp2q == r.area_lp2q &&
           l.segment_split == r.segment_split && l.lambda_signal == r.lambda_signal &&
           l.lambda_idler == r.lambda_idler && l.lambda_pump == r.lambda_pump &&
           l.light_speed == r.light_speed && l.process == r.process;
}

bool injection_equal(const Injection& l, const Injection& r) {
    return l.scheme == r.scheme && l.alpha == r.alpha;
}

}  // namespace

bool operator==(const CircuitDoc& l, const CircuitDoc& r) {
    if (!(l.register_modes == r.register_modes && l.elements == r.elements &&
          l.measurement == r.measurement)) {
        return false;
    }
    if (l.scenario.has_value() != r.scenario.has_value() ||
        l.injection.has_value() != r.injection.has_value()) {
        return false;
    }
    if (l.scenario && !scenario_equal(*l.scenario, *r.scenario)) {
        return false;
    }
    if (l.injection && !injection_equal(*l.injection, *r.injection)) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back({std::string(line.substr(start, i - start)),
                          static_cast<int>(start) + 1});
    }
    return tokens;
}

double parse_number(const Token& tok, int line, std::string_view text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError(ParseErrorKind::malformed_number, line, tok.column, tok.text);
    }
    return value;
}

ModeLabel parse_mode(const Token& tok, int line) {
    const std::string& t = tok.text;
    ModeLabel m;
    if (t == "a" || t == "b") {
        m.path = t == "a" ? Path::a : Path::b;
        m.band = Band::degenerate;
        return m;
    }
    if (t.size() == 3 && (t[0] == 'a' || t[0] == 'b') && t[1] == '.' &&
        (t[2] == 's' || t[2] == 'i')) {
        m.path = t[0] == 'a' ? Path::a : Path::b;
        m.band = t[2] == 's' ? Band::signal : Band::idler;
        return m;
    }
    throw ParseError(ParseErrorKind::bad_mode_token, line, tok.column, tok.text);
}

struct Statement {
    std::vector<Token> positional;
    std::vector<std::pair<std::string, Token>> keyed;  // key -> value token
    int line = 0;

    const Token* find(const std::string& key) const {
        for (const auto& [k, v] : keyed) {
            if (k == key) {
                return &v;
            }
        }
        return nullptr;
    }
};

Statement split_statement(const std::vector<Token>& tokens, int line) {
    Statement st;
    st.line = line;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto eq = tokens[i].text.find('=');
        if (eq == std::string::npos) {
            st.positional.push_back(tokens[i]);
        } else {
            Token value{tokens[i].text.substr(eq + 1),
                        tokens[i].column + static_cast<int>(eq) + 1};
            st.keyed.emplace_back(tokens[i].text.substr(0, eq), value);
        }
    }
    return st;
}

const std::vector<std::string> kPhaseSymbols = {
    "pre_fwd", "pre_bwd", "sense_fwd", "sense_bwd", "post_fwd", "post_bwd",
    "loop_fwd", "loop_bwd"};
const std::vector<std::string> kPumpSymbols = {"phi1", "phi1p", "phi2", "phi2p"};

AngleValue parse_angle(const Token& tok, int line, const std::vector<std::string>& symbols) {
    if (std::find(symbols.begin(), symbols.end(), tok.text) != symbols.end()) {
        return AngleValue::named(tok.text);
    }
    return AngleValue::literal(parse_number(tok, line, tok.text));
}

class Parser {
  public:
    CircuitDoc run(std::string_view text) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            const std::string_view line =
                text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            ++line_no;
            handle_line(line, line_no);
            if (nl == std::string_view::npos) {
                break;
            }
            pos = nl + 1;
        }
        if (doc_.register_modes.empty()) {
            throw ParseError(ParseErrorKind::no_register, line_no, 1, "");
        }
        return std::move(doc_);
    }

  private:
    CircuitDoc doc_;

    void handle_line(std::string_view line, int line_no) {
        const std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) {
            return;
        }
        const Token& kw = tokens.front();
        const Statement st = split_statement(tokens, line_no);
        if (kw.text == "register") {
            parse_register(st, kw);
        } else if (kw.text == "bs") {
            parse_element(st, kw, ElementKind::beam_splitter, 2);
        } else if (kw.text == "phase") {
            parse_element(st, kw, ElementKind::phase_shift, 1);
        } else if (kw.text == "dpa") {
            parse_element(st, kw, ElementKind::dpa, 1);
        } else if (kw.text == "npa") {
            parse_element(st, kw, ElementKind::npa, 2);
        } else if (kw.text == "scenario") {
            parse_scenario(st, kw);
        } else if (kw.text == "inject") {
            parse_inject(st, kw);
        } else if (kw.text == "measure") {
            parse_measure(st, kw);
        } else {
            throw ParseError(ParseErrorKind::unknown_keyword, line_no, kw.column, kw.text);
        }
    }

    void require_no_extra_keys(const Statement& st, std::initializer_list<const char*> known) {
        for (const auto& [key, value] : st.keyed) {
            if (std::find_if(known.begin(), known.end(),
                             [&](const char* k) { return key == k; }) == known.end()) {
                throw ParseError(ParseErrorKind::unknown_argument, st.line, value.column, key);
            }
        }
    }

    ModeLabel declared_mode(const Token& tok, int line) {
        const ModeLabel m = parse_mode(tok, line);
        for (const auto& declared : doc_.register_modes) {
            if (declared.same_mode(m)) {
                return m;
            }
        }
        if (doc_.register_modes.empty()) {
            throw ParseError(ParseErrorKind::no_register, line, tok.column, tok.text);
        }
        throw ParseError(ParseErrorKind::undeclared_mode, line, tok.column, tok.text);
    }

    void parse_register(const Statement& st, const Token& kw) {
        if (!doc_.register_modes.empty()) {
            throw ParseError(ParseErrorKind::duplicate_register, st.line, kw.column, kw.text);
        }
        require_no_extra_keys(st, {});
        if (st.positional.empty()) {
            throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                             "register needs mode names");
        }
        std::vector<ModeLabel> modes;
        for (const auto& tok : st.positional) {
            modes.push_back(parse_mode(tok, st.line));
        }
        try {
            ModeRegister check(modes);  // validates size and uniqueness
        } catch (const std::invalid_argument& e) {
            throw ParseError(ParseErrorKind::bad_value, st.line, kw.column, kw.text, e.what());
        }
        doc_.register_modes = std::move(modes);
    }

    void parse_element(const Statement& st, const Token& kw, ElementKind kind,
                       std::size_t n_modes) {
        ElementStmt elem;
        elem.kind = kind;
        if (st.positional.size() != n_modes) {
            throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                             "expected " + std::to_string(n_modes) + " mode name(s)");
        }
        for (const auto& tok : st.positional) {
            elem.modes.push_back(declared_mode(tok, st.line));
        }
        if (kind == ElementKind::beam_splitter) {
            require_no_extra_keys(st, {});
        } else if (kind == ElementKind::phase_shift) {
            require_no_extra_keys(st, {"theta"});
            const Token* theta = st.find("theta");
            if (theta == nullptr) {
                throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                                 "phase needs theta=");
            }
            elem.angle = parse_angle(*theta, st.line, kPhaseSymbols);
        } else {
            require_no_extra_keys(st, {"G", "pump"});
            const Token* gain = st.find("G");
            if (gain == nullptr) {
                throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                                 "amplifier needs G=");
            }
            elem.amp_gain = parse_number(*gain, st.line, gain->text);
            if (elem.amp_gain < 1.0) {
                throw ParseError(ParseErrorKind::bad_value, st.line, gain->column, gain->text,
                                 "amplitude gain must be >= 1");
            }
            if (const Token* pump = st.find("pump")) {
                elem.angle = parse_angle(*pump, st.line, kPumpSymbols);
            }
        }
        doc_.elements.push_back(std::move(elem));
    }

    void parse_scenario(const Statement& st, const Token& kw) {
        if (doc_.scenario) {
            throw ParseError(ParseErrorKind::duplicate_scenario, st.line, kw.column, kw.text);
        }
        require_no_extra_keys(st, {"omega", "area_lp1c", "area_lp2q", "lambda_s", "lambda_i",
                                   "lambda_p", "c", "split", "process"});
        if (!st.positional.empty()) {
            throw ParseError(ParseErrorKind::unknown_argument, st.line,
                             st.positional.front().column, st.positional.front().text);
        }
        RotationScenario scen;
        const auto number = [&](const char* key, double fallback) {
            const Token* tok = st.find(key);
            return tok == nullptr ? fallback : parse_number(*tok, st.line, tok->text);
        };
        scen.omega = number("omega", 0.0);
        scen.area_lp1c = number("area_lp1c", 0.0);
        scen.area_lp2q = number("area_lp2q", 0.0);
        scen.lambda_signal = number("lambda_s", 0.0);
        scen.lambda_idler = number("lambda_i", 0.0);
        scen.lambda_pump = number("lambda_p", 0.0);
        scen.light_speed = number("c", 299792458.0);
        if (const Token* split = st.find("split")) {
            std::array<double, 3> fractions{};
            std::string_view rest = split->text;
            for (int k = 0; k < 3; ++k) {
                const std::size_t comma = rest.find(',');
                const bool last = k == 2;
                if ((comma == std::string_view::npos) != last) {
                    throw ParseError(ParseErrorKind::bad_value, st.line, split->column,
                                     split->text, "split needs three comma-separated fractions");
                }
                fractions[k] = parse_number(*split, st.line,
                                            last ? rest : rest.substr(0, comma));
                if (!last) {
                    rest = rest.substr(comma + 1);
                }
            }
            scen.segment_split = fractions;
        }
        if (const Token* process = st.find("process")) {
            if (process->text == "chi2") {
                scen.process = PumpProcess::chi2;
            } else if (process->text == "chi3") {
                scen.process = PumpProcess::chi3;
            } else {
                throw ParseError(ParseErrorKind::bad_value, st.line, process->column,
                                 process->text, "process must be chi2 or chi3");
            }
        }
        doc_.scenario = scen;
    }

    void parse_inject(const Statement& st, const Token& kw) {
        if (doc_.injection) {
            throw ParseError(ParseErrorKind::duplicate_injection, st.line, kw.column, kw.text);
        }
        require_no_extra_keys(st, {"scheme", "alpha", "alpha_im"});
        const Token* scheme = st.find("scheme");
        if (scheme == nullptr) {
            throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                             "inject needs scheme=");
        }
        Injection inj;
        if (scheme->text == "degenerate_single") {
            inj.scheme = InjectionScheme::degenerate_single;
        } else if (scheme->text == "nondegenerate_single") {
            inj.scheme = InjectionScheme::nondegenerate_single;
        } else if (scheme->text == "nondegenerate_dual") {
            inj.scheme = InjectionScheme::nondegenerate_dual;
        } else {
            throw ParseError(ParseErrorKind::bad_value, st.line, scheme->column, scheme->text,
                             "unknown injection scheme");
        }
        double re = 0.0;
        double im = 0.0;
        if (const Token* alpha = st.find("alpha")) {
            re = parse_number(*alpha, st.line, alpha->text);
        }
        if (const Token* alpha_im = st.find("alpha_im")) {
            im = parse_number(*alpha_im, st.line, alpha_im->text);
        }
        inj.alpha = cxd(re, im);
        doc_.injection = inj;
    }

    void parse_measure(const Statement& st, const Token& kw) {
        if (doc_.measurement) {
            throw ParseError(ParseErrorKind::duplicate_measurement, st.line, kw.column, kw.text);
        }
        require_no_extra_keys(st, {"angle", "combine"});
        if (st.positional.empty() || st.positional.size() > 2) {
            throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                             "measure needs one or two mode names");
        }
        MeasureStmt meas;
        meas.mode = declared_mode(st.positional[0], st.line);
        if (st.positional.size() == 2) {
            meas.second = declared_mode(st.positional[1], st.line);
        }
        if (const Token* angle = st.find("angle")) {
            meas.lo_angle = parse_number(*angle, st.line, angle->text);
        }
        if (const Token* combine = st.find("combine")) {
            if (combine->text != "sum") {
                throw ParseError(ParseErrorKind::bad_value, st.line, combine->column,
                                 combine->text, "combine must be 'sum'");
            }
            if (!meas.second) {
                throw ParseError(ParseErrorKind::missing_argument, st.line, kw.column, kw.text,
                                 "combine=sum needs two modes");
            }
        }
        doc_.measurement = std::move(meas);
    }
};

}  // namespace

CircuitDoc parse_circuit(std::string_view text) {
    return Parser{}.run(text);
}

// ---------------------------------------------------------------------------
// serialization

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::string angle_text(const AngleValue& v) {
    return v.symbol ? *v.symbol : format_double(v.number);
}

}  // namespace

std::string serialize(const CircuitDoc& doc) {
    std::ostringstream out;
    out << "register";
    for (const auto& m : doc.register_modes) {
        out << ' ' << m.name();
    }
    out << '\n';
    if (doc.scenario) {
        const RotationScenario& s = *doc.scenario;
        out << "scenario omega=" << format_double(s.omega)
            << " area_lp1c=" << format_double(s.area_lp1c)
            << " area_lp2q=" << format_double(s.area_lp2q)
            << " lambda_s=" << format_double(s.lambda_signal)
            << " lambda_i=" << format_double(s.lambda_idler);
        if (s.lambda_pump > 0.0) {
            out << " lambda_p=" << format_double(s.lambda_pump);
        }
        out << " c=" << format_double(s.light_speed) << " split="
            << format_double(s.segment_split[0]) << ',' << format_double(s.segment_split[1])
            << ',' << format_double(s.segment_split[2])
            << " process=" << (s.process == PumpProcess::chi2 ? "chi2" : "chi3") << '\n';
    }
    if (doc.injection) {
        const Injection& inj = *doc.injection;
        const char* scheme = inj.scheme == InjectionScheme::degenerate_single
                                 ? "degenerate_single"
                                 : inj.scheme == InjectionScheme::nondegenerate_single
                                       ? "nondegenerate_single"
                                       : "nondegenerate_dual";
        out << "inject scheme=" << scheme << " alpha=" << format_double(inj.alpha.real());
        if (inj.alpha.imag() != 0.0) {
            out << " alpha_im=" << format_double(inj.alpha.imag());
        }
        out << '\n';
    }
    for (const auto& e : doc.elements) {
        switch (e.kind) {
            case ElementKind::beam_splitter:
                out << "bs " << e.modes[0].name() << ' ' << e.modes[1].name() << '\n';
                break;
            case ElementKind::phase_shift:
                out << "phase " << e.modes[0].name() << " theta=" << angle_text(e.angle) << '\n';
                break;
            case ElementKind::dpa:
                out << "dpa " << e.modes[0].name() << " G=" << format_double(e.amp_gain)
                    << " pump=" << angle_text(e.angle) << '\n';
                break;
            case ElementKind::npa:
                out << "npa " << e.modes[0].name() << ' ' << e.modes[1].name()
                    << " G=" << format_double(e.amp_gain) << " pump=" << angle_text(e.angle)
                    << '\n';
                break;
        }
    }
    if (doc.measurement) {
        const MeasureStmt& m = *doc.measurement;
        out << "measure " << m.mode.name();
        if (m.second) {
            out << ' ' << m.second->name();
        }
        out << " angle=" << format_double(m.lo_angle);
        if (m.second) {
            out << " combine=sum";
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// building

namespace {

double resolve_phase(const AngleValue& v, const PhaseBudget& budget, Band band,
                     bool have_scenario) {
    if (!v.symbol) {
        return v.number;
    }
    if (!have_scenario) {
        throw std::invalid_argument("phase symbol '" + *v.symbol +
                                    "' needs a scenario block to resolve");
    }
    const BandPhases& ph = budget.band(band);
    const std::string& s = *v.symbol;
    if (s == "pre_fwd") return ph.pre / 2.0;
    if (s == "pre_bwd") return -ph.post / 2.0;
    if (s == "sense_fwd") return ph.sensing / 2.0;
    if (s == "sense_bwd") return -ph.sensing / 2.0;
    if (s == "post_fwd") return ph.post / 2.0;
    if (s == "post_bwd") return -ph.pre / 2.0;
    if (s == "loop_fwd") return (ph.pre + ph.sensing + ph.post) / 2.0;
    if (s == "loop_bwd") return -(ph.pre + ph.sensing + ph.post) / 2.0;
    throw std::invalid_argument("unknown phase symbol '" + s + "'");
}

double resolve_pump(const AngleValue& v, const PhaseBudget& budget, bool have_scenario) {
    if (!v.symbol) {
        return v.number;
    }
    if (!have_scenario) {
        throw std::invalid_argument("pump symbol '" + *v.symbol +
                                    "' needs a scenario block to resolve");
    }
    const PumpPhase pump = PumpPhase::dark_fringe(budget.delta_phi2() / 2.0);
    const std::string& s = *v.symbol;
    if (s == "phi1") return pump.phi1;
    if (s == "phi1p") return pump.phi1_prime;
    if (s == "phi2") return pump.phi2;
    if (s == "phi2p") return pump.phi2_prime;
    throw std::invalid_argument("unknown pump symbol '" + s + "'");
}

std::size_t detect_sensing_prefix(const std::vector<ElementStmt>& elements) {
    const auto is_amp = [](const ElementStmt& e) {
        return e.kind == ElementKind::dpa || e.kind == ElementKind::npa;
    };
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (is_amp(elements[i])) {
            std::size_t j = i;
            while (j < elements.size() && is_amp(elements[j])) {
                ++j;
            }
            return j;
        }
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].kind == ElementKind::beam_splitter) {
            return i + 1;
        }
    }
    return 0;
}

}  // namespace

BuiltSimulation build_simulation(const CircuitDoc& doc) {
    if (doc.register_modes.empty()) {
        throw std::invalid_argument("document has no register");
    }
    if (!doc.measurement) {
        throw std::invalid_argument("document has no measurement block");
    }
    const ModeRegister reg(doc.register_modes);
    const bool have_scenario = doc.scenario.has_value();
    const PhaseBudget budget = have_scenario ? phase_budget(*doc.scenario) : PhaseBudget{};

    Circuit circuit(reg);
    std::optional<GainPair> gain;
    for (const auto& e : doc.elements) {
        switch (e.kind) {
            case ElementKind::beam_splitter:
                circuit.push("bs", beam_splitter(reg, e.modes[0], e.modes[1]));
                break;
            case ElementKind::phase_shift:
                circuit.push("phase", phase_shift(reg, e.modes[0],
                                                  resolve_phase(e.angle, budget,
                                                                e.modes[0].band, have_scenario)));
                break;
            case ElementKind::dpa: {
                const GainPair pair = GainPair::from_amp_gain(e.amp_gain);
                if (!gain) {
                    gain = pair;
                }
                circuit.push("dpa", dpa(reg, e.modes[0], pair,
                                        resolve_pump(e.angle, budget, have_scenario)));
                break;
            }
            case ElementKind::npa: {
                const GainPair pair = GainPair::from_amp_gain(e.amp_gain);
                if (!gain) {
                    gain = pair;
                }
                circuit.push("npa", npa(reg, e.modes[0], e.modes[1], pair,
                                        resolve_pump(e.angle, budget, have_scenario)));
                break;
            }
        }
    }
    circuit.sensing_prefix = detect_sensing_prefix(doc.elements);

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.size()));
    if (doc.injection) {
        const Injection& inj = *doc.injection;
        if (inj.scheme == InjectionScheme::degenerate_single) {
            if (!reg.is_degenerate()) {
                throw std::invalid_argument(
                    "degenerate_single injection needs a degenerate register");
            }
            amps(static_cast<Eigen::Index>(reg.index_of({Path::a, Band::degenerate}))) =
                inj.alpha;
        } else {
            if (reg.is_degenerate()) {
                throw std::invalid_argument(
                    "nondegenerate injection needs a signal/idler register");
            }
            amps(static_cast<Eigen::Index>(reg.index_of({Path::a, Band::signal}))) = inj.alpha;
            if (inj.scheme == InjectionScheme::nondegenerate_dual) {
                amps(static_cast<Eigen::Index>(reg.index_of({Path::a, Band::idler}))) =
                    inj.alpha;
            }
        }
    }

    HomodyneSetting setting;
    setting.mode = doc.measurement->mode;
    setting.lo_angle = doc.measurement->lo_angle;
    if (doc.measurement->second) {
        setting.second = doc.measurement->second;
        setting.combine = CombineMode::sum_of_two;
    }

    return {std::move(circuit), coherent_state(reg, amps), std::move(setting), budget, gain,
            doc.injection};
}

}  // namespace sagnac
