#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "sagnac/circuit_doc.hpp"
#include "sagnac/presets.hpp"
#include "sagnac/sweep.hpp"

namespace {

sagnac::SweepConfig parse_sweep_spec(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument("sweep spec must look like param=start:stop:count[:log]");
    }
    const std::string param_name = spec.substr(0, eq);
    const auto param = sagnac::sweep_param_from(param_name);
    if (!param) {
        throw std::invalid_argument("unknown sweep parameter '" + param_name +
                                    "' (try omega, G, area_lp1c, area_lp2q, alpha)");
    }

    std::vector<std::string> parts;
    std::stringstream rest(spec.substr(eq + 1));
    std::string piece;
    while (std::getline(rest, piece, ':')) {
        parts.push_back(piece);
    }
    if (parts.size() < 3 || parts.size() > 4) {
        throw std::invalid_argument("sweep spec must look like param=start:stop:count[:log]");
    }

    sagnac::SweepConfig cfg;
    cfg.param = *param;
    try {
        cfg.start = std::stod(parts[0]);
        cfg.stop = std::stod(parts[1]);
        cfg.count = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number in sweep spec '" + spec + "'");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log") {
            throw std::invalid_argument("sweep spec suffix must be 'log'");
        }
        cfg.log_scale = true;
    }
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian-state simulator for amplifier-nested Sagnac interferometers"};
    std::string circ_path;
    std::string preset_name;
    std::string sweep_spec;
    std::string out_path;
    bool list_presets = false;

    app.add_option("file", circ_path, "circuit description file (.circ)");
    app.add_option("--preset", preset_name, "run a built-in preset instead of a file");
    app.add_flag("--list-presets", list_presets, "print preset names and exit");
    app.add_option("--sweep", sweep_spec, "sweep spec: param=start:stop:count[:log]");
    app.add_option("--out", out_path, "write CSV output to this file instead of stdout");
    CLI11_PARSE(app, argc, argv);

    try {
        if (list_presets) {
            for (const auto& name : sagnac::preset_names()) {
                std::cout << name << "\n";
            }
            return 0;
        }
        if (circ_path.empty() == preset_name.empty()) {
            throw std::invalid_argument("give either a .circ file or --preset (one of them)");
        }

        const sagnac::CircuitDoc doc = preset_name.empty()
                                           ? sagnac::parse_circuit(read_file(circ_path))
                                           : sagnac::builtin_preset(preset_name);
        const std::string csv = sweep_spec.empty()
                                    ? sagnac::run_single(doc)
                                    : sagnac::run_sweep(doc, parse_sweep_spec(sweep_spec));

        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                throw std::invalid_argument("cannot write '" + out_path + "'");
            }
            out << csv;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
