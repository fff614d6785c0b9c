#include "sagnac/modes.hpp"

#include <stdexcept>

namespace sagnac {

std::string to_string(Path p) {
    return p == Path::a ? "a" : "b";
}

std::string to_string(Band b) {
    switch (b) {
        case Band::signal: return "s";
        case Band::idler: return "i";
        default: return "deg";
    }
}

std::string ModeLabel::name() const {
    std::string out = to_string(path);
    if (band != Band::degenerate) {
        out += "." + to_string(band);
    }
    return out;
}

bool operator==(const ModeLabel& l, const ModeLabel& r) {
    return l.path == r.path && l.band == r.band && l.stage == r.stage;
}

ModeRegister::ModeRegister(std::vector<ModeLabel> modes) : modes_(std::move(modes)) {
    if (modes_.size() != 2 && modes_.size() != 4) {
        throw std::invalid_argument("mode register size must be 2 or 4, got " +
                                    std::to_string(modes_.size()));
    }
    bool any_degenerate = false;
    bool any_band = false;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        (modes_[i].band == Band::degenerate ? any_degenerate : any_band) = true;
        for (std::size_t j = i + 1; j < modes_.size(); ++j) {
            if (modes_[i].same_mode(modes_[j])) {
                throw std::invalid_argument("duplicate mode " + modes_[i].name() +
                                            " in register");
            }
        }
    }
    if (any_degenerate && any_band) {
        throw std::invalid_argument(
            "degenerate band cannot coexist with signal/idler bands in one register");
    }
}

ModeRegister ModeRegister::degenerate_pair() {
    return ModeRegister({{Path::a, Band::degenerate}, {Path::b, Band::degenerate}});
}

ModeRegister ModeRegister::nondegenerate_quad() {
    return ModeRegister({{Path::a, Band::signal},
                         {Path::a, Band::idler},
                         {Path::b, Band::signal},
                         {Path::b, Band::idler}});
}

ModeRegister ModeRegister::single_path_pair() {
    return ModeRegister({{Path::a, Band::signal}, {Path::a, Band::idler}});
}

bool ModeRegister::contains(const ModeLabel& m) const {
    for (const auto& mode : modes_) {
        if (mode.same_mode(m)) {
            return true;
        }
    }
    return false;
}

std::size_t ModeRegister::index_of(const ModeLabel& m) const {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].same_mode(m)) {
            return i;
        }
    }
    throw std::invalid_argument("mode " + m.name() + " not in register");
}

bool ModeRegister::is_degenerate() const {
    return modes_.front().band == Band::degenerate;
}

bool operator==(const ModeRegister& l, const ModeRegister& r) {
    if (l.size() != r.size()) {
        return false;
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!l.mode(i).same_mode(r.mode(i))) {
            return false;
        }
    }
    return true;
}

}  // namespace sagnac
