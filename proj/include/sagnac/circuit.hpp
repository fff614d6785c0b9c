#pragma once

#include <string>
#include <vector>

#include "sagnac/gaussian.hpp"
#include "sagnac/modes.hpp"

namespace sagnac {

struct CircuitElement {
    std::string name;
    BogoliubovTransform op;
};

/// Ordered sequence of optical elements over one mode register.
class Circuit {
  public:
    explicit Circuit(ModeRegister reg) : reg_(std::move(reg)) {}

    const ModeRegister& reg() const { return reg_; }
    const std::vector<CircuitElement>& elements() const { return elements_; }

    void push(std::string name, BogoliubovTransform op);

    BogoliubovTransform total() const;
    GaussianState propagate(const GaussianState& in) const;
    GaussianState propagate_prefix(const GaussianState& in, std::size_t count) const;

    /// Elements [0, sensing_prefix) act before the fields enter the sensing loop.
    std::size_t sensing_prefix = 0;

  private:
    ModeRegister reg_;
    std::vector<CircuitElement> elements_;
};

}  // namespace sagnac
