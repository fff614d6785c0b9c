#include "sagnac/circuit.hpp"

#include <stdexcept>

namespace sagnac {

void Circuit::push(std::string name, BogoliubovTransform op) {
    if (op.size() != reg_.size()) {
        throw std::invalid_argument("element '" + name + "' does not match register size");
    }
    elements_.push_back({std::move(name), std::move(op)});
}

BogoliubovTransform Circuit::total() const {
    BogoliubovTransform acc = BogoliubovTransform::identity(reg_.size());
    for (const auto& e : elements_) {
        acc = compose(acc, e.op);
    }
    return acc;
}

GaussianState Circuit::propagate(const GaussianState& in) const {
    return propagate_prefix(in, elements_.size());
}

GaussianState Circuit::propagate_prefix(const GaussianState& in, std::size_t count) const {
    if (count > elements_.size()) {
        throw std::invalid_argument("prefix length exceeds circuit length");
    }
    GaussianState state = in;
    for (std::size_t i = 0; i < count; ++i) {
        state = apply(elements_[i].op, state);
    }
    return state;
}

}  // namespace sagnac
