#include "shgauge/params.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace shgauge {

void PhysParams::validate() const {
    const std::pair<const char*, double> positive[] = {
        {"v_f", v_f}, {"hbar", hbar}, {"e_charge", e_charge}, {"mass", mass}, {"c_light", c_light}};
    for (const auto& [name, value] : positive) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw std::invalid_argument(std::string("PhysParams: ") + name + " must be positive");
        }
    }
    const std::pair<const char*, double> finite[] = {
        {"delta_so", delta_so}, {"lambda_r", lambda_r}, {"b_field", b_field}};
    for (const auto& [name, value] : finite) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument(std::string("PhysParams: ") + name + " must be finite");
        }
    }
}

void require_positive_gap(const PhysParams& params, std::string_view where) {
    params.validate();
    if (!(params.delta_so > 0.0)) {
        throw std::invalid_argument(std::string(where) + ": requires delta_so > 0");
    }
}

void require_spin_conserving(const PhysParams& params, std::string_view where) {
    if (params.lambda_r != 0.0 || params.b_field != 0.0) {
        throw std::invalid_argument(std::string(where) +
                                    ": defined only for lambda_r = 0 and b_field = 0");
    }
}

std::string_view BlockLabel::name() const noexcept {
    static constexpr std::string_view names[] = {"up_K", "up_Kp", "down_K", "down_Kp"};
    return names[index()];
}

}  // namespace shgauge
