#pragma once

// JSON (de)serialization for the parameter model and crosscheck reports.

#include <string>

#include <json.hpp>

#include "diracsq/core.hpp"
#include "diracsq/crosscheck.hpp"

namespace diracsq {

inline std::string to_string(CouplingCase c) {
    return c == CouplingCase::DeltaZero ? "delta_zero" : "sigma_zero";
}

inline std::string to_string(DeltaConvention c) {
    return c == DeltaConvention::PaperHalf ? "paper_half" : "dirac_full";
}

inline CouplingCase coupling_case_from_string(const std::string& s) {
    if (s == "delta_zero") return CouplingCase::DeltaZero;
    if (s == "sigma_zero") return CouplingCase::SigmaZero;
    throw std::invalid_argument("unknown coupling_case: " + s);
}

inline DeltaConvention delta_convention_from_string(const std::string& s) {
    if (s == "paper_half") return DeltaConvention::PaperHalf;
    if (s == "dirac_full") return DeltaConvention::DiracFull;
    throw std::invalid_argument("unknown delta_convention: " + s);
}

inline void to_json(nlohmann::json& j, const ModelParams& p) {
    j = nlohmann::json{{"mass", p.mass},
                       {"half_width", p.half_width},
                       {"c_sigma", p.c_sigma},
                       {"c_p", p.c_p},
                       {"coupling_case", to_string(p.coupling_case)},
                       {"delta_convention", to_string(p.delta_convention)}};
}

/// Strict parse: unknown keys are rejected, known keys override defaults.
inline void from_json(const nlohmann::json& j, ModelParams& p) {
    for (const auto& [key, value] : j.items()) {
        if (key == "mass")
            p.mass = value.get<double>();
        else if (key == "half_width")
            p.half_width = value.get<double>();
        else if (key == "c_sigma")
            p.c_sigma = value.get<double>();
        else if (key == "c_p")
            p.c_p = value.get<double>();
        else if (key == "coupling_case")
            p.coupling_case = coupling_case_from_string(value.get<std::string>());
        else if (key == "delta_convention")
            p.delta_convention = delta_convention_from_string(value.get<std::string>());
        else
            throw std::invalid_argument("unknown parameter key: " + key);
    }
    p.validate();
}

inline void to_json(nlohmann::json& j, const CheckRecord& c) {
    j = nlohmann::json{
        {"name", c.name}, {"max_dev", c.max_dev}, {"tol", c.tol}, {"pass", c.pass}};
}

inline void to_json(nlohmann::json& j, const CrosscheckReport& r) {
    j = nlohmann::json{{"checks", r.checks}, {"pass", r.pass}};
}

}  // namespace diracsq
