#pragma once

// Named parameter sets for the standard plots. Central-system parameters not
// listed default to J = 1, Delta = 0.5, M = 0.5 and B = lambda;
// unlabeled time axes run over [0, 20] (weak coupling) or [0, 5] (strong).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spindec/cli/config.hpp"

namespace spindec::cli {

struct Preset {
    std::string name;
    std::string command; // factor | qcorr
    KeyValues values;
    std::string description;
};

inline const std::vector<Preset>& presets()
{
    static const std::vector<Preset> all = [] {
        const KeyValues weak_t{{"t-max", "20"}, {"t-steps", "200"}};
        const KeyValues strong_t{{"t-max", "5"}, {"t-steps", "200"}};
        const KeyValues d_sweep{{"D-min", "0"}, {"D-max", "2"}, {"D-steps", "21"}};
        const auto join = [](std::initializer_list<KeyValues> parts) {
            KeyValues out;
            for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
            return out;
        };
        const KeyValues fig1{{"N", "400"}, {"g", "0.05"}, {"gamma", "0.5"}, {"lambda", "1"}, {"k", "0"}, {"kprime", "7"}};
        const KeyValues fig2{{"N-values", "100,200,400"}, {"D", "0"}, {"g", "0.05"}, {"gamma", "0.5"},
                             {"lambda", "1"}, {"k", "0"}, {"kprime", "7"}};
        const KeyValues fig3{{"N", "400"}, {"D", "1"}, {"g", "0.05"}, {"gamma", "0.1"},
                             {"lambda-values", "1,2,6"}, {"k", "0"}, {"kprime", "7"}};
        const KeyValues fig4{{"N", "400"}, {"g", "500"}, {"gamma", "0.5"}, {"lambda", "1.1"}, {"prep", "ground"}};
        const KeyValues fig5{{"N", "400"}, {"D", "0.5"}, {"g", "500"}, {"gamma", "0.5"}, {"lambda", "1"},
                             {"prep", "ground"}};
        const KeyValues qc{{"N", "400"}, {"D", "0.5"}, {"gamma", "0.4"}, {"a", "1"},
                           {"J", "1"}, {"Delta", "0.5"}, {"M", "0.5"}};
        return std::vector<Preset>{
            {"fig1a", "factor", join({fig1, {{"prep", "ground"}}, d_sweep, weak_t}), "ground state, D sweep"},
            {"fig1b", "factor", join({fig1, {{"prep", "vacuum"}}, d_sweep, weak_t}), "vacuum state, D sweep"},
            {"fig2a", "factor", join({fig2, {{"prep", "ground"}}, weak_t}), "ground state, N = 100, 200, 400"},
            {"fig2b", "factor", join({fig2, {{"prep", "vacuum"}}, weak_t}), "vacuum state, N = 100, 200, 400"},
            {"fig3a", "factor", join({fig3, {{"prep", "ground"}}, weak_t}), "ground state, lambda = 1, 2, 6"},
            {"fig3b", "factor", join({fig3, {{"prep", "vacuum"}}, weak_t}), "vacuum state, lambda = 1, 2, 6"},
            {"fig4a", "factor", join({fig4, {{"k", "0"}, {"kprime", "7"}}, d_sweep, strong_t}),
             "strong coupling, opposite-sign alphas, D sweep"},
            {"fig4b", "factor", join({fig4, {{"k", "0"}, {"kprime", "1"}}, d_sweep, strong_t}),
             "strong coupling, same-sign alphas, D sweep"},
            {"fig5a", "factor", join({fig5, {{"k", "0"}, {"kprime", "1"}}, strong_t}), "same-sign alphas (3g, g)"},
            {"fig5b", "factor", join({fig5, {{"k", "7"}, {"kprime", "3"}}, strong_t}), "same-sign alphas (-3g, -g)"},
            {"fig6", "factor",
             join({{{"N", "400"}, {"g", "500"}, {"gamma", "0.5"}, {"lambda", "1"}, {"prep", "vacuum"},
                    {"k", "0"}, {"kprime", "7"}},
                   d_sweep, strong_t}),
             "vacuum state, strong coupling, D sweep"},
            {"fig7a", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "1"}, {"prep", "ground"}}, weak_t}), "lambda = 1"},
            {"fig7b", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "1"}, {"prep", "vacuum"}}, weak_t}), "lambda = 1"},
            {"fig7c", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "10"}, {"prep", "ground"}}, weak_t}), "lambda = 10"},
            {"fig7d", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "10"}, {"prep", "vacuum"}}, weak_t}), "lambda = 10"},
            {"fig8a", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "1"}, {"prep", "ground"}}, weak_t}),
             "weak coupling at the critical field"},
            {"fig8b", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "1"}, {"prep", "vacuum"}}, weak_t}),
             "weak coupling at the critical field"},
            {"fig8c", "qcorr", join({qc, {{"g", "0.05"}, {"lambda", "100"}, {"prep", "ground"}}, weak_t}),
             "very strong field"},
            {"fig8d", "qcorr", join({qc, {{"g", "500"}, {"lambda", "1"}, {"prep", "vacuum"}}, strong_t}),
             "strong coupling"},
        };
    }();
    return all;
}

inline const Preset* find_preset(std::string_view name)
{
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

} // namespace spindec::cli
