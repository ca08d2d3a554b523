#pragma once

#include <string_view>

namespace a2r {

enum class Stage { explorer, synthesizer };

constexpr std::string_view to_string(Stage stage) {
    return stage == Stage::explorer ? "explorer" : "synthesizer";
}

Stage stage_from_string(std::string_view s);

}  // namespace a2r
