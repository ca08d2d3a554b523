#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "a2r/errors.hpp"
#include "a2r/stage.hpp"

namespace a2r {

class UnknownModel : public Error {
public:
    explicit UnknownModel(const std::string& model)
        : Error("no pricing entry for model: " + model) {}
};

/// Exact money amount in integer pico-currency (1e-12). Prices are quoted
/// per million tokens with micro precision, so per-token costs need
/// sub-micro resolution to stay exact; additivity then has zero rounding
/// loss.
struct Money {
    std::int64_t pico = 0;

    double currency() const { return static_cast<double>(pico) * 1e-12; }

    Money operator+(Money other) const { return {pico + other.pico}; }
    Money& operator+=(Money other) {
        pico += other.pico;
        return *this;
    }
    bool operator==(const Money&) const = default;
};

struct PriceEntry {
    std::int64_t input_micro_per_mtok = 0;   // micro-currency per million input tokens
    std::int64_t output_micro_per_mtok = 0;
};

/// Per-model input/output token prices. File format: JSON map
/// model -> {input_per_mtok, output_per_mtok} in currency units.
class PricingSheet {
public:
    static PricingSheet load_json(const std::filesystem::path& file);
    static PricingSheet parse_json(const std::string& content);

    void set_price(const std::string& model, double input_per_mtok, double output_per_mtok);
    const PriceEntry& lookup(const std::string& model) const;  // throws UnknownModel
    bool has(const std::string& model) const;

private:
    std::map<std::string, PriceEntry> prices_;
};

/// Token usage of one stage. For per-call mean token counts n_calls is the
/// call multiplier (N for the explorer fan-out, 1 for the synthesizer); for
/// pre-aggregated corpus totals use n_calls = 1.
struct StageUsage {
    Stage stage = Stage::explorer;
    std::int64_t n_calls = 0;
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
};

/// n_calls x (input_tokens x P_in + output_tokens x P_out), exact.
Money stage_cost(const StageUsage& usage, const PricingSheet& sheet, const std::string& model);

struct CostBreakdown {
    Money explorer;
    Money synthesizer;
    Money total;            // explorer + synthesizer, exactly
    std::int64_t query_count = 1;
    double per_1k = 0.0;    // total cost per thousand evaluated queries
};

/// Combines both stages; synthesizer is optional for single-stage baselines.
CostBreakdown total_cost(const StageUsage& explorer, const std::string& explorer_model,
                         const std::optional<StageUsage>& synthesizer,
                         const std::string& synthesizer_model, const PricingSheet& sheet,
                         std::int64_t query_count = 1);

}  // namespace a2r
