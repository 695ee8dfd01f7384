#pragma once

#include <entvis/corrected.hpp>
#include <entvis/correlation.hpp>
#include <entvis/density.hpp>
#include <entvis/radon.hpp>
#include <entvis/validation.hpp>
#include <entvis/visibility.hpp>

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace entvis {

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string fmt17(double v);

nlohmann::json to_json(const VisibilityReport& r);
nlohmann::json to_json(const CorrectedReport& r);
nlohmann::json to_json(const CorrelationReport& r);
nlohmann::json to_json(const CheckResult& r);

/// CSV "u,v,value", row-major.
void write_grid_csv(std::ostream& os, const Grid2D& grid, const std::vector<double>& values);
/// {"grid": {...}, "values": [[...], ...]}; extra metadata goes into "grid".
void write_grid_json(std::ostream& os, const Grid2D& grid, const std::vector<double>& values,
                     const nlohmann::json& meta = nlohmann::json::object());

/// "# phi=..., kind=marginal|slice, observable=..." then "s,value".
void write_marginal_csv(std::ostream& os, const Marginal1D& m);
nlohmann::json to_json(const Marginal1D& m);

struct SweepRow {
    double param;
    double v2_plus_d2;
    double v2_plus_f2;
    double v2_plus_r2;
    double bound;
};
void write_sweep_csv(std::ostream& os, const std::string& param, const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::string& param, const std::vector<SweepRow>& rows);

/// Doubles that are not finite become null.
nlohmann::json num(double v);

} // namespace entvis
