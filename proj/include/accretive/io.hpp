#pragma once

#include <optional>
#include <string>

#include "accretive/catalog.hpp"
#include "accretive/numrad.hpp"
#include "accretive/sweep.hpp"
#include "accretive/transform.hpp"
#include "accretive/types.hpp"
#include "accretive/verdict.hpp"
#include "accretive/window_solver.hpp"

namespace accretive {

/// Matrix files: {"n": 2, "entries": [[re, im], ...]} row-major, n^2 pairs.
/// Writers emit 17 significant digits so values round-trip exactly.
std::string matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const std::string& text);
Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& a);

/// Window files: {"m": ..., "M": ...}.
std::string window_to_json(const Window& w);
Window window_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v);
std::string enclosure_to_json(const Enclosure& e);
std::string window_result_to_json(const WindowSearchResult& r);

/// theta,re,im rows with a header line.
std::string range_to_csv(const std::vector<RangePoint>& pts);

std::string report_to_json(const SweepReport& r);
std::string report_to_csv(const SweepReport& r);

std::string demo_report_to_json(const DemoReport& r);

/// Replayable instance of one catalog case. matrix_b/window/t/map are
/// present only when the case consumes them.
struct Instance {
    std::string case_id;
    uint64_t seed = 0;
    Matrix matrix;
    std::optional<Matrix> matrix_b;
    std::optional<Window> window;
    std::optional<Window> window_b;
    std::optional<double> t;
    std::optional<PositiveMapSpec> map;
};

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Dispatches an instance to its checker. Unknown case ids throw.
Verdict run_instance(const Instance& inst, const SweepSettings& settings);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace accretive
