#include "accretive/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace accretive {

namespace {

using nlohmann::json;

/// %.17g round-trips doubles exactly. JSON has no non-finite literals, so
/// those are clamped to +-1e308 (they only appear in error verdicts).
std::string fmt17(double x) {
    if (std::isnan(x)) return "0";
    if (std::isinf(x)) return x > 0 ? "1e308" : "-1e308";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + escape_json(s) + "\""; }

std::string entries_json(const Matrix& a, int rows, int cols) {
    std::string out = "[";
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (i != 0 || j != 0) out += ", ";
            out += "[" + fmt17(a(i, j).real()) + ", " + fmt17(a(i, j).imag()) + "]";
        }
    }
    return out + "]";
}

Matrix matrix_from_node(const json& node) {
    if (!node.is_object() || !node.contains("n") || !node.contains("entries"))
        throw std::invalid_argument("matrix json: expected {\"n\", \"entries\"}");
    const int n = node.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix json: n must be positive");
    const json& entries = node.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("matrix json: entries must hold n^2 [re, im] pairs");
    Matrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const json& e = entries.at(static_cast<size_t>(i) * n + j);
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("matrix json: each entry is [re, im]");
            a(i, j) = cdouble(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return a;
}

Window window_from_node(const json& node) {
    if (!node.is_object() || !node.contains("m") || !node.contains("M"))
        throw std::invalid_argument("window json: expected {\"m\", \"M\"}");
    return Window(node.at("m").get<double>(), node.at("M").get<double>());
}

json parse(const std::string& text) { return json::parse(text); }

}  // namespace

std::string matrix_to_json(const Matrix& a) {
    return "{\"n\": " + std::to_string(a.n()) + ", \"entries\": " + entries_json(a, a.n(), a.n()) +
           "}";
}

Matrix matrix_from_json(const std::string& text) { return matrix_from_node(parse(text)); }

Matrix read_matrix_file(const std::string& path) { return matrix_from_json(read_text_file(path)); }

void write_matrix_file(const std::string& path, const Matrix& a) {
    write_text_file(path, matrix_to_json(a) + "\n");
}

std::string window_to_json(const Window& w) {
    return "{\"m\": " + fmt17(w.m) + ", \"M\": " + fmt17(w.M) + "}";
}

Window window_from_json(const std::string& text) { return window_from_node(parse(text)); }

std::string verdict_to_json(const Verdict& v) {
    std::string out = "{";
    out += "\"case_id\": " + quoted(v.case_id);
    out += ", \"outcome\": " + quoted(outcome_name(v.outcome()));
    out += ", \"hypothesis_met\": " + std::string(v.hypothesis_met ? "true" : "false");
    out += ", \"pass\": " + std::string(v.pass ? "true" : "false");
    out += ", \"relation\": " + quoted(v.relation);
    out += ", \"lhs\": " + fmt17(v.lhs_summary);
    out += ", \"rhs\": " + fmt17(v.rhs_summary);
    out += ", \"slack\": " + fmt17(v.slack);
    out += ", \"slack_norm\": " + fmt17(v.slack_norm);
    out += ", \"details\": " + quoted(v.details);
    return out + "}";
}

std::string enclosure_to_json(const Enclosure& e) {
    return "{\"lo\": " + fmt17(e.lo) + ", \"hi\": " + fmt17(e.hi) +
           ", \"width\": " + fmt17(e.width()) + "}";
}

std::string window_result_to_json(const WindowSearchResult& r) {
    const char* status = r.status == WindowStatus::Ok
                             ? "ok"
                             : (r.status == WindowStatus::Degenerate ? "degenerate" : "infeasible");
    std::string out = "{";
    out += "\"feasible\": " + std::string(r.feasible ? "true" : "false");
    out += ", \"status\": " + quoted(status);
    out += ", \"window\": ";
    out += r.feasible ? window_to_json(r.window) : "null";
    out += ", \"K\": " + fmt17(r.K);
    out += ", \"mu_star\": " + fmt17(r.mu_star);
    out += ", \"g_star\": " + fmt17(r.g_star);
    return out + "}";
}

std::string range_to_csv(const std::vector<RangePoint>& pts) {
    std::string out = "theta,re,im\n";
    for (const RangePoint& p : pts)
        out += fmt17(p.theta) + "," + fmt17(p.z.real()) + "," + fmt17(p.z.imag()) + "\n";
    return out;
}

std::string report_to_json(const SweepReport& r) {
    std::string out = "{\n  \"config\": {";
    out += "\"master_seed\": " + std::to_string(r.config.master_seed);
    out += ", \"trials\": " + std::to_string(r.config.trials);
    out += ", \"dims\": [";
    for (size_t i = 0; i < r.config.dims.size(); ++i)
        out += (i ? ", " : "") + std::to_string(r.config.dims[i]);
    out += "], \"tol_rel\": " + fmt17(r.config.settings.tol.rel);
    out += ", \"eps\": " + fmt17(r.config.settings.eps);
    out += ", \"fill\": " + fmt17(r.config.settings.fill);
    out += ", \"case_filter\": " + quoted(r.config.case_filter);
    out += "},\n  \"total_fail\": " + std::to_string(r.total_fail);
    out += ",\n  \"cases\": [\n";
    for (size_t i = 0; i < r.cases.size(); ++i) {
        const CaseStats& cs = r.cases[i];
        out += "    {\"case_id\": " + quoted(cs.case_id);
        out += ", \"trials\": " + std::to_string(cs.trials);
        out += ", \"hypothesis_met\": " + std::to_string(cs.hypothesis_met);
        out += ", \"pass\": " + std::to_string(cs.pass);
        out += ", \"fail\": " + std::to_string(cs.fail);
        if (cs.has_min) {
            out += ", \"min_slack_norm\": " + fmt17(cs.min_slack);
            out += ", \"argmin_seed\": " + std::to_string(cs.argmin_seed);
        }
        if (!cs.fail_files.empty()) {
            out += ", \"fail_files\": [";
            for (size_t k = 0; k < cs.fail_files.size(); ++k)
                out += (k ? ", " : "") + quoted(cs.fail_files[k]);
            out += "]";
        }
        out += "}";
        out += i + 1 < r.cases.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string report_to_csv(const SweepReport& r) {
    std::string out = "case_id,trials,hypothesis_met,pass,fail,min_slack_norm,argmin_seed\n";
    for (const CaseStats& cs : r.cases) {
        out += cs.case_id + "," + std::to_string(cs.trials) + "," +
               std::to_string(cs.hypothesis_met) + "," + std::to_string(cs.pass) + "," +
               std::to_string(cs.fail) + ",";
        if (cs.has_min) out += fmt17(cs.min_slack) + "," + std::to_string(cs.argmin_seed);
        else out += ",";
        out += "\n";
    }
    return out;
}

std::string demo_report_to_json(const DemoReport& r) {
    std::string out = "{\n  \"all_ok\": " + std::string(r.all_ok ? "true" : "false");
    out += ",\n  \"rows\": [\n";
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const DemoRow& row = r.rows[i];
        out += "    {\"name\": " + quoted(row.name);
        out += ", \"reference\": " + fmt17(row.reference);
        out += ", \"computed\": " + fmt17(row.computed);
        out += ", \"diff\": " + fmt17(row.diff);
        out += ", \"ok\": " + std::string(row.ok ? "true" : "false");
        out += ", \"note\": " + quoted(row.note) + "}";
        out += i + 1 < r.rows.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::string instance_to_json(const Instance& inst) {
    std::string out = "{\n  \"case_id\": " + quoted(inst.case_id);
    out += ",\n  \"seed\": " + std::to_string(inst.seed);
    out += ",\n  \"matrix\": " + matrix_to_json(inst.matrix);
    if (inst.matrix_b) out += ",\n  \"matrix_b\": " + matrix_to_json(*inst.matrix_b);
    if (inst.window) out += ",\n  \"window\": " + window_to_json(*inst.window);
    if (inst.window_b) out += ",\n  \"window_b\": " + window_to_json(*inst.window_b);
    if (inst.t) out += ",\n  \"t\": " + fmt17(*inst.t);
    if (inst.map) {
        const PositiveMapSpec& phi = *inst.map;
        switch (phi.kind) {
            case PositiveMapSpec::Kind::NormalizedTrace:
                out += ",\n  \"map\": {\"kind\": \"normalized_trace\"}";
                break;
            case PositiveMapSpec::Kind::VectorState: {
                out += ",\n  \"map\": {\"kind\": \"vector_state\", \"x\": [";
                for (size_t i = 0; i < phi.x.size(); ++i) {
                    if (i) out += ", ";
                    out += "[" + fmt17(phi.x[i].real()) + ", " + fmt17(phi.x[i].imag()) + "]";
                }
                out += "]}";
                break;
            }
            case PositiveMapSpec::Kind::Compression:
                out += ",\n  \"map\": {\"kind\": \"compression\", \"rows\": " +
                       std::to_string(phi.p_rows) + ", \"cols\": " + std::to_string(phi.p_cols) +
                       ", \"p\": " + entries_json(phi.p, phi.p_rows, phi.p_cols) + "}";
                break;
        }
    }
    return out + "\n}\n";
}

Instance instance_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("case_id") || !j.contains("matrix"))
        throw std::invalid_argument("instance json: expected at least case_id and matrix");
    Instance inst;
    inst.case_id = j.at("case_id").get<std::string>();
    if (j.contains("seed")) inst.seed = j.at("seed").get<uint64_t>();
    inst.matrix = matrix_from_node(j.at("matrix"));
    if (j.contains("matrix_b")) inst.matrix_b = matrix_from_node(j.at("matrix_b"));
    if (j.contains("window")) inst.window = window_from_node(j.at("window"));
    if (j.contains("window_b")) inst.window_b = window_from_node(j.at("window_b"));
    if (j.contains("t")) inst.t = j.at("t").get<double>();
    if (j.contains("map")) {
        const json& m = j.at("map");
        const std::string kind = m.at("kind").get<std::string>();
        if (kind == "normalized_trace") {
            inst.map = PositiveMapSpec::normalized_trace();
        } else if (kind == "vector_state") {
            std::vector<cdouble> x;
            for (const json& e : m.at("x"))
                x.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
            inst.map = PositiveMapSpec::vector_state(std::move(x));
        } else if (kind == "compression") {
            const int rows = m.at("rows").get<int>();
            const int cols = m.at("cols").get<int>();
            if (rows < 1 || cols < 1 || cols > rows)
                throw std::invalid_argument("instance json: bad compression shape");
            const json& p = m.at("p");
            if (!p.is_array() || p.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
                throw std::invalid_argument("instance json: compression entries mismatch");
            Matrix iso(rows);
            for (int i = 0; i < rows; ++i) {
                for (int jj = 0; jj < cols; ++jj) {
                    const json& e = p.at(static_cast<size_t>(i) * cols + jj);
                    iso(i, jj) = cdouble(e.at(0).get<double>(), e.at(1).get<double>());
                }
            }
            inst.map = PositiveMapSpec::compression(iso, rows, cols);
        } else {
            throw std::invalid_argument("instance json: unknown map kind " + kind);
        }
    }
    return inst;
}

Instance read_instance_file(const std::string& path) {
    return instance_from_json(read_text_file(path));
}

namespace {

const Window& require_window(const Instance& inst) {
    if (!inst.window) throw std::invalid_argument(inst.case_id + ": instance needs a window");
    return *inst.window;
}

const Matrix& require_b(const Instance& inst) {
    if (!inst.matrix_b) throw std::invalid_argument(inst.case_id + ": instance needs matrix_b");
    return *inst.matrix_b;
}

}  // namespace

Verdict run_instance(const Instance& inst, const SweepSettings& settings) {
    const std::string& id = inst.case_id;
    const Tolerance& tol = settings.tol;
    const double eps = settings.eps;

    if (id.rfind("prop.", 0) == 0 && id.size() == 6 && id[5] >= '1' && id[5] <= '7') {
        const int k = id[5] - '0';
        return prop_checks(inst.matrix, require_window(inst), tol)[static_cast<size_t>(k - 1)];
    }
    if (id == "thm.abs_real.a") return check_abs_vs_real(inst.matrix, require_window(inst), Variant::A, tol);
    if (id == "thm.abs_real.iastar")
        return check_abs_vs_real(inst.matrix, require_window(inst), Variant::IAstar, tol);
    if (id == "thm.abs_real.ainv")
        return check_abs_vs_real(inst.matrix, require_window(inst), Variant::Ainv, tol);
    if (id == "eq.intermediate") return check_intermediate(inst.matrix, require_window(inst), tol);
    if (id == "thm.block_triangle")
        return check_block_reverse_triangle(inst.matrix, require_b(inst), require_window(inst), tol);
    if (id == "cor.abs_minus_real.a")
        return check_abs_minus_real(inst.matrix, require_window(inst), Variant::A, tol);
    if (id == "cor.abs_minus_real.iastar")
        return check_abs_minus_real(inst.matrix, require_window(inst), Variant::IAstar, tol);
    if (id == "cor.abs_minus_real.ainv")
        return check_abs_minus_real(inst.matrix, require_window(inst), Variant::Ainv, tol);
    if (id == "thm.convex_combo")
        return check_convex_combo(inst.matrix, require_window(inst), TradeParam{inst.t.value_or(0.5)},
                                  tol);
    if (id == "thm.squared.a") return check_squared(inst.matrix, require_window(inst), Variant::A, tol);
    if (id == "thm.squared.iastar")
        return check_squared(inst.matrix, require_window(inst), Variant::IAstar, tol);
    if (id == "thm.squared.ainv")
        return check_squared(inst.matrix, require_window(inst), Variant::Ainv, tol);
    if (id == "lem.sqrt_equiv") {
        if (!inst.t) throw std::invalid_argument("lem.sqrt_equiv: instance needs t (= alpha)");
        return check_sqrt_equiv_case(HermitianMatrix(inst.matrix), HermitianMatrix(require_b(inst)),
                                     *inst.t, tol);
    }
    if (id == "cor.anticommutator.a")
        return check_anticommutator(inst.matrix, require_window(inst), Variant::A, tol);
    if (id == "cor.anticommutator.iastar")
        return check_anticommutator(inst.matrix, require_window(inst), Variant::IAstar, tol);
    if (id == "rem.sandwich") return check_sandwich(inst.matrix, require_window(inst), tol);
    if (id == "lem.posmap")
        return check_positive_map(inst.matrix, require_window(inst),
                                  inst.map.value_or(PositiveMapSpec::normalized_trace()), tol);
    if (id == "ineq.posmap_reverse")
        return check_positive_map_reverse(inst.matrix,
                                          inst.map.value_or(PositiveMapSpec::normalized_trace()), tol);
    if (id == "thm.reverse.a") return check_reverse(inst.matrix, require_window(inst), Variant::A, tol);
    if (id == "thm.reverse.iastar")
        return check_reverse(inst.matrix, require_window(inst), Variant::IAstar, tol);
    if (id == "thm.reverse.ainv")
        return check_reverse(inst.matrix, require_window(inst), Variant::Ainv, tol);
    if (id == "cor.real_minus_abs.a")
        return check_real_minus_abs(inst.matrix, require_window(inst), Variant::A, tol);
    if (id == "cor.real_minus_abs.iastar")
        return check_real_minus_abs(inst.matrix, require_window(inst), Variant::IAstar, tol);
    if (id == "w.basic_bounds") return check_w_basic(inst.matrix, tol, eps);
    if (id == "w.vs_real") return check_w_bounds(inst.matrix, require_window(inst), tol, eps)[0];
    if (id == "norm.vs_w") return check_w_bounds(inst.matrix, require_window(inst), tol, eps)[1];
    if (id == "w.geo_mean")
        return check_w_geo_mean(inst.matrix, require_window(inst), tol, eps, inst.seed);
    if (id == "w.lower_sq") return check_w_lower_sq(inst.matrix, require_window(inst), tol, eps);
    if (id == "w.product") {
        if (!inst.window_b) throw std::invalid_argument("w.product: instance needs window_b");
        return check_w_product(inst.matrix, require_b(inst), require_window(inst), *inst.window_b,
                               tol, eps);
    }
    if (id == "w.commutator.minus")
        return check_w_commutator(inst.matrix, require_b(inst), require_window(inst),
                                  CommutatorForm::Minus, tol, eps);
    if (id == "w.commutator.plus")
        return check_w_commutator(inst.matrix, require_b(inst), require_window(inst),
                                  CommutatorForm::Plus, tol, eps);
    if (id == "cor.final")
        return check_final_corollary(inst.matrix, require_b(inst), require_window(inst), tol, eps);
    if (id == "prop.mixed_schwarz") return check_mixed_schwarz(inst.matrix, tol, inst.seed, 100);
    if (id == "prop.norm_product")
        return check_norm_product(HermitianMatrix(inst.matrix), HermitianMatrix(require_b(inst)),
                                  tol);
    throw std::invalid_argument("run_instance: unknown case id " + id);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace accretive
