// Command-line front end: single and batch volume computation, angle/length
// conversion, the quadrature oracle, and the per-tetrahedron check suite.
//
// Results go to the result stream (stdout), error detail to the diagnostic
// stream (stderr).  Exit codes: 0 success, 1 check-suite row failure,
// 2 malformed input, 3 not realizable / wrong shape, 4 numerical failure.

#include "hytet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hytet/dilog.hpp"
#include "hytet/errors.hpp"
#include "hytet/gram.hpp"
#include "hytet/oracle.hpp"
#include "hytet/volume.hpp"

namespace hytet::cli {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846264338327950288;

std::array<double, 6> parse6(const std::string& csv) {
    std::array<double, 6> out{};
    std::istringstream ss(csv);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 6) throw input_error("expected exactly six comma-separated values");
        try {
            std::size_t pos = 0;
            out[i] = std::stod(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw input_error("trailing characters in value: " + tok);
        } catch (const std::invalid_argument&) {
            throw input_error("not a number: " + tok);
        } catch (const std::out_of_range&) {
            throw input_error("value out of range: " + tok);
        }
        if (!std::isfinite(out[i])) throw input_error("value is not finite: " + tok);
        ++i;
    }
    if (i != 6) throw input_error("expected exactly six comma-separated values");
    return out;
}

std::string plain(double x) {
    if (x == 0.0) return "0.000000000000";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string join6(const std::array<double, 6>& v) {
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (i) s += ',';
        s += plain(v[i]);
    }
    return s;
}

json result_to_json(const VolumeResult& r) {
    json j;
    j["volume"] = r.volume;
    j["shape"] = to_string(r.shape);
    j["method"] = r.method == VolumeMethod::AnglesThm1 ? "angles" : "lengths";
    j["z_minus"] = {{"re", r.z_pair.z_minus.real()}, {"im", r.z_pair.z_minus.imag()}};
    j["z_plus"] = {{"re", r.z_pair.z_plus.real()}, {"im", r.z_pair.z_plus.imag()}};
    j["residues"] = {r.residues.first, r.residues.second};
    if (r.partials)
        j["partials"] = *r.partials;
    else
        j["partials"] = nullptr;
    j["diagnostics"] = json::object();
    for (const auto& [k, v] : r.diagnostics) j["diagnostics"][k] = v;
    return j;
}

struct CheckRow {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
};

double oracle_check_tolerance(std::optional<double> cli_override) {
    if (cli_override) return *cli_override;
    if (const char* env = std::getenv("HYTET_TOL")) {
        try {
            return std::stod(env);
        } catch (...) {
            throw input_error("HYTET_TOL is not a number");
        }
    }
    return 1e-6;
}

double max_abs_diff6(const std::array<double, 6>& a, const std::array<double, 6>& b) {
    double m = 0.0;
    for (int i = 0; i < 6; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::vector<CheckRow> check_lengths_suite(const Lengths6& l, double oracle_tol) {
    std::vector<CheckRow> rows;
    auto add = [&rows](std::string name, double value, double tol) {
        rows.push_back({std::move(name), value, tol, std::abs(value) <= tol});
    };

    const Gram4 g = gram_from_lengths(l);
    const Signature sig = signature(g);
    add("signature_3_1", std::abs(sig.positive - 3) + std::abs(sig.negative - 1), 0.0);
    if (sig.positive != 3 || sig.negative != 1) return rows;

    const ComplexParams p = params_from_lengths(l);
    const QuadCoeffs q = quad_coeffs(p);
    const ZPair zp = z_roots(q, p);
    const double qscale = std::abs(q.q0) + std::abs(q.q1) + std::abs(q.q2);
    auto resid = [&](cplx z) { return std::abs((q.q2 * z + q.q1) * z + q.q0); };
    add("quadratic_residual", std::max(resid(zp.z_minus), resid(zp.z_plus)) / qscale, 1e-10);
    add("root_closed_form",
        std::abs(zp.z_minus - closed_form_z_minus(p)) / (1.0 + std::abs(zp.z_minus)), 1e-10);
    add("conjugate_roots", std::abs(zp.z_plus - std::conj(zp.z_minus)) / (1.0 + std::abs(zp.z_minus)),
        1e-10);

    const cplx rm = zdudz(p, zp.z_minus), rp = zdudz(p, zp.z_plus);
    add("residue_real_part", std::max(std::abs(rm.real()), std::abs(rp.real())), 1e-8);
    auto snap = [](double x) { return std::abs(x - 2.0 * kPi * std::round(x / (2.0 * kPi))); };
    add("residue_integrality", std::max(snap(rm.imag()), snap(rp.imag())), 1e-6);

    const VolumeResult vr = volume_from_lengths(l);
    add("im_v", vr.diagnostics.at("im_v"), 1e-9 * std::max(1.0, std::abs(vr.volume)));

    const Angles6 a = lengths_to_angles(l);
    double congruence = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double d = 2.0 * (*vr.partials)[i] - a.v[i];
        congruence = std::max(congruence, std::abs(d - kPi * std::round(d / kPi)));
    }
    add("congruence_mod_pi", congruence, 1e-7);
    add("roundtrip", max_abs_diff6(angles_to_lengths(a).v, l.v), 1e-9);

    const VolumeResult va = volume_from_angles(a);
    add("cross_formula", vr.volume - va.volume, 1e-8);
    add("schlafli_defect", schlafli_defect(a, 1e-5), 1e-6);

    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    add("oracle_agreement", vr.volume - oracle_volume_from_lengths(l, spec), oracle_tol);
    return rows;
}

std::vector<CheckRow> check_angles_suite(const Angles6& a, double oracle_tol) {
    const Shape s = classify(a);
    if (s == Shape::Hyperbolic) {
        auto rows = check_lengths_suite(angles_to_lengths(a), oracle_tol);
        // Converted lengths reproduce the original angles.
        const double gap = max_abs_diff6(lengths_to_angles(angles_to_lengths(a)).v, a.v);
        rows.push_back({"angle_roundtrip", gap, 1e-9, gap <= 1e-9});
        return rows;
    }
    std::vector<CheckRow> rows;
    auto add = [&rows](std::string name, double value, double tol) {
        rows.push_back({std::move(name), value, tol, std::abs(value) <= tol});
    };
    if (s == Shape::NotRealizable) {
        rows.push_back({"realizable", 1.0, 0.0, false});
        return rows;
    }
    const VolumeResult vr = volume_from_angles(a);
    add("off_real_axis", vr.diagnostics.at("off_real_axis"), 1e-8);
    if (s == Shape::Euclidean)
        add("euclidean_vanishing", vr.diagnostics.at("abs_v"), 1e-8);
    else
        add("volume_positive", vr.volume > 0.0 ? 0.0 : 1.0, 0.0);
    return rows;
}

int print_check(const std::vector<CheckRow>& rows, std::ostream& out) {
    bool all = true;
    char buf[160];
    for (const CheckRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%-22s %12.3e  tol %8.1e  %s\n", r.name.c_str(), r.value,
                      r.tol, r.pass ? "PASS" : "FAIL");
        out << buf;
        all = all && r.pass;
    }
    out << (all ? "check: all rows passed\n" : "check: FAILURES present\n");
    return all ? 0 : 1;
}

struct BatchRecord {
    std::string kind;
    std::array<double, 6> values{};
};

VolumeResult run_record(const BatchRecord& r) {
    if (r.kind == "lengths") {
        Lengths6 l;
        l.v = r.values;
        return volume_from_lengths(l);
    }
    if (r.kind == "angles") {
        Angles6 a;
        a.v = r.values;
        return volume_from_angles(a);
    }
    throw input_error("unknown kind: " + r.kind);
}

int run_batch_csv(std::istream& in, std::ostream& out) {
    std::string line;
    if (!std::getline(in, line)) {
        out << "index,kind,status,volume,shape,error\n";
        return 0;
    }
    auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        const auto last = s.find_last_not_of(" \t\r");
        if (last != std::string::npos) s.erase(last + 1);
        return s;
    };
    if (strip(line) != "kind,v1,v2,v3,v4,v5,v6")
        throw input_error("csv batch: expected header kind,v1,v2,v3,v4,v5,v6");
    out << "index,kind,status,volume,shape,error\n";
    long index = 0;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        std::string kind, rest;
        const auto comma = line.find(',');
        kind = comma == std::string::npos ? strip(line) : strip(line.substr(0, comma));
        rest = comma == std::string::npos ? "" : line.substr(comma + 1);
        try {
            BatchRecord rec{kind, parse6(rest)};
            const VolumeResult vr = run_record(rec);
            out << index << ',' << kind << ",ok," << plain(vr.volume) << ',' << to_string(vr.shape)
                << ",\n";
        } catch (const error& e) {
            std::string msg = e.what();
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            out << index << ',' << kind << ",error,,," << msg << "\n";
        }
        ++index;
    }
    return 0;
}

int run_batch_jsonl(std::istream& in, std::ostream& out) {
    std::string line;
    long index = 0;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        json rec_out;
        rec_out["index"] = index;
        try {
            const json j = json::parse(line);
            BatchRecord rec;
            rec.kind = j.at("kind").get<std::string>();
            const auto& vals = j.at("values");
            if (!vals.is_array() || vals.size() != 6)
                throw input_error("jsonl batch: values must be an array of six numbers");
            for (int i = 0; i < 6; ++i) rec.values[i] = vals[i].get<double>();
            rec_out["kind"] = rec.kind;
            const VolumeResult vr = run_record(rec);
            rec_out["status"] = "ok";
            rec_out["volume"] = vr.volume;
            rec_out["shape"] = to_string(vr.shape);
        } catch (const json::exception& e) {
            rec_out["status"] = "error";
            rec_out["code"] = 2;
            rec_out["message"] = e.what();
        } catch (const error& e) {
            rec_out["status"] = "error";
            rec_out["code"] = exit_code_for(e);
            rec_out["message"] = e.what();
        }
        out << rec_out.dump() << "\n";
        ++index;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperbolic tetrahedron volumes from edge lengths or dihedral angles"};
    app.require_subcommand(1);

    std::string lengths_csv, angles_csv;
    bool json_output = false;
    std::optional<double> tol_override;
    double rel_tol = 1e-8;
    std::string batch_input, batch_format = "csv", batch_output;

    auto add_inputs = [&](CLI::App* cmd, bool need_one = true) {
        auto* lo = cmd->add_option("--lengths", lengths_csv, "six edge lengths l1,...,l6");
        auto* ao = cmd->add_option("--angles", angles_csv, "six dihedral angles A1,...,A6 (radians)");
        lo->excludes(ao);
        if (need_one) {
            // CLI11 has no xor-require; enforce in the action.
        }
        return std::make_pair(lo, ao);
    };

    CLI::App* vol = app.add_subcommand("vol", "compute the volume of one tetrahedron");
    add_inputs(vol);
    vol->add_flag("--json", json_output, "emit the full result object as JSON");

    CLI::App* convert = app.add_subcommand("convert", "convert angles <-> lengths");
    add_inputs(convert);

    CLI::App* check = app.add_subcommand("check", "run the invariant suite on one tetrahedron");
    add_inputs(check);
    double check_tol = -1.0;
    check->add_option("--tol", check_tol, "override the formula-vs-oracle tolerance (or HYTET_TOL)");

    CLI::App* oracle = app.add_subcommand("oracle", "Klein-model quadrature volume");
    add_inputs(oracle);
    oracle->add_option("--rel-tol", rel_tol, "quadrature relative tolerance (default 1e-8)");

    CLI::App* batch = app.add_subcommand("batch", "process a stream of records");
    batch->add_option("--input", batch_input, "input file")->required();
    batch->add_option("--format", batch_format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    batch->add_option("--output", batch_output, "output file (default: stdout)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto need_input = [&]() {
        if (lengths_csv.empty() == angles_csv.empty())
            throw input_error("exactly one of --lengths or --angles is required");
    };

    try {
        if (app.got_subcommand(vol)) {
            need_input();
            VolumeResult r;
            if (!lengths_csv.empty()) {
                Lengths6 l;
                l.v = parse6(lengths_csv);
                r = volume_from_lengths(l);
            } else {
                Angles6 a;
                a.v = parse6(angles_csv);
                r = volume_from_angles(a);
            }
            if (json_output)
                out << result_to_json(r).dump() << "\n";
            else
                out << plain(r.volume) << "\n";
            if (!json_output) err << "shape: " << to_string(r.shape) << "\n";
            return 0;
        }
        if (app.got_subcommand(convert)) {
            need_input();
            if (!lengths_csv.empty()) {
                Lengths6 l;
                l.v = parse6(lengths_csv);
                out << join6(lengths_to_angles(l).v) << "\n";
            } else {
                Angles6 a;
                a.v = parse6(angles_csv);
                out << join6(angles_to_lengths(a).v) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(check)) {
            need_input();
            const double otol =
                oracle_check_tolerance(check_tol > 0 ? std::optional<double>(check_tol) : std::nullopt);
            std::vector<CheckRow> rows;
            if (!lengths_csv.empty()) {
                Lengths6 l;
                l.v = parse6(lengths_csv);
                rows = check_lengths_suite(l, otol);
            } else {
                Angles6 a;
                a.v = parse6(angles_csv);
                rows = check_angles_suite(a, otol);
            }
            return print_check(rows, out);
        }
        if (app.got_subcommand(oracle)) {
            need_input();
            Lengths6 l;
            if (!lengths_csv.empty())
                l.v = parse6(lengths_csv);
            else {
                Angles6 a;
                a.v = parse6(angles_csv);
                l = angles_to_lengths(a);
            }
            QuadratureSpec spec;
            spec.rel_tol = rel_tol;
            out << plain(oracle_volume_from_lengths(l, spec)) << "\n";
            return 0;
        }
        if (app.got_subcommand(batch)) {
            std::ifstream in(batch_input);
            if (!in) throw input_error("cannot open input file: " + batch_input);
            std::ofstream file_out;
            std::ostream* sink = &out;
            if (!batch_output.empty()) {
                file_out.open(batch_output);
                if (!file_out) throw input_error("cannot open output file: " + batch_output);
                sink = &file_out;
            }
            return batch_format == "csv" ? run_batch_csv(in, *sink) : run_batch_jsonl(in, *sink);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    err << "error: no subcommand\n";
    return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace hytet::cli
