#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsb/complex_bergman.hpp"
#include "qsb/json_io.hpp"
#include "qsb/slice_bergman.hpp"
#include "qsb/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qsb;

// QSB_THREADS caps the worker count; unset or 0 leaves the runtime default.
void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("QSB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) omp_set_num_threads(cap);
    }
#endif
}

Frame parse_frame(const std::string& spec) {
    std::string body = spec;
    if (body.rfind("i=", 0) == 0) body = body.substr(2);
    if (body == "e1") return complete_frame(ImaginaryUnit(kE1));
    if (body == "e2") return complete_frame(ImaginaryUnit(kE2));
    if (body == "e3") return complete_frame(ImaginaryUnit(kE3));
    double x = 0, y = 0, z = 0;
    if (std::sscanf(body.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
        throw ParseError("frame spec must be i=e1|e2|e3 or i=x,y,z");
    return complete_frame(ImaginaryUnit::from_vector(Quaternion{0.0, x, y, z}));
}

std::string stem_of(const std::string& path) {
    const auto dot = path.rfind('.');
    return dot == std::string::npos ? path : path.substr(0, dot);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::C: return "c-property";
        case Classification::AntiC: return "anti-c-property";
        default: return "neither";
    }
}

const char* intrinsic_name(IntrinsicClass c) {
    switch (c) {
        case IntrinsicClass::Intrinsic: return "intrinsic";
        case IntrinsicClass::AntiIntrinsic: return "anti-intrinsic";
        default: return "neither";
    }
}

int cmd_decompose(const std::string& input, const std::string& mode, const std::string& frame_spec,
                  const std::string& out_prefix) {
    const nlohmann::json j = load_json_file(input);
    const std::string prefix = out_prefix.empty() ? stem_of(input) : out_prefix;

    if (mode == "c-pair" || mode == "c-anti") {
        const HoloSeries f = holo_from_json(j);
        const auto parts = (mode == "c-pair") ? c_pair_decompose(f) : c_anti_decompose(f);
        save_json_file(prefix + "_part1.json", to_json(parts.first));
        save_json_file(prefix + "_part2.json", to_json(parts.second));
        std::cout << "classification: " << classification_name(classify(f)) << "\n";
        std::cout << "wrote " << prefix << "_part1.json and " << prefix << "_part2.json\n";
        return 0;
    }
    if (mode == "fourfold") {
        const SliceSeries f = slice_from_json(j);
        const Frame fr = parse_frame(frame_spec.empty() ? "i=e1" : frame_spec);
        const auto parts = fourfold_decompose(f, fr);
        for (int l = 0; l < 4; ++l)
            save_json_file(prefix + "_c" + std::to_string(l) + ".json",
                           to_json(parts[static_cast<std::size_t>(l)]));
        std::cout << "classification: " << intrinsic_name(is_intrinsic(f)) << "\n";
        std::cout << "wrote " << prefix << "_c0.json .. " << prefix << "_c3.json\n";
        return 0;
    }
    throw CLI::ValidationError("--mode must be c-pair, c-anti, or fourfold");
}

int cmd_kernel(const std::string& kind, int grid, int truncation, const std::string& frame_spec,
               const std::string& out, const std::string& matrix_out, const std::string& kernel_out,
               bool components) {
    const Frame fr = parse_frame(frame_spec.empty() ? "i=e1" : frame_spec);
    std::string csv;
    char line[512];

    auto grid_value = [&](int k, double radius) { return radius * (2.0 * k / (grid - 1) - 1.0); };

    if (kind == "complex") {
        if (!matrix_out.empty()) {
            const int N = truncation > 0 ? truncation : 10;
            const PlanarRule rule = build_disk_rule(N + 1, 2 * N + 2, fr);
            const ComplexKernel numeric = numeric_kernel_build(rule, N);
            std::ostringstream gram, coeff;
            export_csv(numeric.gram, gram);
            export_csv(numeric.coeff, coeff);
            write_text(matrix_out + ".gram.csv", gram.str());
            write_text(matrix_out + ".coeff.csv", coeff.str());
        }
        csv = "z_x,z_y,zeta_x,zeta_y,k_re,k_im,r,i\n";
        for (int a = 0; a < grid; ++a)
            for (int b = 0; b < grid; ++b) {
                const Complex z{grid_value(a, 0.6), grid_value(b, 0.6)};
                for (int c = 0; c < grid; ++c)
                    for (int e = 0; e < grid; ++e) {
                        const Complex zeta{grid_value(c, 0.6), grid_value(e, 0.6)};
                        const Complex k = disk_kernel_closed(z, zeta);
                        const auto [R, I] = kernel_ri_split(z, zeta, truncation > 0 ? truncation : 0);
                        std::snprintf(line, sizeof line,
                                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", z.real(),
                                      z.imag(), zeta.real(), zeta.imag(), k.real(), k.imag(), R.real(),
                                      I.real());
                        csv += line;
                    }
            }
        write_text(out, csv);
        return 0;
    }

    if (kind == "second") {
        const int N = truncation > 0 ? truncation : 32;
        csv = components ? "q_w,q_x,q_y,q_z,r_w,r_x,r_y,r_z,k_w,k_x,k_y,k_z,"
                           "k0_w,k0_x,k0_y,k0_z,k1_w,k1_x,k1_y,k1_z,k2_w,k2_x,k2_y,k2_z,k3_w,k3_x,k3_y,k3_z\n"
                         : "q_w,q_x,q_y,q_z,r_w,r_x,r_y,r_z,k_w,k_x,k_y,k_z\n";
        for (int a = 0; a < grid; ++a)
            for (int b = 0; b < grid; ++b) {
                const Quaternion q = Quaternion(grid_value(a, 0.45)) + grid_value(b, 0.45) * fr.i.value();
                for (int c = 0; c < grid; ++c)
                    for (int e = 0; e < grid; ++e) {
                        const Quaternion r = Quaternion(grid_value(c, 0.45)) + grid_value(e, 0.45) * fr.j.value();
                        const Quaternion k = second_kind_eval(q, r, N);
                        std::snprintf(line, sizeof line,
                                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                                      q.w, q.x, q.y, q.z, r.w, r.x, r.y, r.z, k.w, k.x, k.y, k.z);
                        csv += line;
                        if (components) {
                            const auto k4 = second_kind_components(q, r, fr, N);
                            for (const auto& kc : k4) {
                                std::snprintf(line, sizeof line, ",%.17g,%.17g,%.17g,%.17g", kc.w, kc.x,
                                              kc.y, kc.z);
                                csv += line;
                            }
                        }
                        csv += '\n';
                    }
            }
        write_text(out, csv);
        return 0;
    }

    if (kind == "first") {
        const int N = truncation > 0 ? truncation : 8;
        // smallest product orders exact to degree 2N
        const BallRule rule = build_ball_rule(N + 2, 2 * N + 4, std::max(6, 2 * N + 2));
        const FirstKindKernel kernel = gram_build(N, rule);
        if (!matrix_out.empty()) {
            std::ostringstream gram, coeff;
            export_csv(kernel.gram, gram);
            export_csv(kernel.coeff, coeff);
            write_text(matrix_out + ".gram.csv", gram.str());
            write_text(matrix_out + ".coeff.csv", coeff.str());
        }
        if (!kernel_out.empty()) save_json_file(kernel_out, to_json(kernel));
        csv = "q_w,q_x,q_y,q_z,r_w,r_x,r_y,r_z,b_w,b_x,b_y,b_z\n";
        for (int a = 0; a < grid; ++a)
            for (int b = 0; b < grid; ++b) {
                const Quaternion q = Quaternion(grid_value(a, 0.45)) + grid_value(b, 0.45) * fr.i.value();
                for (int c = 0; c < grid; ++c)
                    for (int e = 0; e < grid; ++e) {
                        const Quaternion r = Quaternion(grid_value(c, 0.45)) + grid_value(e, 0.45) * fr.j.value();
                        const Quaternion v = kernel.eval(q, r);
                        std::snprintf(line, sizeof line,
                                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                                      q.w, q.x, q.y, q.z, r.w, r.x, r.y, r.z, v.w, v.x, v.y, v.z);
                        csv += line;
                    }
            }
        write_text(out, csv);
        return 0;
    }
    throw CLI::ValidationError("--kind must be complex, second, or first");
}

int cmd_rule(const std::string& type, int n_radial, int n_angular, int n_sphere,
             const std::string& frame_spec, const std::string& out) {
    const Frame fr = parse_frame(frame_spec.empty() ? "i=e1" : frame_spec);
    std::ostringstream os;
    if (type == "disk") {
        export_csv(build_disk_rule(n_radial, n_angular, fr), os);
    } else if (type == "rect") {
        export_csv(build_rect_rule(n_radial, n_angular, fr), os);
    } else if (type == "ball") {
        export_csv(build_ball_rule(n_radial, n_angular, n_sphere), os);
    } else {
        throw CLI::ValidationError("--type must be disk, rect, or ball");
    }
    write_text(out, os.str());
    return 0;
}

std::string report_csv(const VerifyReport& report) {
    std::string csv = "id,params,max_residual,tolerance,pass\n";
    char line[512];
    for (const auto& rec : report.records) {
        std::snprintf(line, sizeof line, "%s,\"%s\",%.17g,", rec.id.c_str(), rec.params.c_str(),
                      rec.max_residual);
        csv += line;
        if (rec.informational) {
            csv += ",";
        } else {
            std::snprintf(line, sizeof line, "%.17g,", rec.tolerance);
            csv += line;
        }
        csv += rec.pass ? "true\n" : "false\n";
    }
    return csv;
}

int cmd_verify(const std::string& suite, int degree, double tol, const std::string& out,
               const std::string& format, bool mismatched) {
    VerifyOptions opts;
    opts.degree = degree;
    opts.tol_override = tol;
    opts.mismatched_truncation = mismatched;
    const VerifyReport report = run_suite(suite, opts);
    if (format == "csv")
        write_text(out, report_csv(report));
    else
        write_text(out, serialize_report(report));
    std::fprintf(stderr, "suite %s: %zu identities, %s in %.2fs\n", report.suite.c_str(),
                 report.records.size(), report.overall_pass ? "all pass" : "FAILURES", report.wall_seconds);
    for (const auto& rec : report.records)
        if (!rec.pass)
            std::fprintf(stderr, "  FAIL %s (residual %.3g, tolerance %.3g)\n", rec.id.c_str(),
                         rec.max_residual, rec.tolerance);
    return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"slice regular Bergman kernel toolkit"};
    app.require_subcommand(1);

    std::string input, frame_spec, mode, out, matrix_out, kernel_out, kind, rule_type;
    std::string suite = "all", format = "json";
    int degree = 5, truncation = 0, grid = 5;
    int n_radial = 16, n_angular = 32, n_sphere = 10;
    double tol = 0.0;
    bool components = false, mismatched = false;

    auto* dec = app.add_subcommand("decompose", "split a series into its conjugation components");
    dec->add_option("--input", input, "series JSON file")->required();
    dec->add_option("--mode", mode, "c-pair | c-anti | fourfold")->required();
    dec->add_option("--frame", frame_spec, "frame spec: i=e1 or i=x,y,z");
    dec->add_option("--out", out, "output path prefix");

    auto* ker = app.add_subcommand("kernel", "evaluate kernels over a grid and export CSV");
    ker->add_option("--kind", kind, "complex | second | first")->required();
    ker->add_option("--grid", grid, "points per axis")->check(CLI::Range(2, 64));
    ker->add_option("--truncation", truncation, "kernel truncation degree");
    ker->add_option("--frame", frame_spec, "frame spec");
    ker->add_option("--out", out, "CSV output path (- for stdout)");
    ker->add_option("--matrix-out", matrix_out, "prefix for gram/coeff CSV export");
    ker->add_option("--kernel-out", kernel_out, "JSON export of the first-kind kernel model");
    ker->add_flag("--components", components, "emit the four intrinsic kernel components");

    auto* rul = app.add_subcommand("rule", "export a quadrature rule as CSV");
    rul->add_option("--type", rule_type, "disk | rect | ball")->required();
    rul->add_option("--radial", n_radial, "radial order");
    rul->add_option("--angular", n_angular, "angular order (even)");
    rul->add_option("--sphere", n_sphere, "sphere grid order (even, ball only)");
    rul->add_option("--frame", frame_spec, "frame spec");
    rul->add_option("--out", out, "CSV output path (- for stdout)");

    auto* ver = app.add_subcommand("verify", "run the identity verification suites");
    ver->add_option("--suite", suite, "complex | slice | bergman | all");
    ver->add_option("--degree", degree, "polynomial degree")->check(CLI::Range(0, 12));
    ver->add_option("--tol", tol, "override every tolerance");
    ver->add_option("--out", out, "report path (- for stdout)");
    ver->add_option("--format", format, "json | csv");
    ver->add_flag("--mismatched-truncation", mismatched,
                  "add the deliberately failing truncation-mismatch record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dec->parsed()) return cmd_decompose(input, mode, frame_spec, out);
        if (ker->parsed())
            return cmd_kernel(kind, grid, truncation, frame_spec, out, matrix_out, kernel_out, components);
        if (rul->parsed()) return cmd_rule(rule_type, n_radial, n_angular, n_sphere, frame_spec, out);
        if (ver->parsed()) return cmd_verify(suite, degree, tol, out, format, mismatched);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
