#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptverify/report.hpp"
#include "ptverify/sweep.hpp"

namespace {

using namespace ptverify;

constexpr int kExitOk = 0;
constexpr int kExitContractViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string model;
    std::string format = "table";
    std::string out_path;
    bool degrees = false;
};

double to_radians(double angle, bool degrees) {
    return degrees ? angle * M_PI / 180.0 : angle;
}

/// "min:max:steps" or a single value (steps = 1).
Range parse_range(const std::string& text) {
    Range rg;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        rg.min = rg.max = std::stod(text);
        rg.steps = 1;
        return rg;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw InvalidInputError("range needs min:max:steps");
    std::size_t used = 0;
    rg.min = std::stod(text.substr(0, c1));
    rg.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const std::string steps_text = text.substr(c2 + 1);
    rg.steps = std::stoi(steps_text, &used);
    if (used != steps_text.size()) throw InvalidInputError("bad step count: " + steps_text);
    if (!rg.valid()) throw InvalidInputError("range needs min <= max and steps >= 1");
    return rg;
}

int emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
        return kExitUsage;
    }
    out << text;
    return out ? kExitOk : kExitUsage;
}

int run_verify(const CommonOpts& opts, double r, double s, std::optional<double> t,
               double theta) {
    VerifyReport rep;
    if (opts.model == "h5") {
        if (!t) {
            std::cerr << "error: --model h5 requires -t\n";
            return kExitUsage;
        }
        rep = verify_point(Params5{r, s, *t, theta});
    } else {
        rep = verify_point(Params4{r, s, theta});
    }
    const int io = emit(opts, opts.format == "json" ? render_json(rep) : render_table(rep));
    if (io != kExitOk) return io;
    return rep.contracts_ok() ? kExitOk : kExitContractViolation;
}

int run_sweep_cmd(const CommonOpts& opts, const std::string& r_text,
                  const std::string& s_text, const std::string& t_text,
                  const std::string& theta_text) {
    SweepSpec spec;
    spec.model = opts.model == "h5" ? SweepModel::H5 : SweepModel::H4;
    spec.r = parse_range(r_text);
    spec.s = parse_range(s_text);
    spec.theta = parse_range(theta_text);
    spec.theta.min = to_radians(spec.theta.min, opts.degrees);
    spec.theta.max = to_radians(spec.theta.max, opts.degrees);
    if (spec.model == SweepModel::H5) {
        if (t_text.empty()) {
            std::cerr << "error: --model h5 requires -t\n";
            return kExitUsage;
        }
        spec.t = parse_range(t_text);
    }

    if (opts.out_path.empty()) {
        run_sweep(spec, std::cout);
        return kExitOk;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << opts.out_path << "' for writing\n";
        return kExitUsage;
    }
    run_sweep(spec, out);
    if (!out) {
        std::cerr << "error: short write to '" << opts.out_path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os << format_full(z.real()) << (z.imag() < 0.0 ? " - " : " + ")
       << format_full(std::abs(z.imag())) << "i";
    return os.str();
}

std::string fmt_matrix(const Matrix2& m, const std::string& name) {
    std::ostringstream os;
    os << name << " = [[" << fmt_complex(m.m11) << ", " << fmt_complex(m.m12) << "],\n";
    os << std::string(name.size() + 4, ' ') << "[" << fmt_complex(m.m21) << ", "
       << fmt_complex(m.m22) << "]]\n";
    return os.str();
}

nlohmann::ordered_json json_matrix(const Matrix2& m) {
    auto jc = [](Complex z) {
        return nlohmann::ordered_json{{"re", z.real()}, {"im", z.imag()}};
    };
    return {{jc(m.m11), jc(m.m12)}, {jc(m.m21), jc(m.m22)}};
}

int run_decompose(const CommonOpts& opts, double r, double s, std::optional<double> t,
                  double theta) {
    Matrix2 h;
    std::optional<Params4> q;
    if (opts.model == "h5") {
        if (!t) {
            std::cerr << "error: --model h5 requires -t\n";
            return kExitUsage;
        }
        h = build_h5(Params5{r, s, *t, theta});
    } else {
        q = Params4{r, s, theta};
        h = build_h4(*q);
    }

    const PolarFactors uf = polar_completed(h);
    const double recon = (uf.u * uf.r - h).frobenius();
    const double unit = (uf.u.adjoint() * uf.u - Matrix2::identity()).frobenius();
    const auto eg = detail::hermitian_eigs(uf.r);

    std::string regime_line;
    std::optional<double> regime_dist;
    if (q) {
        const RegimeOperator reg = regime_operator(*q);
        regime_dist = (uf.r - reg.matrix).frobenius();
        regime_line = to_string(reg.regime);
    }

    std::string text;
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["model"] = opts.model;
        j["h"] = json_matrix(h);
        j["u"] = json_matrix(uf.u);
        j["r"] = json_matrix(uf.r);
        j["reconstruction"] = recon;
        j["unitarity"] = unit;
        j["r_eigenvalues"] = {eg.lam_plus, eg.lam_minus};
        j["regime"] = regime_line.empty() ? nlohmann::ordered_json(nullptr)
                                          : nlohmann::ordered_json(regime_line);
        j["regime_distance"] =
            regime_dist ? nlohmann::ordered_json(*regime_dist) : nullptr;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << fmt_matrix(h, "H") << fmt_matrix(uf.u, "U") << fmt_matrix(uf.r, "R");
        os << "||U R - H||   = " << format_full(recon) << "\n";
        os << "||U+U - I||   = " << format_full(unit) << "\n";
        os << "R eigenvalues = " << format_full(eg.lam_plus) << ", "
           << format_full(eg.lam_minus) << "\n";
        if (q) {
            os << "positive-factor form: " << regime_line
               << "  (distance " << format_full(*regime_dist) << ")\n";
            if (regime_line == "r=s")
                os << "note: r == s boundary, R is singular; U completed on the null space\n";
        }
        text = os.str();
    }
    const int io = emit(opts, text);
    if (io != kExitOk) return io;

    const double tol = kPredicateTol * (1.0 + h.frobenius());
    return (recon <= tol && unit <= kPredicateTol) ? kExitOk : kExitContractViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for 2x2 PT-symmetric matrix models"};
    app.require_subcommand(1);

    CommonOpts opts;
    double r = 0.0, s = 0.0, theta = 0.0;
    std::optional<double> t;
    std::string r_text, s_text, t_text, theta_text;

    auto add_common = [&](CLI::App* cmd, bool as_range) {
        cmd->add_option("--model", opts.model, "matrix family: h5 or h4")
            ->required()
            ->check(CLI::IsMember({"h5", "h4"}));
        cmd->add_flag("--deg", opts.degrees, "interpret theta in degrees");
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--out", opts.out_path, "write output to this path");
        if (as_range) {
            cmd->add_option("-r", r_text, "r value or min:max:steps")->required();
            cmd->add_option("-s", s_text, "s value or min:max:steps")->required();
            cmd->add_option("-t", t_text, "t value or min:max:steps (h5 only)");
            cmd->add_option("--theta", theta_text, "theta value or min:max:steps")->required();
        } else {
            cmd->add_option("-r", r, "diagonal magnitude r")->required();
            cmd->add_option("-s", s, "off-diagonal s")->required();
            cmd->add_option("-t", t, "off-diagonal t (h5 only)");
            cmd->add_option("--theta", theta, "diagonal phase angle")->required();
        }
    };

    CLI::App* verify = app.add_subcommand("verify", "run every check at one parameter point");
    add_common(verify, false);
    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep written as CSV");
    add_common(sweep, true);
    CLI::App* decompose = app.add_subcommand("decompose", "print the polar factors");
    add_common(decompose, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(opts, r, s, t, to_radians(theta, opts.degrees));
        if (sweep->parsed()) return run_sweep_cmd(opts, r_text, s_text, t_text, theta_text);
        return run_decompose(opts, r, s, t, to_radians(theta, opts.degrees));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
