#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dephasing/compare.hpp"
#include "dephasing/config.hpp"
#include "dephasing/constants.hpp"
#include "dephasing/csv.hpp"
#include "dephasing/curve.hpp"
#include "dephasing/figures.hpp"
#include "dephasing/oracle.hpp"
#include "dephasing/rates.hpp"
#include "dephasing/svg.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// 0 success / compare pass, 1 usage, 2 validation fail, 3 non-convergence
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct SharedOpts {
  std::string preset = "Si";
  std::string config_path;
  std::string out;
  std::string format = "csv";
  double quad_rel_tol = 1e-9;
  std::map<std::string, double> override_values;
  CLI::App* cmd = nullptr;

  void attach(CLI::App* c) {
    cmd = c;
    c->add_option("--preset", preset, "material preset name")->capture_default_str();
    c->add_option("--config", config_path,
                  "key=value config file (default: $PHONON_DEPHASING_CONFIG)");
    c->add_option("--out", out, "output path (default: stdout)");
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();
    c->add_option("--quad.rel_tol", quad_rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    for (const auto& key : dephasing::config_keys()) {
      override_values[key] = 0.0;
      c->add_option("--" + key, override_values[key],
                    "override config key " + key);
    }
  }

  dephasing::RunConfig load() const {
    std::vector<std::pair<std::string, std::string>> overrides;
    for (const auto& [key, value] : override_values) {
      if (cmd->count("--" + key) > 0)
        overrides.emplace_back(key, dephasing::format_full(value));
    }
    return dephasing::load_run_config(preset, config_path, overrides);
  }

  dephasing::QuadratureConfig quad() const {
    dephasing::QuadratureConfig q;
    q.rel_tol = quad_rel_tol;
    q.validate();
    return q;
  }
};

dephasing::HeaderMeta provenance_header(const std::string& command,
                                        const dephasing::RunConfig& rc) {
  dephasing::HeaderMeta h;
  h.emplace_back("tool", std::string("phonon-dephasing ") + kVersion);
  h.emplace_back("command", command);
  for (const auto& e : rc.provenance) {
    h.emplace_back("param." + e.key, e.value);
    h.emplace_back("source." + e.key, e.source);
  }
  return h;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    dephasing::write_text_file(out_path, content);
  }
}

void emit_family(const SharedOpts& opts, const dephasing::CurveFamily& family,
                 const dephasing::HeaderMeta& header, const std::string& title) {
  if (opts.format == "svg") {
    emit(opts.out, dephasing::curve_family_svg(family, title));
  } else {
    emit(opts.out, dephasing::curve_family_csv(family, header));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-Markovian phonon dephasing of a double-donor charge qubit: "
               "closed-form rates, decay profiles, and quadrature oracles"};
  app.require_subcommand(1);

  // rate
  auto* rate_cmd = app.add_subcommand(
      "rate", "dimensionless decoherence rate gamma/Gamma_T vs t/tau_d");
  SharedOpts rate_opts;
  rate_opts.attach(rate_cmd);
  double rate_tmax = 3.0;
  int rate_samples = 600;
  rate_cmd->add_option("--tmax", rate_tmax, "end time in units of tau_d")
      ->capture_default_str();
  rate_cmd->add_option("--samples", rate_samples, "samples per curve")
      ->capture_default_str();

  // decay
  auto* decay_cmd = app.add_subcommand(
      "decay", "coherence decay g(t) vs t/tau_d at the configured temperature");
  SharedOpts decay_opts;
  decay_opts.attach(decay_cmd);
  double decay_tmax = 3.0;
  int decay_samples = 600;
  decay_cmd->add_option("--tmax", decay_tmax, "end time in units of tau_d")
      ->capture_default_str();
  decay_cmd->add_option("--samples", decay_samples, "samples per curve")
      ->capture_default_str();

  // figure
  auto* figure_cmd =
      app.add_subcommand("figure", "reproduce a reference figure (fig1|fig2|fig3)");
  SharedOpts figure_opts;
  figure_opts.attach(figure_cmd);
  std::string figure_id;
  int figure_samples = 600;
  figure_cmd->add_option("id", figure_id, "figure id")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  figure_cmd->add_option("--samples", figure_samples, "samples per curve")
      ->capture_default_str();

  // compare
  auto* compare_cmd = app.add_subcommand(
      "compare", "closed-form rate vs radial quadrature oracle over a grid");
  SharedOpts compare_opts;
  compare_opts.attach(compare_cmd);
  double cmp_tolerance = 1e-6;
  int cmp_points = 300;
  double cmp_tmax = 3.0;
  std::vector<double> cmp_etas;
  std::vector<double> cmp_sigmas;
  compare_cmd->add_option("--tolerance", cmp_tolerance, "pass/fail deviation bound")
      ->capture_default_str();
  compare_cmd->add_option("--points", cmp_points, "time samples per curve")
      ->capture_default_str();
  compare_cmd->add_option("--tmax", cmp_tmax, "end time in units of tau_d")
      ->capture_default_str();
  compare_cmd->add_option("--eta", cmp_etas,
                          "mean relative Bohr radii (default 0.05 0.08 0.1)");
  compare_cmd->add_option("--sigma", cmp_sigmas,
                          "relative radius differences (default 0 0.1 0.5 1.0)");

  // shift
  auto* shift_cmd = app.add_subcommand(
      "shift", "phonon-induced shift of the electronic transition frequency");
  SharedOpts shift_opts;
  shift_opts.attach(shift_cmd);

  // material
  auto* material_cmd = app.add_subcommand("material", "preset registry");
  auto* material_list = material_cmd->add_subcommand("list", "list preset names");
  auto* material_show = material_cmd->add_subcommand("show", "show one preset");
  std::string material_name;
  material_show->add_option("name", material_name, "preset name")->required();
  material_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (rate_cmd->parsed()) {
      if (rate_samples < 2 || !(rate_tmax > 0)) {
        std::cerr << "usage error: need --samples >= 2 and --tmax > 0\n";
        return kExitUsage;
      }
      const auto rc = rate_opts.load();
      const auto scales = dephasing::derive_scales(rc.material, rc.geometry);
      const auto p =
          dephasing::rates::RateParams::for_temperature(scales, rc.temperature);
      dephasing::CurveFamily fam;
      fam.abscissa = dephasing::linspace(0.0, rate_tmax, rate_samples);
      fam.quantity = "gamma_over_Gamma_T";
      dephasing::Curve c;
      c.abscissa = fam.abscissa;
      c.values = dephasing::sample_parallel(
          [&](double x) { return dephasing::rates::gamma_hat(x, p); }, fam.abscissa);
      c.label = "gamma_over_Gamma_T";
      fam.series.push_back(std::move(c));
      auto header = provenance_header("rate", rc);
      header.emplace_back("tau_d_s", dephasing::format_full(scales.tau_d));
      header.emplace_back("Gamma_T_per_s", dephasing::format_full(p.Gamma_T));
      header.emplace_back("T0_K", dephasing::format_full(scales.T0));
      emit_family(rate_opts, fam, header, "decoherence rate");
      return kExitOk;
    }

    if (decay_cmd->parsed()) {
      if (decay_samples < 2 || !(decay_tmax > 0)) {
        std::cerr << "usage error: need --samples >= 2 and --tmax > 0\n";
        return kExitUsage;
      }
      const auto rc = decay_opts.load();
      const auto scales = dephasing::derive_scales(rc.material, rc.geometry);
      const auto p =
          dephasing::rates::RateParams::for_temperature(scales, rc.temperature);
      const auto quad = decay_opts.quad();
      dephasing::CurveFamily fam;
      fam.abscissa = dephasing::linspace(0.0, decay_tmax, decay_samples);
      fam.quantity = "decay_g";
      dephasing::Curve c;
      c.abscissa = fam.abscissa;
      const double t_ratio = rc.temperature / scales.T0;
      c.values = dephasing::sample_parallel(
          [&](double x) {
            return std::exp(t_ratio *
                            dephasing::rates::log_decay_profile(x, p, quad));
          },
          fam.abscissa);
      c.label = "g";
      fam.series.push_back(std::move(c));
      auto header = provenance_header("decay", rc);
      header.emplace_back("T_over_T0", dephasing::format_full(t_ratio));
      header.emplace_back("tau_d_s", dephasing::format_full(scales.tau_d));
      emit_family(decay_opts, fam, header, "coherence decay");
      return kExitOk;
    }

    if (figure_cmd->parsed()) {
      if (figure_samples < 2) {
        std::cerr << "usage error: need --samples >= 2\n";
        return kExitUsage;
      }
      const auto rc = figure_opts.load();
      const auto id = dephasing::figure_id_from_string(figure_id);
      const auto fam = dephasing::run_figure(id, figure_samples);
      auto header = provenance_header("figure " + figure_id, rc);
      emit_family(figure_opts, fam, header, figure_id);
      return kExitOk;
    }

    if (compare_cmd->parsed()) {
      if (compare_cmd->count("--eta") > 0 && cmp_etas.empty()) {
        std::cerr << "usage error: empty eta grid\n";
        return kExitUsage;
      }
      dephasing::CompareGrid grid;
      if (!cmp_etas.empty()) grid.etas = cmp_etas;
      if (compare_cmd->count("--sigma") > 0) grid.sigmas = cmp_sigmas;
      grid.points = cmp_points;
      grid.x_max = cmp_tmax;
      if (grid.etas.empty() || grid.sigmas.empty() || grid.points < 2) {
        std::cerr << "usage error: compare grid is empty\n";
        return kExitUsage;
      }
      const auto rc = compare_opts.load();
      const auto report =
          dephasing::run_compare(grid, cmp_tolerance, compare_opts.quad());
      auto header = provenance_header("compare", rc);
      header.emplace_back("elapsed_seconds",
                          dephasing::format_full(report.elapsed_seconds));
      emit(compare_opts.out, dephasing::compare_report_csv(report, header));
      std::cerr << (report.pass ? "PASS" : "FAIL") << ": max deviation "
                << report.max_deviation << " vs tolerance " << report.tolerance
                << (report.all_converged ? "" : " (non-converged points present)")
                << "\n";
      if (!report.all_converged) return kExitNumerical;
      return report.pass ? kExitOk : kExitValidation;
    }

    if (shift_cmd->parsed()) {
      if (shift_opts.format == "svg") {
        std::cerr << "usage error: shift has no svg output\n";
        return kExitUsage;
      }
      const auto rc = shift_opts.load();
      const auto result =
          dephasing::oracle::energy_shift(rc.material, rc.geometry, shift_opts.quad());
      std::string content;
      {
        std::string s;
        for (const auto& [k, v] : provenance_header("shift", rc))
          s += "# " + k + "=" + v + "\n";
        s += "quantity,value\n";
        s += "shift_rad_per_s," + dephasing::format_full(result.value) + "\n";
        s += "shift_eV," +
             dephasing::format_full(dephasing::constants::hbar * result.value /
                                    dephasing::constants::electron_volt) +
             "\n";
        s += "quadrature_error," + dephasing::format_full(result.error) + "\n";
        s += "imaginary_residue," +
             dephasing::format_full(result.imaginary_residue) + "\n";
        content = std::move(s);
      }
      emit(shift_opts.out, content);
      return kExitOk;
    }

    if (material_cmd->parsed()) {
      if (material_list->parsed()) {
        for (const auto& name : dephasing::material_preset_names())
          std::cout << name << "\n";
        return kExitOk;
      }
      const auto m = dephasing::material_preset(material_name);
      std::cout << "name=" << m.name << "\n"
                << "rho_m_kg_per_m3=" << dephasing::format_full(m.mass_density)
                << "\n"
                << "s_m_per_s=" << dephasing::format_full(m.sound_speed) << "\n"
                << "D_eV="
                << dephasing::format_full(dephasing::constants::joule_to_ev(
                       m.deformation_constant))
                << "\n";
      return kExitOk;
    }
  } catch (const dephasing::QuadratureError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dephasing::ConsistencyError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dephasing::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
