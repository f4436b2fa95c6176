// cavspin command line: solve | scan | grid | interact.
//
// Exit codes: 0 success, 1 physics-domain failure (no bound state, no such
// root, non-convergence), 2 usage error (bad flags, unwritable output,
// oversized grid). All floating-point output is fixed at 12 significant
// digits so identical invocations produce byte-identical files.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <cavspin/cavspin.h>

namespace {

std::string fmt12(double v) {
    if (v == 0.0) v = std::abs(v);  // print -0 as 0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

// Ordered JSON object writer; values are pre-formatted.
class JsonObject {
public:
    void number(const std::string& key, double v) { items_.push_back({key, fmt12(v), false}); }
    void raw(const std::string& key, const std::string& v) { items_.push_back({key, v, false}); }
    void string(const std::string& key, const std::string& v) { items_.push_back({key, v, true}); }
    std::string str(int indent = 0) const {
        const std::string pad(indent + 2, ' ');
        std::string out = "{\n";
        for (size_t i = 0; i < items_.size(); ++i) {
            out += pad + "\"" + items_[i].key + "\": ";
            out += items_[i].quoted ? "\"" + items_[i].value + "\"" : items_[i].value;
            if (i + 1 < items_.size()) out += ",";
            out += "\n";
        }
        out += std::string(indent, ' ') + "}";
        return out;
    }

private:
    struct Item {
        std::string key, value;
        bool quoted;
    };
    std::vector<Item> items_;
};

struct CommonFlags {
    double radius_nm = 0.0;
    double half_height_nm = 0.0;
    double potential_mev = 0.0;
    int n = 1, l = 0, m = 1;
    std::string output;
    std::string format;
};

void add_common(CLI::App* cmd, CommonFlags& f, const std::string& default_format) {
    cmd->add_option("--radius-nm", f.radius_nm, "Cavity radius R in nm")->required();
    cmd->add_option("--half-height-nm", f.half_height_nm, "Half height d in nm")->required();
    cmd->add_option("--potential-mev", f.potential_mev, "Radial barrier height U in meV")
        ->required();
    cmd->add_option("--n", f.n, "Radial quantum number (>= 1)")->capture_default_str();
    cmd->add_option("--l", f.l, "Azimuthal quantum number (>= 0)")->capture_default_str();
    cmd->add_option("--m", f.m, "Axial quantum number (odd, >= 1)")->capture_default_str();
    cmd->add_option("--output", f.output, "Write to this path instead of standard output");
    f.format = default_format;
    cmd->add_option("--format", f.format, "Output format")->capture_default_str();
}

// returns 0 if flags are usable, 2 otherwise
int check_common(const CommonFlags& f, const std::string& required_format) {
    if (!(f.radius_nm > 0.0) || !(f.half_height_nm > 0.0) || !(f.potential_mev > 0.0)) {
        std::cerr << "error: radius, half-height and potential must be positive\n";
        return 2;
    }
    if (f.n < 1 || f.l < 0) {
        std::cerr << "error: need n >= 1 and l >= 0\n";
        return 2;
    }
    if (f.m < 1 || f.m % 2 == 0) {
        std::cerr << "error: m must be odd and >= 1\n";
        return 2;
    }
    if (f.format != required_format) {
        std::cerr << "error: this command only supports --format " << required_format << "\n";
        return 2;
    }
    return 0;
}

cavspin_params to_params(const CommonFlags& f) {
    cavspin_params p{};
    p.radius_nm = f.radius_nm;
    p.half_height_nm = f.half_height_nm;
    p.potential_ev = f.potential_mev * 1e-3;
    p.n_radial = f.n;
    p.l_azimuthal = f.l;
    p.m_axial = f.m;
    return p;
}

int exit_code_for(cavspin_status st) {
    std::cerr << "error: " << cavspin_last_error() << " (" << cavspin_status_name(st) << ")\n";
    return st == CAVSPIN_ERR_INVALID_ARGUMENT ? 2 : 1;
}

// Writes text to --output or stdout; returns 0, or 2 if the path is unwritable.
int emit(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path: " << output << "\n";
        return 2;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "error: write failed: " << output << "\n";
        return 2;
    }
    return 0;
}

struct StateHolder {
    cavspin_state* s = nullptr;
    ~StateHolder() { cavspin_state_free(s); }
};

int run_solve(const CommonFlags& f) {
    if (int rc = check_common(f, "json")) return rc;
    const cavspin_params p = to_params(f);
    StateHolder h;
    if (cavspin_status st = cavspin_solve(&p, nullptr, &h.s)) return exit_code_for(st);
    cavspin_state_info info{};
    if (cavspin_status st = cavspin_state_get_info(h.s, &info)) return exit_code_for(st);
    cavspin_interaction_report r{};
    if (cavspin_status st = cavspin_interaction(h.s, 1.0, &r)) return exit_code_for(st);

    JsonObject j;
    j.number("epsilon_mev", info.epsilon_ev * 1e3);
    j.number("kappa", info.kappa);
    j.number("zeta_per_m", info.zeta_per_nm * 1e9);
    j.number("xi_per_m", info.xi_per_nm * 1e9);
    j.number("k_axial_per_m", info.k_axial_per_nm * 1e9);
    j.number("n2_per_nm3", info.n_squared_per_nm3);
    j.number("wave_fraction_I", r.wave_fraction_i);
    j.number("wave_fraction_II", r.wave_fraction_ii);
    j.number("particle_fraction_I", r.particle_fraction_i);
    j.number("particle_fraction_II", r.particle_fraction_ii);
    j.number("unity_ratio", r.unity_ratio);
    j.number("boundary_residual", info.boundary_residual);
    return emit(f.output, j.str() + "\n");
}

int run_scan(const CommonFlags& f, int points) {
    if (int rc = check_common(f, "csv")) return rc;
    if (points < 2) {
        std::cerr << "error: --points must be >= 2\n";
        return 2;
    }
    const cavspin_params p = to_params(f);
    std::vector<double> eps(points), res(points);
    if (cavspin_status st = cavspin_scan(&p, nullptr, eps.size(), eps.data(), res.data()))
        return exit_code_for(st);
    std::string csv = "epsilon_mev,boundary_residual\n";
    for (int i = 0; i < points; ++i)
        csv += fmt12(eps[i] * 1e3) + "," + fmt12(res[i]) + "\n";
    return emit(f.output, csv);
}

struct GridFlags {
    std::string grid = "200x200";
    double rho_max_nm = 0.0;  // 0: use 2 R
    bool cartesian = false;
    bool si_charge = false;
    long max_points = 4000000;
};

// "NRxNZ" or "NRxNZ:NPHI"
bool parse_grid(const std::string& text, int& n_rho, int& n_z, int& n_phi) {
    int nr = 0, nz = 0, np = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%dx%d:%d%c", &nr, &nz, &np, &extra) == 3) {
        n_rho = nr;
        n_z = nz;
        n_phi = np;
        return true;
    }
    if (std::sscanf(text.c_str(), "%dx%d%c", &nr, &nz, &extra) == 2) {
        n_rho = nr;
        n_z = nz;
        n_phi = 0;
        return true;
    }
    return false;
}

int run_grid(const CommonFlags& f, const GridFlags& gf) {
    if (int rc = check_common(f, "csv")) return rc;
    int n_rho = 0, n_z = 0, n_phi = 0;
    if (!parse_grid(gf.grid, n_rho, n_z, n_phi) || n_rho < 2 || n_z < 2) {
        std::cerr << "error: --grid must be NRxNZ or NRxNZ:NPHI with NR, NZ >= 2\n";
        return 2;
    }
    if (gf.cartesian && n_phi == 0) n_phi = 64;
    if (gf.cartesian && n_phi < 2) {
        std::cerr << "error: cartesian export needs NPHI >= 2\n";
        return 2;
    }
    const long total = static_cast<long>(n_rho) * n_z * (gf.cartesian ? n_phi : 1);
    if (total > gf.max_points) {
        std::cerr << "error: grid has " << total << " points, above the --max-grid-points cap of "
                  << gf.max_points << "\n";
        return 2;
    }
    if (gf.rho_max_nm < 0.0) {
        std::cerr << "error: --rho-max-nm must be positive\n";
        return 2;
    }
    const double rho_max = gf.rho_max_nm > 0.0 ? gf.rho_max_nm : 2.0 * f.radius_nm;

    const cavspin_params p = to_params(f);
    StateHolder h;
    if (cavspin_status st = cavspin_solve(&p, nullptr, &h.s)) return exit_code_for(st);

    const double e_c_per_nm3_to_c_per_m3 = 1.602176634e-19 * 1e27;
    std::string csv;
    if (gf.cartesian) {
        csv = "x_nm,y_nm,z_nm,charge_e_per_nm3,jx,jy,jz,probability";
    } else {
        csv = "rho_nm,z_nm,charge_e_per_nm3,jphi,probability";
    }
    if (gf.si_charge) csv += ",charge_c_per_m3";
    csv += "\n";

    for (int i = 0; i < n_rho; ++i) {
        const double rho = rho_max * i / (n_rho - 1);
        const int phis = gf.cartesian ? n_phi : 1;
        for (int k = 0; k < phis; ++k) {
            const double phi = gf.cartesian ? 2.0 * M_PI * k / n_phi : 0.0;
            for (int jz = 0; jz < n_z; ++jz) {
                const double z = -f.half_height_nm + 2.0 * f.half_height_nm * jz / (n_z - 1);
                cavspin_field_sample fs{};
                if (cavspin_status st = cavspin_field_at(h.s, rho, z, &fs)) return exit_code_for(st);
                if (gf.cartesian) {
                    csv += fmt12(rho * std::cos(phi)) + "," + fmt12(rho * std::sin(phi)) + "," +
                           fmt12(z) + "," + fmt12(fs.charge_e_per_nm3) + "," +
                           fmt12(fs.j_phi * -std::sin(phi)) + "," + fmt12(fs.j_phi * std::cos(phi)) +
                           "," + fmt12(0.0) + "," + fmt12(fs.probability_per_nm3);
                } else {
                    csv += fmt12(rho) + "," + fmt12(z) + "," + fmt12(fs.charge_e_per_nm3) + "," +
                           fmt12(fs.j_phi) + "," + fmt12(fs.probability_per_nm3);
                }
                if (gf.si_charge) csv += "," + fmt12(fs.charge_e_per_nm3 * e_c_per_nm3_to_c_per_m3);
                csv += "\n";
            }
        }
    }
    if (int rc = emit(f.output, csv)) return rc;

    // Peak and 2/3-of-peak iso-region summary on the same grid resolution.
    cavspin_torus_stats t{};
    if (cavspin_status st = cavspin_torus_stats_compute(h.s, n_rho, n_z, rho_max, 2.0 / 3.0, &t))
        return exit_code_for(st);
    std::ostream& summary = f.output.empty() ? std::cerr : std::cout;
    summary << "peak_abs_jphi=" << fmt12(t.peak_abs_jphi) << " at rho_nm=" << fmt12(t.peak_rho_nm)
            << " z_nm=" << fmt12(t.peak_z_nm) << "\n"
            << "iso_level=" << fmt12(t.iso_level)
            << " iso_fraction_inside=" << fmt12(t.iso_fraction_inside) << "\n";
    return 0;
}

int run_interact(const CommonFlags& f, double b_tesla, const std::string& region) {
    if (int rc = check_common(f, "json")) return rc;
    cavspin_mask mask;
    if (region == "I") mask = CAVSPIN_MASK_I;
    else if (region == "II") mask = CAVSPIN_MASK_II;
    else if (region == "all") mask = CAVSPIN_MASK_ALL;
    else {
        std::cerr << "error: --region must be one of I, II, all\n";
        return 2;
    }
    const cavspin_params p = to_params(f);
    StateHolder h;
    if (cavspin_status st = cavspin_solve(&p, nullptr, &h.s)) return exit_code_for(st);
    cavspin_interaction_report r{};
    if (cavspin_status st = cavspin_interaction(h.s, b_tesla, &r)) return exit_code_for(st);
    double wave_sel = 0.0, part_sel = 0.0;
    if (cavspin_status st = cavspin_interaction_masked(h.s, b_tesla, mask, &wave_sel, &part_sel))
        return exit_code_for(st);

    // Built-in reference fractions for the comparison block.
    const double ref_wave_i = 0.71, ref_wave_ii = 0.29, ref_part_i = 0.85, ref_part_ii = 0.15;

    JsonObject j;
    j.number("b_tesla", r.b_tesla);
    j.number("mu_b_b_ev", r.mu_b_b_ev);
    j.string("region", region);
    j.number("wave_energy_ev", wave_sel);
    j.number("particle_energy_ev", part_sel);
    j.number("wave_total_ev", r.wave_total_ev);
    j.number("wave_total_signed_ev", r.wave_total_signed_ev);
    j.number("wave_region_I_ev", r.wave_region_i_ev);
    j.number("wave_region_II_ev", r.wave_region_ii_ev);
    j.number("particle_total_ev", r.particle_total_ev);
    j.number("particle_region_I_ev", r.particle_region_i_ev);
    j.number("particle_region_II_ev", r.particle_region_ii_ev);
    j.number("wave_total_over_mu_b_b", b_tesla != 0.0 ? r.wave_total_ev / r.mu_b_b_ev : 0.0);
    j.number("particle_total_over_mu_b_b", b_tesla != 0.0 ? r.particle_total_ev / r.mu_b_b_ev : 0.0);
    j.number("wave_fraction_I", r.wave_fraction_i);
    j.number("wave_fraction_II", r.wave_fraction_ii);
    j.number("particle_fraction_I", r.particle_fraction_i);
    j.number("particle_fraction_II", r.particle_fraction_ii);
    j.number("unity_ratio", r.unity_ratio);
    j.number("quad_wave_fraction_I", r.quad_wave_fraction_i);
    j.number("quad_wave_fraction_II", r.quad_wave_fraction_ii);
    j.number("quad_particle_fraction_I", r.quad_particle_fraction_i);
    j.number("quad_particle_fraction_II", r.quad_particle_fraction_ii);
    j.number("quad_unity_ratio", r.quad_unity_ratio);
    j.number("route_disagreement", r.route_disagreement);

    JsonObject cmp;
    cmp.number("wave_fraction_I_ref", ref_wave_i);
    cmp.number("wave_fraction_I_diff", r.wave_fraction_i - ref_wave_i);
    cmp.number("wave_fraction_II_ref", ref_wave_ii);
    cmp.number("wave_fraction_II_diff", r.wave_fraction_ii - ref_wave_ii);
    cmp.number("particle_fraction_I_ref", ref_part_i);
    cmp.number("particle_fraction_I_diff", r.particle_fraction_i - ref_part_i);
    cmp.number("particle_fraction_II_ref", ref_part_ii);
    cmp.number("particle_fraction_II_diff", r.particle_fraction_ii - ref_part_ii);
    j.raw("reference_comparison", cmp.str(2));

    return emit(f.output, j.str() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cavspin: bound electron states in a cylindrical cavity with a finite radial barrier, "
        "their circulating current densities, and magnetic-interaction energies.\n"
        "Sign convention: the stored current density of a spin-up state is negative (it "
        "circulates against the +phi direction), so wave-picture interaction energies are "
        "negative for B > 0; reported totals are magnitudes unless marked 'signed'."};
    app.require_subcommand(1);

    CommonFlags solve_f, scan_f, grid_f, interact_f;
    int scan_points = 2000;
    GridFlags grid_extra;
    double b_tesla = 1.0;
    std::string region = "all";

    CLI::App* solve = app.add_subcommand("solve", "Solve one eigenstate, emit a JSON summary");
    add_common(solve, solve_f, "json");

    CLI::App* scan = app.add_subcommand("scan", "CSV of the matching residual over the bound window");
    add_common(scan, scan_f, "csv");
    scan->add_option("--points", scan_points, "Number of scan samples")->capture_default_str();

    CLI::App* grid = app.add_subcommand("grid", "Sample densities on a grid, emit CSV");
    add_common(grid, grid_f, "csv");
    grid->add_option("--grid", grid_extra.grid, "Grid size NRxNZ or NRxNZ:NPHI")
        ->capture_default_str();
    grid->add_option("--rho-max-nm", grid_extra.rho_max_nm, "Radial extent (default 2 R)");
    grid->add_flag("--cartesian", grid_extra.cartesian,
                   "Emit x,y,z rows with (jx, jy) = jphi (-sin phi, cos phi)");
    grid->add_flag("--si-charge", grid_extra.si_charge, "Append a charge column in C/m^3");
    grid->add_option("--max-grid-points", grid_extra.max_points, "Refuse larger grids")
        ->capture_default_str();

    CLI::App* interact = app.add_subcommand("interact", "Interaction-energy report, JSON");
    add_common(interact, interact_f, "json");
    interact->add_option("--b-tesla", b_tesla, "Uniform field strength")->capture_default_str();
    interact->add_option("--region", region, "Mask: I, II or all")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (solve->parsed()) return run_solve(solve_f);
    if (scan->parsed()) return run_scan(scan_f, scan_points);
    if (grid->parsed()) return run_grid(grid_f, grid_extra);
    if (interact->parsed()) return run_interact(interact_f, b_tesla, region);
    return 2;
}
