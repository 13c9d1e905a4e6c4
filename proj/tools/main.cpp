// Batch front end: parse lattice/module/ambient files, dispatch to the
// verifiers, print human-readable or machine-readable reports.
//
// Exit codes: 0 verified/success, 1 failed verification, 2 input or
// precondition error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prym/bundle.hpp"
#include "prym/chow.hpp"
#include "prym/io.hpp"
#include "prym/presets.hpp"

using namespace prym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitInputError = 2;

struct Output {
    bool json = false;

    int emit(const Report& rep) const {
        if (json)
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.to_text();
        if (!rep.applicable) return kExitInputError;
        return rep.verdict() ? kExitOk : kExitVerdictFail;
    }
    void emit_json(const nlohmann::ordered_json& j) const { std::cout << j.dump(2) << "\n"; }
};

IntMat sublattice_or_empty(const LatticeFile& f, const std::string& name) {
    auto it = f.sublattices.find(name);
    if (it != f.sublattices.end()) return it->second;
    return IntMat(f.lattice.rank(), 0);
}

std::vector<Int> parse_int_list(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InputError("empty entry in integer list");
        out.emplace_back(tok);
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

std::vector<long long> parse_ll_list(const std::string& csv) {
    std::vector<long long> out;
    for (const auto& v : parse_int_list(csv)) out.push_back(v.convert_to<long long>());
    return out;
}

nlohmann::ordered_json decomposition_json(const GModuleDecomposition& d) {
    nlohmann::ordered_json j;
    j["r0"] = d.r0;
    j["r_plus"] = d.r_plus;
    j["r_minus"] = d.r_minus;
    j["decomposition"] = d.str();
    j["adapted_basis"] = grid_to_json(d.adapted_basis);
    return j;
}

nlohmann::ordered_json fab_json(const FinAbGroup& g) {
    nlohmann::ordered_json j;
    j["free_rank"] = g.free_rank;
    nlohmann::ordered_json f = nlohmann::ordered_json::array();
    for (const auto& d : g.factors) f.push_back(int_to_json(d));
    j["invariant_factors"] = f;
    j["name"] = g.str();
    return j;
}

FreeGModule load_gmodule(const std::string& path) {
    nlohmann::json j = parse_json_input(path);
    if (j.contains("sigma") && !j.contains("gram")) return gmodule_from_json(j);
    if (j.contains("gram")) {
        LatticeFile f = lattice_file_from_json(j);
        return f.lattice.gmodule();
    }
    throw InputError("input is neither a G-module nor a lattice file");
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for integer lattices with involution"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "machine-readable output");

    // ---- decompose -------------------------------------------------------
    std::string dec_file = "-";
    auto* cmd_dec = app.add_subcommand("decompose", "canonical G-module decomposition");
    cmd_dec->add_option("file", dec_file, "G-module or lattice file (- for stdin)");

    // ---- cohomology ------------------------------------------------------
    std::string coh_file = "-";
    long coh_deg = 1;
    auto* cmd_coh = app.add_subcommand("cohomology", "group cohomology of the order-2 group");
    cmd_coh->add_option("file", coh_file, "G-module or lattice file");
    cmd_coh->add_option("--degree", coh_deg, "cohomological degree")->required();

    // ---- prym ------------------------------------------------------------
    std::string prym_file = "-";
    auto* cmd_prym = app.add_subcommand(
        "prym", "Prym part of a G-module, or Prym lattice of a lattice file (uses sublattice M)");
    cmd_prym->add_option("file", prym_file, "G-module or lattice file");

    // ---- discriminant ----------------------------------------------------
    std::string disc_file = "-";
    bool disc_use_m = false;
    auto* cmd_disc = app.add_subcommand("discriminant", "discriminant G-module M*/M");
    cmd_disc->add_option("file", disc_file, "lattice file");
    cmd_disc->add_flag("--sublattice-m", disc_use_m,
                       "use the file's sublattice M instead of the whole lattice");

    // ---- modify ----------------------------------------------------------
    std::string mod_file = "-", mod_x, mod_sign = "+";
    auto* cmd_mod = app.add_subcommand("modify", "rank-one (+/-)-modification of the form");
    cmd_mod->add_option("file", mod_file, "lattice file");
    cmd_mod->add_option("--x", mod_x, "vector, comma separated")->required();
    cmd_mod->add_option("--sign", mod_sign, "+ or -");

    // ---- verify-rank / verify-det ----------------------------------------
    std::string vr_file = "-";
    long vr_r = -1;
    bool vr_free = false;
    auto* cmd_vr = app.add_subcommand("verify-rank", "rank formula for the Prym part");
    cmd_vr->add_option("file", vr_file, "lattice file with sublattice M");
    cmd_vr->add_option("--fixed-points", vr_r, "fixed-point count r");
    cmd_vr->add_flag("--free", vr_free, "free-involution mode");

    std::string vd_file = "-";
    long vd_r = -1;
    bool vd_free = false;
    auto* cmd_vd = app.add_subcommand("verify-det", "determinant formula for the Prym lattice");
    cmd_vd->add_option("file", vd_file, "lattice file with sublattice M");
    cmd_vd->add_option("--fixed-points", vd_r, "fixed-point count r");
    cmd_vd->add_flag("--free", vd_free, "free-involution mode");

    // ---- verify-correspondence --------------------------------------------
    std::string vc_file = "-";
    auto* cmd_vc = app.add_subcommand(
        "verify-correspondence",
        "checks Psi Phi = -2, Phi Psi = sigma - 1 and the induced form relation; input holds "
        "lambda_x, w (lattice file with sublattice M), phi, psi");
    cmd_vc->add_option("file", vc_file, "combined JSON input");

    // ---- brauer ------------------------------------------------------------
    auto* cmd_br = app.add_subcommand("brauer", "torsion-level Brauer computations");
    std::string brk_file = "-";
    auto* cmd_brk = cmd_br->add_subcommand("k", "K = coker{H^1(G, L) -> H^1(G, L/Hdg)}");
    cmd_brk->add_option("file", brk_file, "lattice file with sublattice Hdg");
    std::string brs_file = "-";
    long brs_level = 0;
    auto* cmd_brs = cmd_br->add_subcommand("seq", "exactness of the two Brauer sequences");
    cmd_brs->add_option("file", brs_file, "lattice file with sublattices M and Hdg");
    cmd_brs->add_option("--level", brs_level, "torsion level n")->required();
    cmd_br->require_subcommand(1);

    // ---- surface -----------------------------------------------------------
    long surf_h2 = -1, surf_r = -1;
    bool surf_free = false;
    auto* cmd_surf = app.add_subcommand("surface", "quotient-surface invariant report");
    cmd_surf->add_option("--h2", surf_h2, "second Betti number of S")->required();
    cmd_surf->add_option("--r", surf_r, "number of isolated fixed points");
    cmd_surf->add_flag("--free", surf_free, "fixed-point-free involution");

    // ---- preset ------------------------------------------------------------
    auto* cmd_preset = app.add_subcommand("preset", "built-in lattices and data");
    cmd_preset->require_subcommand(1);
    std::string preset_export;
    auto* cmd_pc = cmd_preset->add_subcommand("cubic-m", "rank-2 cubic-fourfold sublattice");
    cmd_pc->add_option("--export", preset_export, "write the lattice file (- for stdout)");
    long p3_m = 0, p3_d = 0;
    std::string p3_export;
    auto* cmd_p3 = cmd_preset->add_subcommand("picard3", "rank-3 Picard family A(m, d)");
    cmd_p3->add_option("--m", p3_m, "m")->required();
    cmd_p3->add_option("--d", p3_d, "d")->required();
    cmd_p3->add_option("--export", p3_export, "write the lattice file (- for stdout)");
    std::string bd_export;
    auto* cmd_bd = cmd_preset->add_subcommand("bd", "degree-14 hyperkaehler form with lambda0");
    cmd_bd->add_option("--export", bd_export, "write the lattice file (- for stdout)");
    std::string cb_x2_s = "0", cb_xsx_s = "1";
    auto* cmd_cb = cmd_preset->add_subcommand("conic-parity", "q' parity for a regular rank-2 "
                                                              "module given (x^2, x.sigma x)");
    cmd_cb->add_option("--x2", cb_x2_s, "x^2")->required();
    cmd_cb->add_option("--xsx", cb_xsx_s, "x . sigma(x)")->required();

    // ---- bundle ------------------------------------------------------------
    auto* cmd_bundle = app.add_subcommand("bundle", "split-bundle calculus on the line");
    cmd_bundle->require_subcommand(1);
    std::string bh_degrees;
    int bh_m = 0;
    long long bh_k = 0;
    auto* cmd_bh = cmd_bundle->add_subcommand(
        "h0", "h^0 of the m-th relative hyperplane power twisted by k on P(E)");
    cmd_bh->add_option("--degrees", bh_degrees, "splitting type of E, comma separated")->required();
    cmd_bh->add_option("--m", bh_m, "symmetric power")->required();
    cmd_bh->add_option("--k", bh_k, "twist");

    // ---- chow ---------------------------------------------------------------
    auto* cmd_chow = app.add_subcommand("chow", "intersection ring of the relative Grassmannian");
    cmd_chow->require_subcommand(1);
    std::string cp_gamma, cp_lambda = "0";
    auto* cmd_cp = cmd_chow->add_subcommand("parity", "degeneration parity check");
    cmd_cp->add_option("--gamma", cp_gamma, "gamma1,gamma2,gamma3")->required();
    cmd_cp->add_option("--lambda", cp_lambda, "lambda")->required();
    std::string cs_gamma, cs_lambda = "0";
    auto* cmd_cs = cmd_chow->add_subcommand("class-s", "class of the degeneration surface");
    cmd_cs->add_option("--gamma", cs_gamma, "gamma1,gamma2,gamma3")->required();
    cmd_cs->add_option("--lambda", cs_lambda, "lambda")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage text
        return kExitInputError;
    }

    if (*cmd_dec) {
        FreeGModule m = load_gmodule(dec_file);
        GModuleDecomposition d = decompose(m);
        if (out.json) {
            out.emit_json(decomposition_json(d));
        } else {
            std::cout << "decomposition: " << d.str() << "\n"
                      << "(r0, r+, r-) = (" << d.r0 << ", " << d.r_plus << ", " << d.r_minus
                      << ")\n"
                      << "adapted basis:\n"
                      << d.adapted_basis.str() << "\n";
        }
        return kExitOk;
    }

    if (*cmd_coh) {
        FreeGModule m = load_gmodule(coh_file);
        FinAbGroup g = group_cohomology(m, coh_deg);
        if (out.json) {
            nlohmann::ordered_json j;
            j["degree"] = coh_deg;
            j["group"] = fab_json(g);
            out.emit_json(j);
        } else {
            std::cout << "H^" << coh_deg << "(G, M) = " << g.str() << "\n";
        }
        return kExitOk;
    }

    if (*cmd_prym) {
        nlohmann::json j = parse_json_input(prym_file);
        if (j.contains("gram")) {
            LatticeFile f = lattice_file_from_json(j);
            PrymLattice p = prym_lattice(f.lattice, sublattice_or_empty(f, "M"));
            if (out.json) {
                nlohmann::ordered_json r;
                r["basis"] = grid_to_json(p.basis);
                r["halved_gram"] = grid_to_json(p.halved_gram);
                r["rank"] = p.rank();
                out.emit_json(r);
            } else {
                std::cout << "Prym rank: " << p.rank() << "\nbasis (columns):\n"
                          << p.basis.str() << "\nhalved Gram:\n"
                          << p.halved_gram.str() << "\n";
            }
        } else {
            FreeGModule m = gmodule_from_json(j);
            IntMat p = prym_part(m);
            if (out.json) {
                nlohmann::ordered_json r;
                r["basis"] = grid_to_json(p);
                r["rank"] = p.cols();
                out.emit_json(r);
            } else {
                std::cout << "Prym part rank: " << p.cols() << "\nbasis (columns):\n"
                          << p.str() << "\n";
            }
        }
        return kExitOk;
    }

    if (*cmd_disc) {
        LatticeFile f = lattice_file_from_json(parse_json_input(disc_file));
        IntMat m = disc_use_m ? sublattice_or_empty(f, "M") : IntMat::identity(f.lattice.rank());
        DiscriminantGModule d = discriminant_group(f.lattice, m);
        if (out.json) {
            nlohmann::ordered_json j;
            j["group"] = fab_json(d.group);
            j["sigma_action"] = grid_to_json(d.sigma_action);
            if (d.plus_part) j["plus_part"] = fab_json(*d.plus_part);
            if (d.minus_part) j["minus_part"] = fab_json(*d.minus_part);
            j["name"] = d.str();
            out.emit_json(j);
        } else {
            std::cout << "discriminant group: " << d.str() << "\n";
        }
        return kExitOk;
    }

    if (*cmd_mod) {
        LatticeFile f = lattice_file_from_json(parse_json_input(mod_file));
        if (mod_sign != "+" && mod_sign != "-") throw InputError("--sign must be + or -");
        BilinearLattice b = modify(f.lattice.base, parse_int_list(mod_x),
                                   mod_sign == "+" ? ModSign::plus : ModSign::minus);
        if (out.json) {
            nlohmann::ordered_json j;
            j["gram"] = grid_to_json(b.gram);
            out.emit_json(j);
        } else {
            std::cout << "modified Gram:\n" << b.gram.str() << "\n";
        }
        return kExitOk;
    }

    auto mode_of = [](bool free_flag, long r, const char* who) {
        if (free_flag && r >= 0) throw InputError(std::string(who) + ": give --fixed-points or --free, not both");
        if (!free_flag && r < 0)
            throw InputError(std::string(who) + ": one of --fixed-points or --free is required");
        return free_flag ? SurfaceMode::free_action() : SurfaceMode::fixed(r);
    };

    if (*cmd_vr) {
        LatticeFile f = lattice_file_from_json(parse_json_input(vr_file));
        Report rep = verify_rank_formula(f.lattice, sublattice_or_empty(f, "M"),
                                         mode_of(vr_free, vr_r, "verify-rank"));
        return out.emit(rep);
    }

    if (*cmd_vd) {
        LatticeFile f = lattice_file_from_json(parse_json_input(vd_file));
        Report rep = verify_det_formula(f.lattice, sublattice_or_empty(f, "M"),
                                        mode_of(vd_free, vd_r, "verify-det"));
        return out.emit(rep);
    }

    if (*cmd_vc) {
        nlohmann::json j = parse_json_input(vc_file);
        for (const char* field : {"lambda_x", "w", "phi", "psi"})
            if (!j.contains(field))
                throw InputError(std::string("verify-correspondence input needs \"") + field +
                                 "\"");
        IntMat gx = grid_from_json(j.at("lambda_x").at("gram"));
        BilinearLattice lx(gx.rows(), gx);
        LatticeFile wf = lattice_file_from_json(j.at("w"));
        Report rep = verify_prym_correspondence(lx, wf.lattice, sublattice_or_empty(wf, "M"),
                                                matrix_from_json(j.at("phi")),
                                                matrix_from_json(j.at("psi")));
        return out.emit(rep);
    }

    if (*cmd_brk) {
        LatticeFile f = lattice_file_from_json(parse_json_input(brk_file));
        auto it = f.sublattices.find("Hdg");
        if (it == f.sublattices.end()) throw InputError("brauer k: sublattice Hdg required");
        FinAbGroup k = brauer_K(f.lattice, it->second);
        if (out.json) {
            nlohmann::ordered_json j;
            j["K"] = fab_json(k);
            out.emit_json(j);
        } else {
            std::cout << "K = " << k.str() << "\n";
        }
        return kExitOk;
    }

    if (*cmd_brs) {
        LatticeFile f = lattice_file_from_json(parse_json_input(brs_file));
        auto it = f.sublattices.find("Hdg");
        if (it == f.sublattices.end()) throw InputError("brauer seq: sublattice Hdg required");
        Report rep = verify_brauer_sequences(f.lattice, it->second, sublattice_or_empty(f, "M"),
                                             brs_level);
        return out.emit(rep);
    }

    if (*cmd_surf) {
        if (surf_free == (surf_r >= 0))
            throw InputError("surface: give exactly one of --r or --free");
        SurfaceInvariantReport rep =
            surf_free ? surface_structure_free(surf_h2) : surface_structure_fixed_points(surf_h2, surf_r);
        return out.emit(rep.to_report());
    }

    auto export_lattice = [&](const std::string& target, const LatticeFile& f) {
        if (target.empty()) return;
        nlohmann::ordered_json j = lattice_file_to_json(f);
        if (target == "-") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream of(target);
            if (!of) throw InputError("cannot write: " + target);
            of << j.dump(2) << "\n";
        }
    };

    if (*cmd_pc) {
        CubicPreset p = cubic_fourfold_M();
        LatticeFile f{p.lattice, {{"M", IntMat::identity(2)}}};
        if (!preset_export.empty()) {
            export_lattice(preset_export, f);
            return kExitOk;
        }
        return out.emit(p.to_report());
    }

    if (*cmd_p3) {
        Picard3Preset p = cubic_picard3(p3_m, p3_d);
        LatticeFile f{p.lattice, {{"M", IntMat::identity(3)}}};
        if (!p3_export.empty()) {
            export_lattice(p3_export, f);
            return kExitOk;
        }
        return out.emit(p.to_report());
    }

    if (*cmd_bd) {
        BeauvilleDonagiData d = beauville_donagi();
        if (!bd_export.empty()) {
            LatticeFile f{InvolutionLattice(d.b, IntMat::identity(23)),
                          {{"lambda0", IntMat::col_vector(d.lambda0)}}};
            export_lattice(bd_export, f);
            return kExitOk;
        }
        return out.emit(d.validation);
    }

    if (*cmd_cb) {
        return out.emit(conic_bundle_prym_parity(Int(cb_x2_s), Int(cb_xsx_s)));
    }

    if (*cmd_bh) {
        SplitBundle e(parse_ll_list(bh_degrees));
        SplitBundle pushed = twist(sym(dual(e), bh_m), bh_k);
        long long n = h0(pushed);
        if (out.json) {
            nlohmann::ordered_json j;
            j["degrees"] = bh_degrees;
            j["m"] = bh_m;
            j["k"] = bh_k;
            nlohmann::ordered_json split = nlohmann::ordered_json::array();
            for (long long dd : pushed.degrees) split.push_back(dd);
            j["pushforward_splitting"] = split;
            j["h0"] = n;
            out.emit_json(j);
        } else {
            std::cout << n << "\n";
        }
        return kExitOk;
    }

    auto ambient_of = [](const std::string& gamma_csv, const std::string& lambda_s) {
        auto g = parse_int_list(gamma_csv);
        if (g.size() != 3) throw InputError("--gamma needs exactly three entries");
        AmbientData a;
        a.gamma1 = g[0];
        a.gamma2 = g[1];
        a.gamma3 = g[2];
        a.lambda = Int(lambda_s);
        return a;
    };

    if (*cmd_cp) {
        ChowRing ring(ambient_of(cp_gamma, cp_lambda));
        return out.emit(ring.parity_check());
    }

    if (*cmd_cs) {
        ChowRing ring(ambient_of(cs_gamma, cs_lambda));
        RingElement s = ring.class_of_S();
        if (out.json) {
            nlohmann::ordered_json j;
            j["class_of_S"] = s.str();
            j["degeneration_degree"] = int_to_json(ring.degeneration_degree());
            out.emit_json(j);
        } else {
            std::cout << "[S] = " << s.str() << "\n"
                      << "degeneration degree = " << ring.degeneration_degree().str() << "\n";
        }
        return kExitOk;
    }

    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
