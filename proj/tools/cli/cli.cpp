#include "cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "projcoh/projcoh.h"

namespace {

using nlohmann::json;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(projcoh_status st) {
    int code = 1;
    if (st == PROJCOH_ERR_INVALID) code = 2;
    throw CliError{code, projcoh_last_error()};
}

void check(projcoh_status st) {
    if (st != PROJCOH_OK) fail(st);
}

// RAII over the C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    explicit Handle(T* p) : ptr(p) {}
    ~Handle() { reset(); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    T** out() {
        reset();
        return &ptr;
    }
    T* get() const { return ptr; }
    void reset() {
        if (ptr) Free(ptr);
        ptr = nullptr;
    }
};

using GroupH = Handle<projcoh_group, projcoh_group_free>;
using CocycleH = Handle<projcoh_cocycle, projcoh_cocycle_free>;
using Cochain1H = Handle<projcoh_cochain1, projcoh_cochain1_free>;
using PresH = Handle<projcoh_presentation, projcoh_presentation_free>;
using RepH = Handle<projcoh_rep, projcoh_rep_free>;
using ExtH = Handle<projcoh_extension, projcoh_extension_free>;

std::string take_string(char* s) {
    if (!s) return {};
    std::string out(s);
    projcoh_string_free(s);
    return out;
}

std::vector<int64_t> take_array(int64_t* a, size_t n) {
    std::vector<int64_t> out(a, a + n);
    projcoh_int_array_free(a);
    return out;
}

struct Config {
    std::string format = "text";
    std::string cache_dir;
    int64_t max_order = 64;
    int64_t max_dim = 1 << 20;
    uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{1, "cannot open file '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{1, "cannot write file '" + path + "'"};
    out << content;
}

// Writes to the file when given, otherwise prints to the stream.
void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << content;
    else
        write_file(out_path, content);
}

GroupH load_group(const std::string& path, const Config& cfg) {
    GroupH g;
    check(projcoh_group_from_json(read_file(path).c_str(), g.out()));
    int64_t order = 0;
    projcoh_group_order(g.get(), &order);
    if (cfg.max_order > 0 && order > cfg.max_order)
        throw CliError{1, "group order " + std::to_string(order) + " exceeds the cap of " +
                              std::to_string(cfg.max_order)};
    return g;
}

CocycleH load_cocycle(const std::string& path) {
    CocycleH w;
    check(projcoh_cocycle_from_json(read_file(path).c_str(), w.out()));
    return w;
}

std::string bracket_list(const std::vector<int64_t>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string reason_text(const json& r) {
    const std::string type = r.at("type").get<std::string>();
    if (type == "class_trivial")
        return r.at("trivial").get<bool>() ? "class is trivial" : "class is nontrivial";
    if (type == "prime_support") {
        std::string s = "order " + std::to_string(r.at("order").get<int64_t>());
        if (r.contains("offending_prime"))
            s += ", prime " + std::to_string(r.at("offending_prime").get<int64_t>()) +
                 " does not divide " + std::to_string(r.at("base").get<int64_t>());
        else
            s += " divides " + std::to_string(r.at("base").get<int64_t>()) + "^" +
                 std::to_string(r.at("power").get<int64_t>());
        return s;
    }
    if (type == "division_witness") {
        std::vector<int64_t> w = r.at("witness").get<std::vector<int64_t>>();
        return "witness y = " + bracket_list(w) + " with " +
               std::to_string(r.at("n").get<int64_t>()) + "*y = x";
    }
    if (type == "division_infeasible")
        return "gcd(" + std::to_string(r.at("n").get<int64_t>()) + ", " +
               std::to_string(r.at("invariant_factor").get<int64_t>()) + ") = " +
               std::to_string(r.at("gcd").get<int64_t>()) + " does not divide coordinate " +
               std::to_string(r.at("residue").get<int64_t>());
    if (type == "always_for_finite_groups") return "always realizable for finite groups";
    return type;
}

struct Args {
    std::string group_file, cocycle_file, rep_file, cochain_file, ext_file;
    std::string out_file, witness_file, preset_spec, validate_file;
    int64_t modulus = 0;
    std::string algebras;
};

int dispatch(CLI::App& app, const Config& cfg, const Args& a, std::ostream& out) {
    auto got = [&](const std::string& name) { return app.got_subcommand(name); };

    if (got("group")) {
        CLI::App* grp = app.get_subcommand("group");
        if (grp->got_subcommand("preset")) {
            GroupH g;
            check(projcoh_group_preset(a.preset_spec.c_str(), cfg.max_order, g.out()));
            char* text = nullptr;
            check(projcoh_group_to_json(g.get(), &text));
            emit(take_string(text), a.out_file, out);
            if (!a.out_file.empty()) {
                int64_t order = 0;
                projcoh_group_order(g.get(), &order);
                out << "wrote " << a.out_file << " (order " << order << ")\n";
            }
            return 0;
        }
        if (grp->got_subcommand("validate")) {
            GroupH g = load_group(a.validate_file, cfg);
            int64_t order = 0;
            projcoh_group_order(g.get(), &order);
            if (cfg.format == "json")
                out << json{{"valid", true}, {"order", order}}.dump() << "\n";
            else
                out << "valid group of order " << order << "\n";
            return 0;
        }
    }

    if (got("cohomology")) {
        CLI::App* coh = app.get_subcommand("cohomology");
        GroupH g = load_group(a.group_file, cfg);
        PresH p;
        if (coh->got_subcommand("h2zm"))
            check(projcoh_h2_zm(g.get(), a.modulus, cfg.cache_dir.c_str(), p.out()));
        else
            check(projcoh_schur_multiplier(g.get(), cfg.cache_dir.c_str(), p.out()));
        char* text = nullptr;
        check(projcoh_presentation_to_json(p.get(), &text));
        std::string pres_json = take_string(text);
        if (!a.out_file.empty()) write_file(a.out_file, pres_json);
        int64_t* factors = nullptr;
        size_t count = 0;
        check(projcoh_presentation_factors(p.get(), &factors, &count));
        std::vector<int64_t> f = take_array(factors, count);
        if (cfg.format == "json")
            out << pres_json;
        else
            out << "invariant factors " << bracket_list(f) << "\n";
        return 0;
    }

    if (got("cocycle")) {
        CLI::App* coc = app.get_subcommand("cocycle");
        GroupH g = load_group(a.group_file, cfg);

        if (coc->got_subcommand("random")) {
            CocycleH w;
            check(projcoh_random_cocycle(g.get(), a.modulus, cfg.seed, w.out()));
            char* text = nullptr;
            check(projcoh_cocycle_to_json(w.get(), &text));
            emit(take_string(text), a.out_file, out);
            return 0;
        }

        CocycleH w = load_cocycle(a.cocycle_file);
        if (coc->got_subcommand("check")) {
            int ok = 0;
            check(projcoh_is_cocycle(g.get(), w.get(), &ok));
            if (cfg.format == "json")
                out << json{{"is_cocycle", ok != 0}}.dump() << "\n";
            else
                out << "is_cocycle: " << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (coc->got_subcommand("normalize")) {
            CocycleH norm;
            Cochain1H wit;
            check(projcoh_cocycle_normalize(g.get(), w.get(), norm.out(), wit.out()));
            char* text = nullptr;
            check(projcoh_cocycle_to_json(norm.get(), &text));
            emit(take_string(text), a.out_file, out);
            if (!a.witness_file.empty()) {
                check(projcoh_cochain1_to_json(wit.get(), &text));
                write_file(a.witness_file, take_string(text));
            }
            return 0;
        }

        PresH p;
        check(projcoh_schur_multiplier(g.get(), cfg.cache_dir.c_str(), p.out()));
        if (coc->got_subcommand("order")) {
            int64_t r = 0;
            check(projcoh_class_order(g.get(), w.get(), p.get(), &r));
            if (cfg.format == "json")
                out << json{{"order", r}}.dump() << "\n";
            else
                out << "class order " << r << "\n";
            return 0;
        }
        if (coc->got_subcommand("coords")) {
            int64_t* coords = nullptr;
            size_t count = 0;
            check(projcoh_class_coords(g.get(), w.get(), p.get(), &coords, &count));
            std::vector<int64_t> c = take_array(coords, count);
            int64_t* factors = nullptr;
            size_t fc = 0;
            check(projcoh_presentation_factors(p.get(), &factors, &fc));
            std::vector<int64_t> f = take_array(factors, fc);
            if (cfg.format == "json")
                out << json{{"invariant_factors", f}, {"coords", c}}.dump() << "\n";
            else
                out << "invariant factors " << bracket_list(f) << "; coords "
                    << bracket_list(c) << "\n";
            return 0;
        }
        if (coc->got_subcommand("representative")) {
            int64_t* coords = nullptr;
            size_t count = 0;
            check(projcoh_class_coords(g.get(), w.get(), p.get(), &coords, &count));
            std::vector<int64_t> c = take_array(coords, count);
            CocycleH rep;
            check(projcoh_representative_of_order(g.get(), p.get(), c.data(), c.size(),
                                                  rep.out()));
            char* text = nullptr;
            check(projcoh_cocycle_to_json(rep.get(), &text));
            emit(take_string(text), a.out_file, out);
            return 0;
        }
    }

    if (got("rep")) {
        CLI::App* rep = app.get_subcommand("rep");
        if (rep->got_subcommand("regular") || rep->got_subcommand("lemma")) {
            GroupH g = load_group(a.group_file, cfg);
            CocycleH w = load_cocycle(a.cocycle_file);
            RepH r;
            if (rep->got_subcommand("regular")) {
                check(projcoh_rep_regular(g.get(), w.get(), r.out()));
            } else {
                check(projcoh_rep_lemma(g.get(), w.get(), cfg.max_dim, r.out(), nullptr));
            }
            char* text = nullptr;
            check(projcoh_rep_to_json(r.get(), &text));
            emit(take_string(text), a.out_file, out);
            int64_t dim = 0;
            projcoh_rep_dimension(r.get(), &dim);
            if (!a.out_file.empty()) out << "dimension " << dim << "\n";
            return 0;
        }

        RepH r;
        check(projcoh_rep_from_json(read_file(a.rep_file).c_str(), r.out()));
        if (rep->got_subcommand("verify")) {
            char* text = nullptr;
            check(projcoh_rep_verify(r.get(), &text));
            json report = json::parse(take_string(text));
            if (cfg.format == "json") {
                out << report.dump() << "\n";
            } else {
                int64_t pairs = report.at("pairs_checked").get<int64_t>();
                if (report.at("ok").get<bool>()) {
                    out << "dimension " << report.at("dimension").get<int64_t>()
                        << ", relation verified " << pairs << "/" << pairs << "\n";
                } else {
                    auto ff = report.at("first_failure");
                    out << "dimension " << report.at("dimension").get<int64_t>()
                        << ", relation FAILED at pair (" << ff[0].get<int64_t>() << ","
                        << ff[1].get<int64_t>() << ")\n";
                }
            }
            return report.at("ok").get<bool>() ? 0 : 1;
        }
        if (rep->got_subcommand("extract")) {
            CocycleH w;
            check(projcoh_rep_extract_cocycle(r.get(), w.out()));
            char* text = nullptr;
            check(projcoh_cocycle_to_json(w.get(), &text));
            emit(take_string(text), a.out_file, out);
            return 0;
        }
        if (rep->got_subcommand("lift")) {
            Cochain1H f;
            check(projcoh_cochain1_from_json(read_file(a.cochain_file).c_str(), f.out()));
            RepH lifted;
            check(projcoh_rep_lift(r.get(), f.get(), lifted.out()));
            char* text = nullptr;
            check(projcoh_rep_to_json(lifted.get(), &text));
            emit(take_string(text), a.out_file, out);
            if (!a.out_file.empty()) out << "lifted to a genuine representation\n";
            return 0;
        }
    }

    if (got("extension")) {
        CLI::App* ext = app.get_subcommand("extension");
        if (ext->got_subcommand("build")) {
            GroupH g = load_group(a.group_file, cfg);
            CocycleH w = load_cocycle(a.cocycle_file);
            ExtH e;
            check(projcoh_extension_build(g.get(), w.get(), e.out()));
            char* text = nullptr;
            check(projcoh_extension_to_json(e.get(), &text));
            emit(take_string(text), a.out_file, out);
            return 0;
        }
        ExtH e;
        check(projcoh_extension_from_json(read_file(a.ext_file).c_str(), e.out()));
        char* text = nullptr;
        check(projcoh_extension_verify(e.get(), &text));
        json report = json::parse(take_string(text));
        if (cfg.format == "json") {
            out << report.dump() << "\n";
        } else {
            for (const json& c : report.at("checks")) {
                out << (c.at("ok").get<bool>() ? "ok   " : "FAIL ")
                    << c.at("name").get<std::string>();
                if (!c.at("ok").get<bool>())
                    out << " -- " << c.at("witness").get<std::string>();
                out << "\n";
            }
        }
        return report.at("all_ok").get<bool>() ? 0 : 1;
    }

    if (got("realize")) {
        GroupH g = load_group(a.group_file, cfg);
        CocycleH w = load_cocycle(a.cocycle_file);
        char* text = nullptr;
        check(projcoh_realize(g.get(), w.get(), a.algebras.c_str(), cfg.cache_dir.c_str(),
                              &text));
        json verdicts = json::parse(take_string(text));
        if (cfg.format == "json") {
            out << verdicts.dump() << "\n";
            return 0;
        }
        size_t width = 7;
        for (const json& v : verdicts)
            width = std::max(width, v.at("algebra").get<std::string>().size());
        std::string row;
        for (const json& v : verdicts) {
            std::string alg = v.at("algebra").get<std::string>();
            bool ok = v.at("realizable").get<bool>();
            out << alg << std::string(width + 2 - alg.size(), ' ')
                << (ok ? "true " : "false") << "  " << reason_text(v.at("reason")) << "\n";
            if (!row.empty()) row += ",";
            row += ok ? "true" : "false";
        }
        out << "verdicts: " << row << "\n";
        return 0;
    }

    throw CliError{2, "no subcommand given (try --help)"};
}

} // namespace

int projcoh_cli_run(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err) {
    CLI::App app{"exact second cohomology, projective representations and "
                 "operator-algebra realizability for finite groups"};
    app.require_subcommand(0, 1);

    Config cfg;
    if (const char* env = std::getenv("PROJCOH_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cache", cfg.cache_dir,
                   "presentation cache directory (env PROJCOH_CACHE_DIR)");
    app.add_option("--max-order", cfg.max_order, "group order cap")->capture_default_str();
    app.add_option("--max-dim", cfg.max_dim, "representation dimension cap")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized subcommands")
        ->capture_default_str();

    Args a;

    CLI::App* grp = app.add_subcommand("group", "construct and validate groups");
    CLI::App* grp_preset = grp->add_subcommand("preset", "build a preset family group");
    grp_preset->add_option("spec", a.preset_spec, "family spec, e.g. cyclic:4 or klein4")
        ->required();
    grp_preset->add_option("-o,--out", a.out_file, "output file");
    CLI::App* grp_validate = grp->add_subcommand("validate", "validate a group file");
    grp_validate->add_option("file", a.validate_file, "group JSON file")->required();
    grp->require_subcommand(1);

    CLI::App* coh = app.add_subcommand("cohomology", "cohomology presentations");
    CLI::App* coh_h2 = coh->add_subcommand("h2zm", "H^2(G, Z_m)");
    coh_h2->add_option("-g,--group", a.group_file)->required();
    coh_h2->add_option("-m,--modulus", a.modulus)->required();
    coh_h2->add_option("-o,--out", a.out_file);
    CLI::App* coh_schur = coh->add_subcommand("schur", "Schur multiplier H^2(G, T)");
    coh_schur->add_option("-g,--group", a.group_file)->required();
    coh_schur->add_option("-o,--out", a.out_file);
    coh->require_subcommand(1);

    CLI::App* coc = app.add_subcommand("cocycle", "2-cocycle operations");
    for (const char* name : {"check", "normalize", "order", "coords", "representative"}) {
        CLI::App* sub = coc->add_subcommand(name);
        sub->add_option("-g,--group", a.group_file)->required();
        sub->add_option("-c,--cocycle", a.cocycle_file)->required();
        if (std::string(name) == "normalize" || std::string(name) == "representative") {
            sub->add_option("-o,--out", a.out_file);
        }
        if (std::string(name) == "normalize")
            sub->add_option("--witness", a.witness_file, "witness 1-cochain output file");
    }
    CLI::App* coc_random = coc->add_subcommand("random", "seeded random cocycle");
    coc_random->add_option("-g,--group", a.group_file)->required();
    coc_random->add_option("-m,--modulus", a.modulus)->required();
    coc_random->add_option("-o,--out", a.out_file);
    coc->require_subcommand(1);

    CLI::App* rep = app.add_subcommand("rep", "projective representations");
    CLI::App* rep_regular = rep->add_subcommand("regular", "omega-regular representation");
    rep_regular->add_option("-g,--group", a.group_file)->required();
    rep_regular->add_option("-c,--cocycle", a.cocycle_file)->required();
    rep_regular->add_option("-o,--out", a.out_file);
    CLI::App* rep_lemma = rep->add_subcommand("lemma", "eigenspace construction");
    rep_lemma->add_option("-g,--group", a.group_file)->required();
    rep_lemma->add_option("-c,--cocycle", a.cocycle_file)->required();
    rep_lemma->add_option("-o,--out", a.out_file);
    CLI::App* rep_verify = rep->add_subcommand("verify", "verify the relation");
    rep_verify->add_option("-r,--rep", a.rep_file)->required();
    CLI::App* rep_extract = rep->add_subcommand("extract", "extract the cocycle");
    rep_extract->add_option("-r,--rep", a.rep_file)->required();
    rep_extract->add_option("-o,--out", a.out_file);
    CLI::App* rep_lift = rep->add_subcommand("lift", "divide out a coboundary witness");
    rep_lift->add_option("-r,--rep", a.rep_file)->required();
    rep_lift->add_option("-f,--witness", a.cochain_file)->required();
    rep_lift->add_option("-o,--out", a.out_file);
    rep->require_subcommand(1);

    CLI::App* ext = app.add_subcommand("extension", "central extensions");
    CLI::App* ext_build = ext->add_subcommand("build", "build G x_w N");
    ext_build->add_option("-g,--group", a.group_file)->required();
    ext_build->add_option("-c,--cocycle", a.cocycle_file)->required();
    ext_build->add_option("-o,--out", a.out_file);
    CLI::App* ext_verify = ext->add_subcommand("verify", "verify extension laws");
    ext_verify->add_option("-e,--extension", a.ext_file)->required();
    ext->require_subcommand(1);

    CLI::App* rel = app.add_subcommand("realize", "operator-algebra realizability");
    rel->add_option("-g,--group", a.group_file)->required();
    rel->add_option("-c,--cocycle", a.cocycle_file)->required();
    rel->add_option("--algebras", a.algebras, "comma list, e.g. jiangsu,uhf:2,O3,Oinf,O2")
        ->required();

    std::function<void(CLI::App*)> set_fallthrough = [&](CLI::App* s) {
        for (CLI::App* c : s->get_subcommands({})) {
            c->fallthrough();
            set_fallthrough(c);
        }
    };
    set_fallthrough(&app);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app, cfg, a, out);
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return e.exit_code;
    }
}
