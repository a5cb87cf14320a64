#include "projcoh/projcoh.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include <json.hpp>

#include "core/cache.hpp"
#include "core/cochain.hpp"
#include "core/cohomology.hpp"
#include "core/extension.hpp"
#include "core/group.hpp"
#include "core/json_io.hpp"
#include "core/projrep.hpp"
#include "core/realize.hpp"

using nlohmann::json;

struct projcoh_group {
    projcoh::FiniteGroup g;
};
struct projcoh_cocycle {
    projcoh::Cochain2 w;
};
struct projcoh_cochain1 {
    projcoh::Cochain1 f;
};
struct projcoh_presentation {
    projcoh::FinAbPresentation p;
};
struct projcoh_rep {
    projcoh::FiniteGroup g;
    projcoh::ProjectiveRep r;
};
struct projcoh_extension {
    projcoh::CentralExtension e;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int64_t* dup_array(const std::vector<int64_t>& v) {
    int64_t* out = static_cast<int64_t*>(std::malloc(sizeof(int64_t) * (v.size() + 1)));
    if (!out) return nullptr;
    std::memcpy(out, v.data(), sizeof(int64_t) * v.size());
    return out;
}

template <typename F>
projcoh_status wrap(F&& fn) noexcept {
    try {
        fn();
        return PROJCOH_OK;
    } catch (const projcoh::domain_error& e) {
        g_last_error = e.what();
        return PROJCOH_ERR_DOMAIN;
    } catch (const projcoh::resource_error& e) {
        g_last_error = e.what();
        return PROJCOH_ERR_RESOURCE;
    } catch (const projcoh::io_error& e) {
        g_last_error = e.what();
        return PROJCOH_ERR_IO;
    } catch (const projcoh::internal_error& e) {
        g_last_error = e.what();
        return PROJCOH_ERR_INTERNAL;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PROJCOH_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PROJCOH_ERR_INTERNAL;
    }
}

projcoh_status invalid(const char* msg) {
    g_last_error = msg;
    return PROJCOH_ERR_INVALID;
}

json reason_to_json(const projcoh::Reason& r) {
    json j;
    switch (r.type) {
        case projcoh::ReasonType::class_trivial:
            j["type"] = "class_trivial";
            j["trivial"] = r.trivial;
            break;
        case projcoh::ReasonType::prime_support: {
            j["type"] = "prime_support";
            j["order"] = r.order;
            json fac = json::array();
            for (const auto& [p, e] : r.factorization) fac.push_back({p, e});
            j["factorization"] = std::move(fac);
            j["base"] = r.base;
            if (r.offending_prime) j["offending_prime"] = r.offending_prime;
            else j["power"] = r.power;
            break;
        }
        case projcoh::ReasonType::division_witness:
            j["type"] = "division_witness";
            j["n"] = r.n;
            j["witness"] = r.witness;
            break;
        case projcoh::ReasonType::division_infeasible:
            j["type"] = "division_infeasible";
            j["n"] = r.n;
            j["component"] = r.component;
            j["invariant_factor"] = r.invariant_factor;
            j["gcd"] = r.gcd_value;
            j["residue"] = r.residue;
            break;
        case projcoh::ReasonType::always_finite_group:
            j["type"] = "always_for_finite_groups";
            break;
    }
    return j;
}

json verdict_to_json(const projcoh::RealizabilityVerdict& v) {
    json j;
    j["algebra"] = v.algebra.name();
    j["realizable"] = v.realizable;
    j["reason"] = reason_to_json(v.reason);
    return j;
}

std::string dir_or_empty(const char* cache_dir) {
    return cache_dir ? std::string(cache_dir) : std::string();
}

} // namespace

extern "C" {

const char* projcoh_last_error(void) { return g_last_error.c_str(); }

void projcoh_string_free(char* s) { std::free(s); }
void projcoh_int_array_free(int64_t* a) { std::free(a); }
void projcoh_group_free(projcoh_group* g) { delete g; }
void projcoh_cocycle_free(projcoh_cocycle* w) { delete w; }
void projcoh_cochain1_free(projcoh_cochain1* f) { delete f; }
void projcoh_presentation_free(projcoh_presentation* p) { delete p; }
void projcoh_rep_free(projcoh_rep* r) { delete r; }
void projcoh_extension_free(projcoh_extension* e) { delete e; }

projcoh_status projcoh_group_preset(const char* spec, int64_t max_order,
                                    projcoh_group** out) {
    if (!spec || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_group{projcoh::preset_group(spec, max_order)}; });
}

projcoh_status projcoh_group_from_json(const char* text, projcoh_group** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_group{projcoh::group_from_json(text)}; });
}

projcoh_status projcoh_group_to_json(const projcoh_group* g, char** out) {
    if (!g || !out) return invalid("null argument");
    return wrap([&] { *out = dup_string(projcoh::group_to_json(g->g)); });
}

projcoh_status projcoh_group_order(const projcoh_group* g, int64_t* out) {
    if (!g || !out) return invalid("null argument");
    *out = g->g.order();
    return PROJCOH_OK;
}

projcoh_status projcoh_group_element_order(const projcoh_group* g, int64_t elem,
                                           int64_t* out) {
    if (!g || !out) return invalid("null argument");
    return wrap([&] { *out = projcoh::element_order(g->g, elem); });
}

projcoh_status projcoh_group_center(const projcoh_group* g, int64_t** elems,
                                    size_t* count) {
    if (!g || !elems || !count) return invalid("null argument");
    return wrap([&] {
        std::vector<int64_t> z = projcoh::center(g->g);
        *elems = dup_array(z);
        *count = z.size();
    });
}

projcoh_status projcoh_cocycle_from_json(const char* text, projcoh_cocycle** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_cocycle{projcoh::cocycle_from_json(text)}; });
}

projcoh_status projcoh_cocycle_to_json(const projcoh_cocycle* w, char** out) {
    if (!w || !out) return invalid("null argument");
    return wrap([&] { *out = dup_string(projcoh::cocycle_to_json(w->w)); });
}

projcoh_status projcoh_is_cocycle(const projcoh_group* g, const projcoh_cocycle* w,
                                  int* out) {
    if (!g || !w || !out) return invalid("null argument");
    return wrap([&] { *out = projcoh::is_cocycle(g->g, w->w) ? 1 : 0; });
}

projcoh_status projcoh_cocycle_normalize(const projcoh_group* g, const projcoh_cocycle* w,
                                         projcoh_cocycle** out_normalized,
                                         projcoh_cochain1** out_witness) {
    if (!g || !w || !out_normalized) return invalid("null argument");
    return wrap([&] {
        auto [norm, wit] = projcoh::normalize_cocycle(g->g, w->w);
        *out_normalized = new projcoh_cocycle{std::move(norm)};
        if (out_witness) *out_witness = new projcoh_cochain1{std::move(wit)};
    });
}

projcoh_status projcoh_is_coboundary(const projcoh_group* g, const projcoh_cocycle* w,
                                     int* solvable, projcoh_cochain1** witness) {
    if (!g || !w || !solvable) return invalid("null argument");
    return wrap([&] {
        std::optional<projcoh::Cochain1> f = projcoh::is_coboundary_zm(g->g, w->w);
        *solvable = f ? 1 : 0;
        if (witness) *witness = f ? new projcoh_cochain1{std::move(*f)} : nullptr;
    });
}

projcoh_status projcoh_random_cocycle(const projcoh_group* g, int64_t modulus,
                                      uint64_t seed, projcoh_cocycle** out) {
    if (!g || !out) return invalid("null argument");
    return wrap([&] {
        projcoh::FinAbPresentation p = projcoh::h2_zm(g->g, modulus);
        std::mt19937_64 rng(seed);
        *out = new projcoh_cocycle{projcoh::random_cocycle(g->g, p, rng)};
    });
}

projcoh_status projcoh_cochain1_from_json(const char* text, projcoh_cochain1** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_cochain1{projcoh::cochain1_from_json(text)}; });
}

projcoh_status projcoh_cochain1_to_json(const projcoh_cochain1* f, char** out) {
    if (!f || !out) return invalid("null argument");
    return wrap([&] { *out = dup_string(projcoh::cochain1_to_json(f->f)); });
}

projcoh_status projcoh_h2_zm(const projcoh_group* g, int64_t m, const char* cache_dir,
                             projcoh_presentation** out) {
    if (!g || !out) return invalid("null argument");
    return wrap([&] {
        *out = new projcoh_presentation{
            projcoh::h2_zm_cached(g->g, m, dir_or_empty(cache_dir))};
    });
}

projcoh_status projcoh_schur_multiplier(const projcoh_group* g, const char* cache_dir,
                                        projcoh_presentation** out) {
    if (!g || !out) return invalid("null argument");
    return wrap([&] {
        *out = new projcoh_presentation{
            projcoh::schur_multiplier_cached(g->g, dir_or_empty(cache_dir))};
    });
}

projcoh_status projcoh_presentation_to_json(const projcoh_presentation* p, char** out) {
    if (!p || !out) return invalid("null argument");
    return wrap([&] { *out = dup_string(projcoh::presentation_to_json(p->p)); });
}

projcoh_status projcoh_presentation_factors(const projcoh_presentation* p,
                                            int64_t** factors, size_t* count) {
    if (!p || !factors || !count) return invalid("null argument");
    return wrap([&] {
        *factors = dup_array(p->p.invariant_factors);
        *count = p->p.invariant_factors.size();
    });
}

projcoh_status projcoh_class_coords(const projcoh_group* g, const projcoh_cocycle* w,
                                    const projcoh_presentation* p, int64_t** coords,
                                    size_t* count) {
    if (!g || !w || !p || !coords || !count) return invalid("null argument");
    return wrap([&] {
        projcoh::CohomClass c = projcoh::class_coordinates(g->g, w->w, p->p);
        *coords = dup_array(c.coords);
        *count = c.coords.size();
    });
}

projcoh_status projcoh_class_order(const projcoh_group* g, const projcoh_cocycle* w,
                                   const projcoh_presentation* p, int64_t* out) {
    if (!g || !w || !p || !out) return invalid("null argument");
    return wrap([&] {
        projcoh::CohomClass c = projcoh::class_coordinates(g->g, w->w, p->p);
        *out = projcoh::class_order(p->p, c);
    });
}

projcoh_status projcoh_representative_of_order(const projcoh_group* g,
                                               const projcoh_presentation* p,
                                               const int64_t* coords, size_t count,
                                               projcoh_cocycle** out) {
    if (!g || !p || (!coords && count) || !out) return invalid("null argument");
    return wrap([&] {
        projcoh::CohomClass c{std::vector<int64_t>(coords, coords + count)};
        *out = new projcoh_cocycle{projcoh::representative_of_order(g->g, p->p, c)};
    });
}

projcoh_status projcoh_solve_division(const projcoh_presentation* p,
                                      const int64_t* coords, size_t count, int64_t n,
                                      int* solvable, int64_t** y, size_t* ycount) {
    if (!p || (!coords && count) || !solvable) return invalid("null argument");
    return wrap([&] {
        projcoh::CohomClass x{std::vector<int64_t>(coords, coords + count)};
        std::optional<projcoh::CohomClass> sol = projcoh::solve_division(p->p, x, n);
        *solvable = sol ? 1 : 0;
        if (y && ycount) {
            if (sol) {
                *y = dup_array(sol->coords);
                *ycount = sol->coords.size();
            } else {
                *y = nullptr;
                *ycount = 0;
            }
        }
    });
}

projcoh_status projcoh_rep_regular(const projcoh_group* g, const projcoh_cocycle* w,
                                   projcoh_rep** out) {
    if (!g || !w || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_rep{g->g, projcoh::regular_rep(g->g, w->w)}; });
}

projcoh_status projcoh_rep_lemma(const projcoh_group* g, const projcoh_cocycle* lam,
                                 int64_t dim_cap, projcoh_rep** out,
                                 char** diagnostics_json) {
    if (!g || !lam || !out) return invalid("null argument");
    return wrap([&] {
        projcoh::LemmaDiagnostics diag;
        projcoh::ProjectiveRep r = projcoh::lemma_rep(
            g->g, lam->w, dim_cap, diagnostics_json ? &diag : nullptr);
        if (diagnostics_json) {
            json j;
            j["dimension"] = r.dimension;
            j["full_dimension"] = diag.full_dimension;
            j["eigenspace_sizes"] = diag.eigenspace_sizes;
            j["commutes_with_adu"] = diag.commutes_with_adu;
            *diagnostics_json = dup_string(j.dump() + "\n");
        }
        *out = new projcoh_rep{g->g, std::move(r)};
    });
}

projcoh_status projcoh_rep_to_json(const projcoh_rep* r, char** out) {
    if (!r || !out) return invalid("null argument");
    return wrap([&] { *out = dup_string(projcoh::rep_to_json(r->g, r->r)); });
}

projcoh_status projcoh_rep_from_json(const char* text, projcoh_rep** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] {
        auto [g, r] = projcoh::rep_from_json(text);
        *out = new projcoh_rep{std::move(g), std::move(r)};
    });
}

projcoh_status projcoh_rep_dimension(const projcoh_rep* r, int64_t* out) {
    if (!r || !out) return invalid("null argument");
    *out = r->r.dimension;
    return PROJCOH_OK;
}

projcoh_status projcoh_rep_verify(const projcoh_rep* r, char** report_json) {
    if (!r || !report_json) return invalid("null argument");
    return wrap([&] {
        projcoh::RelationReport rel = projcoh::verify_relations(r->g, r->r);
        json j;
        j["ok"] = rel.ok;
        j["dimension"] = r->r.dimension;
        j["pairs_checked"] = rel.pairs_checked;
        if (rel.first_failure)
            j["first_failure"] = {rel.first_failure->first, rel.first_failure->second};
        else
            j["first_failure"] = nullptr;
        *report_json = dup_string(j.dump() + "\n");
    });
}

projcoh_status projcoh_rep_extract_cocycle(const projcoh_rep* r, projcoh_cocycle** out) {
    if (!r || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_cocycle{projcoh::extract_cocycle(r->g, r->r)}; });
}

projcoh_status projcoh_rep_lift(const projcoh_rep* r, const projcoh_cochain1* f,
                                projcoh_rep** out) {
    if (!r || !f || !out) return invalid("null argument");
    return wrap([&] {
        *out = new projcoh_rep{r->g, projcoh::lift_rep(r->g, r->r, f->f)};
    });
}

projcoh_status projcoh_rep_export_dense(const projcoh_rep* r, char** out_text) {
    if (!r || !out_text) return invalid("null argument");
    return wrap([&] { *out_text = dup_string(projcoh::rep_to_dense_text(r->r)); });
}

projcoh_status projcoh_extension_build(const projcoh_group* g, const projcoh_cocycle* w,
                                       projcoh_extension** out) {
    if (!g || !w || !out) return invalid("null argument");
    return wrap([&] {
        *out = new projcoh_extension{projcoh::build_central_extension(g->g, w->w)};
    });
}

projcoh_status projcoh_extension_to_json(const projcoh_extension* e, char** out) {
    if (!e || !out) return invalid("null argument");
    return wrap([&] { *out = dup_string(projcoh::extension_to_json(e->e)); });
}

projcoh_status projcoh_extension_from_json(const char* text, projcoh_extension** out) {
    if (!text || !out) return invalid("null argument");
    return wrap([&] { *out = new projcoh_extension{projcoh::extension_from_json(text)}; });
}

projcoh_status projcoh_extension_verify(const projcoh_extension* e, char** report_json) {
    if (!e || !report_json) return invalid("null argument");
    return wrap([&] {
        projcoh::ExtensionReport rep = projcoh::verify_extension(e->e);
        json j;
        j["all_ok"] = rep.all_ok();
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json cj;
            cj["name"] = c.name;
            cj["ok"] = c.ok;
            cj["witness"] = c.witness;
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        *report_json = dup_string(j.dump() + "\n");
    });
}

projcoh_status projcoh_realize(const projcoh_group* g, const projcoh_cocycle* w,
                               const char* algebras_csv, const char* cache_dir,
                               char** verdicts_json) {
    if (!g || !w || !algebras_csv || !verdicts_json) return invalid("null argument");
    return wrap([&] {
        std::vector<projcoh::AlgebraDescriptor> algebras;
        std::string csv(algebras_csv);
        size_t pos = 0;
        while (pos <= csv.size() && !csv.empty()) {
            size_t comma = csv.find(',', pos);
            std::string token = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            if (!token.empty()) algebras.push_back(projcoh::AlgebraDescriptor::parse(token));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        projcoh::FinAbPresentation p =
            projcoh::schur_multiplier_cached(g->g, dir_or_empty(cache_dir));
        projcoh::CohomClass x = projcoh::class_coordinates(g->g, w->w, p);
        std::vector<projcoh::RealizabilityVerdict> verdicts =
            projcoh::verdict_table(p, x, algebras);
        json out = json::array();
        for (const auto& v : verdicts) {
            if (!projcoh::reverify(p, x, v))
                throw projcoh::internal_error("verdict reason failed re-verification");
            out.push_back(verdict_to_json(v));
        }
        *verdicts_json = dup_string(out.dump() + "\n");
    });
}

projcoh_status projcoh_uhf_z2_rotation(int64_t num, int64_t den, int64_t n,
                                       char** verdict_json) {
    if (!verdict_json) return invalid("null argument");
    return wrap([&] {
        projcoh::RealizabilityVerdict v = projcoh::uhf_z2_rotation(num, den, n);
        if (!projcoh::reverify_rotation(num, den, v))
            throw projcoh::internal_error("rotation verdict failed re-verification");
        *verdict_json = dup_string(verdict_to_json(v).dump() + "\n");
    });
}

} // extern "C"
